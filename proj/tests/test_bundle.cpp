#include <algorithm>

#include "doctest.h"
#include "eqb/bundle.hpp"

using namespace eqb;

namespace {

SpaceSpec point_space(const GroupPtr& g, int d = 0) {
  SpaceSpec s;
  s.group = g;
  StratumSpec st;
  st.id = "pt";
  st.stabiliser = full_subgroup(g);
  st.d = d;
  st.components = {"c0"};
  s.strata = {st};
  return s;
}

int odd_index(const StratumContext& sc) {
  for (size_t i = 0; i < sc.real_set.irreps.size(); ++i)
    if (sc.real_set.irreps[i].odd) return (int)i;
  return -1;
}

}  // namespace

TEST_CASE("validation basics") {
  auto q8 = make_quaternion8();
  auto space = point_space(q8);
  auto ctx = SpaceContext::build(space);

  // Empty fibre data is a valid rank-0 bundle.
  BundleSpec empty = zero_bundle(space, Field::R, true);
  auto rep = validate(empty, ctx);
  CHECK(rep.ok);
  CHECK(rep.ranks.at({"pt", "c0"}) == 0);

  // One copy of the 4-dimensional odd irrep: real rank 4.
  BundleSpec v = empty;
  std::vector<int> m(irrep_count(ctx.strata[0], Field::R), 0);
  int oi = odd_index(ctx.strata[0]);
  REQUIRE(oi >= 0);
  m[oi] = 1;
  v.fibres[{"pt", "c0"}] = m;
  rep = validate(v, ctx);
  CHECK(rep.ok);
  CHECK(rep.ranks.at({"pt", "c0"}) == 4);

  // Odd flag with weight on the trivial character is rejected.
  BundleSpec bad = empty;
  std::vector<int> mb(m.size(), 0);
  for (size_t i = 0; i < mb.size(); ++i)
    if (!ctx.strata[0].real_set.irreps[i].odd &&
        ctx.strata[0].real_set.irreps[i].real_dim == 1) {
      mb[i] = 1;
      break;
    }
  bad.fibres[{"pt", "c0"}] = mb;
  rep = validate(bad, ctx);
  CHECK_FALSE(rep.ok);

  // Negative multiplicities are rejected.
  BundleSpec neg = empty;
  std::vector<int> mn(m.size(), 0);
  mn[oi] = -1;
  neg.fibres[{"pt", "c0"}] = mn;
  CHECK_FALSE(validate(neg, ctx).ok);

  // Unknown component keys are rejected.
  BundleSpec stray = empty;
  stray.fibres[{"pt", "nope"}] = m;
  CHECK_FALSE(validate(stray, ctx).ok);
}

TEST_CASE("adjacency compatibility") {
  auto d8 = make_dihedral8();
  SpaceSpec space;
  space.group = d8;
  StratumSpec fixed;
  fixed.id = "fixed";
  fixed.stabiliser = full_subgroup(d8);
  fixed.d = 0;
  fixed.components = {"x"};
  StratumSpec free;
  free.id = "free";
  free.stabiliser = subgroup_generated(d8, {1});
  free.d = 1;
  free.components = {"y"};
  space.strata = {fixed, free};
  space.adjacency = {{"free", "y", "fixed", "x"}};

  auto ctx = SpaceContext::build(space);

  // Odd D8 irrep restricts to the odd Z/4 irrep, so weight 1 on each side
  // is compatible.
  BundleSpec b;
  b.space = space;
  b.field = Field::R;
  b.odd = true;
  {
    std::vector<int> mf(irrep_count(ctx.strata[0], Field::R), 0);
    mf[odd_index(ctx.strata[0])] = 1;
    b.fibres[{"fixed", "x"}] = mf;
    std::vector<int> ml(irrep_count(ctx.strata[1], Field::R), 0);
    ml[odd_index(ctx.strata[1])] = 1;
    b.fibres[{"free", "y"}] = ml;
  }
  CHECK(validate(b, ctx).ok);

  // Doubling only one side breaks restriction compatibility.
  BundleSpec b2 = b;
  b2.fibres[{"free", "y"}][odd_index(ctx.strata[1])] = 2;
  CHECK_FALSE(validate(b2, ctx).ok);
}

TEST_CASE("direct sums") {
  auto z4 = make_cyclic(4, 2);
  auto space = point_space(z4);
  auto ctx = SpaceContext::build(space);
  int n = irrep_count(ctx.strata[0], Field::R);

  BundleSpec a = zero_bundle(space, Field::R, true);
  BundleSpec b = a;
  std::vector<int> ma(n, 0), mb(n, 0);
  int oi = odd_index(ctx.strata[0]);
  ma[oi] = 1;
  mb[oi] = 2;
  a.fibres[{"pt", "c0"}] = ma;
  b.fibres[{"pt", "c0"}] = mb;

  auto s = direct_sum(a, b);
  CHECK(s.fibre("pt", "c0")[oi] == 3);
  CHECK(component_rank(s, ctx, "pt", "c0") ==
        component_rank(a, ctx, "pt", "c0") +
            component_rank(b, ctx, "pt", "c0"));

  // Commutative and associative at data level; zero bundle is neutral.
  auto s2 = direct_sum(b, a);
  CHECK(s.fibres == s2.fibres);
  auto left = direct_sum(direct_sum(a, b), a);
  auto right = direct_sum(a, direct_sum(b, a));
  CHECK(left.fibres == right.fibres);
  auto z = direct_sum(a, zero_bundle(space, Field::R, true));
  CHECK(z.fibres.at({"pt", "c0"}) == ma);

  auto other_space = point_space(make_quaternion8());
  auto c = zero_bundle(other_space, Field::R, true);
  CHECK_THROWS_AS(direct_sum(a, c), Error);
}

TEST_CASE("trivial bundles from the odd regular representation") {
  auto q8 = make_quaternion8();
  auto g_set = real_irreps(q8);

  std::vector<int> reg_odd(g_set.irreps.size(), 0);
  for (size_t i = 0; i < g_set.irreps.size(); ++i)
    if (g_set.irreps[i].odd)
      reg_odd[i] = g_set.irreps[i].real_dim / g_set.irreps[i].c;

  // Full stabiliser: multiplicity 1 per copy on the 4-dimensional odd irrep.
  auto space = point_space(q8);
  auto ctx = SpaceContext::build(space);
  auto t1 = trivial_bundle(space, Field::R, reg_odd, 1);
  CHECK(t1.odd);
  CHECK(t1.fibre("pt", "c0")[odd_index(ctx.strata[0])] == 1);
  CHECK(component_rank(t1, ctx, "pt", "c0") == 4);

  auto t3 = trivial_bundle(space, Field::R, reg_odd, 3);
  CHECK(t3.fibre("pt", "c0")[odd_index(ctx.strata[0])] == 3);

  // Index-2 stabiliser <a>: multiplicities [G:H] * dim/c = 2 per copy.
  SpaceSpec space2;
  space2.group = q8;
  StratumSpec st;
  st.id = "s";
  st.stabiliser = subgroup_generated(q8, {1});
  st.d = 0;
  st.components = {"c"};
  space2.strata = {st};
  auto ctx2 = SpaceContext::build(space2);
  auto t_sub = trivial_bundle(space2, Field::R, reg_odd, 1);
  int oi2 = odd_index(ctx2.strata[0]);
  CHECK(t_sub.fibre("s", "c")[oi2] == 2);
  CHECK(component_rank(t_sub, ctx2, "s", "c") == 4);

  // Zero copies gives the zero bundle.
  auto t0 = trivial_bundle(space, Field::R, reg_odd, 0);
  CHECK(component_rank(t0, ctx, "pt", "c0") == 0);
}

TEST_CASE("gamma translation: real structure over a fixed point") {
  // G = Z/2 acting by conjugation, rank-1 fibre: the result is an odd
  // bundle over the dihedral group with weight 1 on its 2-dimensional
  // odd irrep.
  auto z2 = make_cyclic(2);
  GammaBundle gb;
  gb.group = z2;
  gb.gamma = {0, 1};
  gb.space = point_space(z2);
  gb.fibres[{"pt", "c0"}] = {1};  // unitary part is trivial: rank only

  auto out = translate_gamma_to_real(gb);
  CHECK(out.field == Field::R);
  CHECK(out.odd);
  CHECK(is_isomorphic(*out.space.group, *make_dihedral8()));

  auto ctx = SpaceContext::build(out.space);
  CHECK(validate(out, ctx).ok);
  CHECK(component_rank(out, ctx, "pt", "c0") == 2);
  const auto& m = out.fibre("pt", "c0");
  for (size_t i = 0; i < m.size(); ++i) {
    const auto& rho = ctx.strata[0].real_set.irreps[i];
    CHECK(m[i] == ((rho.odd && rho.real_dim == 2) ? 1 : 0));
  }
}

TEST_CASE("gamma translation: trivial action") {
  // Trivial G, trivial gamma, rank k: weight k on the odd irrep of Z/4.
  auto triv = make_trivial();
  GammaBundle gb;
  gb.group = triv;
  gb.gamma = {0};
  gb.space = point_space(triv, 2);
  gb.fibres[{"pt", "c0"}] = {3};

  auto out = translate_gamma_to_real(gb);
  CHECK(is_isomorphic(*out.space.group, *make_cyclic(4, 2)));
  auto ctx = SpaceContext::build(out.space);
  CHECK(validate(out, ctx).ok);
  CHECK(component_rank(out, ctx, "pt", "c0") == 6);
  const auto& m = out.fibre("pt", "c0");
  int nonzero = 0;
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i]) {
      ++nonzero;
      CHECK(m[i] == 3);
      CHECK(ctx.strata[0].real_set.irreps[i].odd);
      CHECK(ctx.strata[0].real_set.irreps[i].real_dim == 2);
    }
  CHECK(nonzero == 1);
}

TEST_CASE("gamma translation: quaternionic structure") {
  // G = Z/4 with gamma the projection; the fibre data lives over the
  // unitary part {[0],[2]} ~ Z/2 and a quaternionic fibre of complex rank
  // k has [2] acting by -1, so all weight sits on the sign character.
  auto z4 = make_cyclic(4);
  GammaBundle gb;
  gb.group = z4;
  gb.gamma = {0, 1, 0, 1};
  gb.space = point_space(z4);
  gb.fibres[{"pt", "c0"}] = {0, 2};  // [trivial, sign] of the unitary part

  auto out = translate_gamma_to_real(gb);
  CHECK(out.space.group->order() == 16);
  auto ctx = SpaceContext::build(out.space);
  CHECK(validate(out, ctx).ok);
  CHECK(component_rank(out, ctx, "pt", "c0") == 4);
  const auto& m = out.fibre("pt", "c0");
  int hits = 0;
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i]) {
      ++hits;
      CHECK(m[i] == 1);
      CHECK(ctx.strata[0].real_set.irreps[i].odd);
      CHECK(ctx.strata[0].real_set.irreps[i].real_dim == 4);
      CHECK(ctx.strata[0].real_set.irreps[i].c == 4);
    }
  CHECK(hits == 1);

  // Odd complex rank cannot carry a quaternionic structure.
  GammaBundle bad = gb;
  bad.fibres[{"pt", "c0"}] = {0, 1};
  CHECK_THROWS_AS(translate_gamma_to_real(bad), Error);
}

TEST_CASE("gamma translation rank doubling on random data") {
  auto z2 = make_cyclic(2);
  for (int m0 = 0; m0 <= 2; ++m0)
    for (int m1 = 0; m1 <= 2; ++m1) {
      GammaBundle gb;
      gb.group = z2;
      gb.gamma = {0, 0};  // trivial pattern: plain complex bundles
      gb.space = point_space(z2, 1);
      gb.fibres[{"pt", "c0"}] = {m0, m1};
      auto out = translate_gamma_to_real(gb);
      auto ctx = SpaceContext::build(out.space);
      CHECK(validate(out, ctx).ok);
      CHECK(component_rank(out, ctx, "pt", "c0") == 2 * (m0 + m1));
      CHECK(out.odd);
    }
}

TEST_CASE("field H bookkeeping") {
  auto triv = make_trivial();
  auto space = point_space(triv, 7);
  auto ctx = SpaceContext::build(space);
  CHECK(irrep_count(ctx.strata[0], Field::H) == 1);
  CHECK(irrep_dim(ctx.strata[0], Field::H, 0) == 1);
  CHECK(irrep_commutant(ctx.strata[0], Field::H, 0) == 4);

  std::vector<int> one = {1};
  auto t = trivial_bundle(space, Field::H, one, 2);
  CHECK(component_rank(t, ctx, "pt", "c0") == 2);
}
