#include "eqb/criteria.hpp"

#include <algorithm>
#include <cmath>

namespace eqb {

namespace {

long long ceil_div(long long a, long long b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

void require_valid(const BundleSpec& b, const SpaceContext& ctx,
                   const char* which) {
  auto rep = validate(b, ctx);
  if (!rep.ok)
    throw Error(ErrorCode::domain,
                std::string(which) + " bundle invalid: " +
                    rep.issues[0].where + ": " + rep.issues[0].message);
}

std::vector<int> fibre_of(const BundleSpec& b, const SpaceContext& ctx,
                          int si, const std::string& comp) {
  const auto& s = b.space.strata[si];
  const auto& stored = b.fibre(s.id, comp);
  std::vector<int> out(irrep_count(ctx.strata[si], b.field), 0);
  if (!stored.empty()) std::copy(stored.begin(), stored.end(), out.begin());
  return out;
}

bool all_component_ranks_are(const BundleSpec& b, const SpaceContext& ctx,
                             int want) {
  for (size_t si = 0; si < b.space.strata.size(); ++si)
    for (const auto& comp : b.space.strata[si].components)
      if (component_rank(b, ctx, b.space.strata[si].id, comp) != want)
        return false;
  return true;
}

}  // namespace

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Guaranteed: return "Guaranteed";
    case Outcome::Impossible: return "Impossible";
    case Outcome::Unknown: return "Unknown";
  }
  return "?";
}

const char* row_status_name(RowStatus s) {
  switch (s) {
    case RowStatus::satisfied: return "satisfied";
    case RowStatus::violated_necessary: return "violated_necessary";
    case RowStatus::below_sufficient: return "below_sufficient";
  }
  return "?";
}

Verdict embed_verdict(const BundleSpec& v, const BundleSpec& e,
                      const TableOptions& opt) {
  if (!same_space(v.space, e.space))
    throw Error(ErrorCode::domain, "bundles live on different spaces");
  if (v.field != e.field || v.odd != e.odd)
    throw Error(ErrorCode::domain, "bundles have mismatched field or oddness");
  auto ctx = SpaceContext::build(v.space, opt);
  require_valid(v, ctx, "V");
  require_valid(e, ctx, "E");

  Verdict out;
  bool any_violated = false;
  bool all_satisfied = true;
  for (size_t si = 0; si < v.space.strata.size(); ++si) {
    const auto& s = v.space.strata[si];
    const auto& sc = ctx.strata[si];
    for (const auto& comp : s.components) {
      auto mv = fibre_of(v, ctx, (int)si, comp);
      auto me = fibre_of(e, ctx, (int)si, comp);
      for (size_t i = 0; i < mv.size(); ++i) {
        if (mv[i] == 0) continue;
        int c = irrep_commutant(sc, v.field, (int)i);
        long long required = mv[i] + ceil_div(s.d + 1 - c, c);
        VerdictRow row;
        row.stratum = s.id;
        row.component = comp;
        row.irrep = irrep_label(sc, v.field, (int)i);
        row.required = required;
        row.actual = me[i];
        if (me[i] < mv[i]) {
          row.status = RowStatus::violated_necessary;
          any_violated = true;
          all_satisfied = false;
        } else if (me[i] >= required) {
          row.status = RowStatus::satisfied;
        } else {
          row.status = RowStatus::below_sufficient;
          all_satisfied = false;
        }
        out.rows.push_back(std::move(row));
      }
    }
  }
  if (any_violated)
    out.outcome = Outcome::Impossible;
  else if (all_satisfied)
    out.outcome = Outcome::Guaranteed;
  else
    out.outcome = Outcome::Unknown;
  return out;
}

Verdict stable_iso_verdict(const BundleSpec& e1, const BundleSpec& e2,
                           const BundleSpec& v, const TableOptions& opt) {
  if (!same_space(e1.space, e2.space) || !same_space(e1.space, v.space))
    throw Error(ErrorCode::domain, "bundles live on different spaces");
  if (e1.field != e2.field || e1.field != v.field || e1.odd != e2.odd ||
      e1.odd != v.odd)
    throw Error(ErrorCode::domain, "bundles have mismatched field or oddness");
  auto ctx = SpaceContext::build(e1.space, opt);
  require_valid(e1, ctx, "E1");
  require_valid(e2, ctx, "E2");
  require_valid(v, ctx, "V");

  Verdict out;
  out.hypothesis_asserted = true;

  // The only checkable consequence of E1 (+) V ~ E2 (+) V is that the
  // summed multiplicity data agrees, which after cancellation means the
  // data of E1 and E2 agree outright.
  bool mismatch = false;
  std::vector<VerdictRow> mismatch_rows;
  for (size_t si = 0; si < e1.space.strata.size(); ++si) {
    const auto& s = e1.space.strata[si];
    const auto& sc = ctx.strata[si];
    for (const auto& comp : s.components) {
      auto m1 = fibre_of(e1, ctx, (int)si, comp);
      auto m2 = fibre_of(e2, ctx, (int)si, comp);
      auto mv = fibre_of(v, ctx, (int)si, comp);
      for (size_t i = 0; i < m1.size(); ++i) {
        if (m1[i] == m2[i]) continue;
        mismatch = true;
        VerdictRow row;
        row.stratum = s.id;
        row.component = comp;
        row.irrep = irrep_label(sc, e1.field, (int)i);
        row.required = m1[i] + mv[i];
        row.actual = m2[i] + mv[i];
        row.status = RowStatus::violated_necessary;
        mismatch_rows.push_back(std::move(row));
      }
    }
  }
  if (mismatch) {
    out.outcome = Outcome::Impossible;
    out.rows = std::move(mismatch_rows);
    out.note = "stable isomorphism hypothesis unsatisfiable: "
               "E1 (+) V and E2 (+) V have different multiplicity data";
    return out;
  }

  bool all_satisfied = true;
  std::vector<VerdictRow> rows;
  for (size_t si = 0; si < e1.space.strata.size(); ++si) {
    const auto& s = e1.space.strata[si];
    const auto& sc = ctx.strata[si];
    for (const auto& comp : s.components) {
      auto m1 = fibre_of(e1, ctx, (int)si, comp);
      auto mv = fibre_of(v, ctx, (int)si, comp);
      for (size_t i = 0; i < mv.size(); ++i) {
        if (mv[i] == 0) continue;
        int c = irrep_commutant(sc, e1.field, (int)i);
        long long required = std::max(0LL, ceil_div(s.d + 2 - c, c));
        VerdictRow row;
        row.stratum = s.id;
        row.component = comp;
        row.irrep = irrep_label(sc, e1.field, (int)i);
        row.required = required;
        row.actual = m1[i];
        row.status = m1[i] >= required ? RowStatus::satisfied
                                       : RowStatus::below_sufficient;
        if (row.status != RowStatus::satisfied) all_satisfied = false;
        rows.push_back(std::move(row));
      }
    }
  }

  if (all_satisfied) {
    out.outcome = Outcome::Guaranteed;
    out.rows = std::move(rows);
    return out;
  }

  // Zero bundles are isomorphic outright.
  if (all_component_ranks_are(e1, ctx, 0)) {
    out.outcome = Outcome::Guaranteed;
    out.zero_rank_shortcut = true;
    out.note = "both bundles have rank zero";
    for (const auto& s : e1.space.strata)
      for (const auto& comp : s.components)
        out.rows.push_back({s.id, comp, "rank", 0, 0, RowStatus::satisfied});
    return out;
  }

  // Line bundles over R or C: the top exterior power unstabilises any
  // stable isomorphism regardless of dimensions.  Fails over H.
  if ((e1.field == Field::R || e1.field == Field::C) &&
      all_component_ranks_are(e1, ctx, 1)) {
    out.outcome = Outcome::Guaranteed;
    out.line_rule_applied = true;
    out.note = "rank-1 bundles over " + std::string(field_name(e1.field)) +
               ": stable isomorphism implies isomorphism";
    for (const auto& s : e1.space.strata)
      for (const auto& comp : s.components)
        out.rows.push_back({s.id, comp, "rank", 1, 1, RowStatus::satisfied});
    return out;
  }

  out.outcome = Outcome::Unknown;
  out.rows = std::move(rows);
  return out;
}

std::vector<int> regular_odd_multiplicities(const RealIrrepSet& set) {
  std::vector<int> out(set.irreps.size(), 0);
  for (size_t i = 0; i < set.irreps.size(); ++i)
    if (set.irreps[i].odd)
      out[i] = set.irreps[i].real_dim / set.irreps[i].c;
  return out;
}

int swan_rank(const BundleSpec& v, const TableOptions& opt) {
  if (!v.odd || v.field != Field::R)
    throw Error(ErrorCode::domain, "swan rank needs an odd real bundle");
  if (!v.space.group->t())
    throw Error(ErrorCode::domain, "group has no involution t");
  auto ctx = SpaceContext::build(v.space, opt);
  require_valid(v, ctx, "V");

  long long r = 0;
  bool nonzero = false;
  int g_order = v.space.group->order();
  for (size_t si = 0; si < v.space.strata.size(); ++si) {
    const auto& s = v.space.strata[si];
    const auto& sc = ctx.strata[si];
    if (!sc.sub.group->t())
      throw Error(ErrorCode::domain,
                  "stabiliser of stratum " + s.id + " does not contain t");
    int index = g_order / sc.sub.group->order();
    for (const auto& comp : s.components) {
      auto m = fibre_of(v, ctx, (int)si, comp);
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        nonzero = true;
        const auto& rho = sc.real_set.irreps[i];
        long long num = (long long)rho.c * m[i] + s.d + 1 - rho.c;
        r = std::max(r, ceil_div(num, (long long)index * rho.real_dim));
      }
    }
  }
  if (!nonzero) return 0;
  return (int)std::max(1LL, r);
}

SwanReport swan_selfcheck(const BundleSpec& v, const TableOptions& opt) {
  SwanReport rep;
  rep.r = swan_rank(v, opt);
  auto ctx = SpaceContext::build(v.space, opt);

  int max_rank = 0, max_d = 0;
  for (const auto& s : v.space.strata) {
    max_d = std::max(max_d, s.d);
    for (const auto& comp : s.components)
      max_rank = std::max(max_rank, component_rank(v, ctx, s.id, comp));
  }
  rep.upper_bound = max_rank + max_d + 1;

  auto g_set = real_irreps(v.space.group, opt);
  auto reg_odd = regular_odd_multiplicities(g_set);

  auto trivial_r = trivial_bundle(v.space, Field::R, reg_odd, rep.r, opt);
  rep.guaranteed_at_r =
      embed_verdict(v, trivial_r, opt).outcome == Outcome::Guaranteed;
  if (rep.r >= 1) {
    auto trivial_below =
        trivial_bundle(v.space, Field::R, reg_odd, rep.r - 1, opt);
    rep.not_guaranteed_below =
        embed_verdict(v, trivial_below, opt).outcome != Outcome::Guaranteed;
  } else {
    rep.not_guaranteed_below = true;
  }
  rep.pass = rep.guaranteed_at_r && rep.not_guaranteed_below &&
             rep.r <= rep.upper_bound;
  if (!rep.pass)
    throw Error(ErrorCode::internal, "swan self-check failed");
  return rep;
}

namespace {

struct ThresholdStratum {
  int d = 0;
  // (unit in setting rank units, commutant) per irrep that can carry fibre
  // multiplicity in the setting.
  std::vector<std::pair<int, int>> irreps;
};

struct Instantiation {
  std::vector<ThresholdStratum> strata;
  bool rank_ceil = false;  // reflection_time display: ceil after scaling
  std::string units;
  std::string description;
};

Instantiation instantiate(const ThresholdQuery& q, const TableOptions& opt) {
  Instantiation inst;
  auto odd_unique = [&](const GroupPtr& g) {
    auto set = real_irreps(g, opt);
    auto rho = unique_odd_irrep(set);
    if (!rho)
      throw Error(ErrorCode::domain,
                  "stabiliser has no unique odd irrep; use the general "
                  "checker");
    return *rho;
  };

  switch (q.setting) {
    case ThresholdSetting::plain: {
      if (q.d < 0) throw Error(ErrorCode::domain, "d must be >= 0");
      int c = q.field == Field::R ? 1 : q.field == Field::C ? 2 : 4;
      inst.strata.push_back({q.d, {{1, c}}});
      inst.units = std::string(field_name(q.field)) + "-rank";
      inst.description = "single stratum, trivial group, dimension d";
      break;
    }
    case ThresholdSetting::real_involution: {
      auto fixed = odd_unique(make_dihedral8());
      auto d8 = make_dihedral8();
      auto rot = subgroup_as_group(subgroup_generated(d8, {1}));
      auto free_rho = odd_unique(rot.group);
      inst.strata.push_back({q.d0, {{fixed.real_dim / 2, fixed.c}}});
      inst.strata.push_back({q.d1, {{free_rho.real_dim / 2, free_rho.c}}});
      inst.units = "complex rank";
      inst.description =
          "conjugate-linear involution squaring to +1: fixed stratum over "
          "the dihedral group, free stratum over its rotation subgroup";
      break;
    }
    case ThresholdSetting::quaternionic: {
      auto q8 = make_quaternion8();
      auto fixed = odd_unique(q8);
      auto sub = subgroup_as_group(subgroup_generated(q8, {1}));
      auto free_rho = odd_unique(sub.group);
      inst.strata.push_back({q.d0, {{fixed.real_dim / 2, fixed.c}}});
      inst.strata.push_back({q.d1, {{free_rho.real_dim / 2, free_rho.c}}});
      inst.units = "complex rank";
      inst.description =
          "conjugate-linear involution squaring to -1: fixed stratum over "
          "the quaternion group, free stratum over its index-2 cyclic "
          "subgroup";
      break;
    }
    case ThresholdSetting::point_reflection: {
      if (q.d < 0) throw Error(ErrorCode::domain, "d must be >= 0");
      // Fixed points carry two complex characters, both with c = 2 and unit
      // rank; the interior stratum is free with dimension d.
      inst.strata.push_back({0, {{1, 2}, {1, 2}}});
      inst.strata.push_back({q.d, {{1, 2}}});
      inst.units = "complex rank";
      inst.description =
          "torus with momentum reversal: isolated fixed points plus a free "
          "stratum of dimension d; fibrewise containment at the fixed "
          "points is a separate necessary condition";
      break;
    }
    case ThresholdSetting::reflection_time: {
      if (((q.a + q.b) & 1) != 1)
        throw Error(ErrorCode::domain,
                    "reflection+time thresholds need a+b = 1 mod 2; with "
                    "a = b the fixed-point group has two odd irreps, use "
                    "the general checker");
      auto fixed = odd_unique(make_clifford_group(1, 2));
      auto free_rho = (q.b % 2 == 0) ? odd_unique(make_clifford_group(1, 1))
                                     : odd_unique(make_clifford_group(0, 2));
      inst.strata.push_back({q.d0, {{fixed.real_dim, fixed.c}}});
      inst.strata.push_back({q.d1, {{free_rho.real_dim, free_rho.c}}});
      inst.rank_ceil = true;
      inst.units = "real rank";
      inst.description =
          "point reflection with time reversal: fixed stratum over the "
          "16-element monomial group, free stratum over its index-2 "
          "subgroup";
      break;
    }
  }
  return inst;
}

}  // namespace

ThresholdTable threshold_tables(const ThresholdQuery& q,
                                const TableOptions& opt) {
  if (q.d0 < 0 || q.d1 < 0)
    throw Error(ErrorCode::domain, "stratum dimensions must be >= 0");
  Instantiation inst = instantiate(q, opt);
  ThresholdTable out;
  out.units = inst.units;
  out.description = inst.description;
  long long embed = 0, stable = 0;
  for (const auto& s : inst.strata) {
    for (auto [unit, c] : s.irreps) {
      long long e, t;
      if (inst.rank_ceil) {
        // Integrality of multiplicities absorbs the ceiling, so scale
        // first; all scaled numerators are integral in this setting.
        e = ceil_div((long long)unit * (s.d + 1 - c), c);
        t = ceil_div((long long)unit * (s.d + 2 - c), c);
      } else {
        e = unit * ceil_div(s.d + 1 - c, c);
        t = unit * ceil_div(s.d + 2 - c, c);
      }
      embed = std::max(embed, e);
      stable = std::max(stable, t);
    }
  }
  out.embed_excess = (int)std::max(0LL, embed);
  out.stable_rank = (int)std::max(0LL, stable);
  return out;
}

SpaceSpec circle_space() {
  auto z2 = make_cyclic(2);
  SpaceSpec space;
  space.group = z2;
  StratumSpec fixed;
  fixed.id = "fixed";
  fixed.stabiliser = full_subgroup(z2);
  fixed.d = 0;
  fixed.components = {"-1", "+1"};
  StratumSpec free;
  free.id = "free";
  free.stabiliser = subgroup_generated(z2, {0});
  free.d = 1;
  free.components = {"interior"};
  space.strata = {fixed, free};
  return space;
}

BundleSpec circle_bundle_spec(const SpaceSpec& space, const CircleBundle& b) {
  validate_circle_bundle(b);
  BundleSpec out;
  out.space = space;
  out.field = Field::C;
  out.odd = false;
  // Canonical complex table of Z/2 lists the trivial character first.
  out.fibres[{"fixed", "-1"}] = {b.k - b.l_minus, b.l_minus};
  out.fibres[{"fixed", "+1"}] = {b.k - b.l_plus, b.l_plus};
  out.fibres[{"free", "interior"}] = {b.k};
  return out;
}

namespace {

void push_circle_rows(Verdict& out, const char* comp, int m_v, int m_e,
                      const char* irrep) {
  VerdictRow row;
  row.stratum = "fixed";
  row.component = comp;
  row.irrep = irrep;
  row.required = m_v;
  row.actual = m_e;
  row.status = m_e >= m_v ? RowStatus::satisfied
                          : RowStatus::violated_necessary;
  out.rows.push_back(std::move(row));
}

}  // namespace

Verdict circle_verdict_embed(const CircleBundle& v, const CircleBundle& e) {
  validate_circle_bundle(v);
  validate_circle_bundle(e);
  Verdict out;
  push_circle_rows(out, "-1", v.k - v.l_minus, e.k - e.l_minus, "trivial");
  push_circle_rows(out, "-1", v.l_minus, e.l_minus, "sign");
  push_circle_rows(out, "+1", v.k - v.l_plus, e.k - e.l_plus, "trivial");
  push_circle_rows(out, "+1", v.l_plus, e.l_plus, "sign");
  VerdictRow rank_row;
  rank_row.stratum = "free";
  rank_row.component = "interior";
  rank_row.irrep = "rank";
  rank_row.required = v.k;
  rank_row.actual = e.k;
  rank_row.status = e.k >= v.k ? RowStatus::satisfied
                               : RowStatus::violated_necessary;
  out.rows.push_back(std::move(rank_row));
  bool ok = circle_embeds(v, e);
  out.outcome = ok ? Outcome::Guaranteed : Outcome::Impossible;
  // The classification is complete, so failures are genuine obstructions;
  // rows that look satisfied can coexist with a failing complement row.
  if (!ok) {
    bool any = false;
    for (const auto& r : out.rows)
      any = any || r.status == RowStatus::violated_necessary;
    if (!any)
      throw Error(ErrorCode::internal, "circle verdict lost an obstruction");
  }
  return out;
}

Verdict circle_verdict_stable_iso(const CircleBundle& e1,
                                  const CircleBundle& e2,
                                  const CircleBundle& v) {
  validate_circle_bundle(e1);
  validate_circle_bundle(e2);
  validate_circle_bundle(v);
  Verdict out;
  out.hypothesis_asserted = true;
  bool same = e1.k == e2.k && e1.l_minus == e2.l_minus &&
              e1.l_plus == e2.l_plus;
  out.outcome = same ? Outcome::Guaranteed : Outcome::Impossible;
  if (!same)
    out.note = "pairs differ: the eigenvalue data is a complete invariant";
  auto push = [&](const char* comp, const char* irrep, int want, int got) {
    VerdictRow row;
    row.stratum = "fixed";
    row.component = comp;
    row.irrep = irrep;
    row.required = want;
    row.actual = got;
    row.status =
        want == got ? RowStatus::satisfied : RowStatus::violated_necessary;
    out.rows.push_back(std::move(row));
  };
  push("-1", "sign", e1.l_minus, e2.l_minus);
  push("+1", "sign", e1.l_plus, e2.l_plus);
  push("free", "rank", e1.k, e2.k);
  return out;
}

}  // namespace eqb
