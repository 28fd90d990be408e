#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "eqb/oracles.hpp"
#include "eqb/reptheory.hpp"

using namespace eqb;

namespace {

std::vector<GroupPtr> regression_groups() {
  std::vector<GroupPtr> out = {
      make_trivial(),
      make_cyclic(2, 1),
      make_cyclic(3),
      make_cyclic(4, 2),
      make_cyclic(5),
      make_cyclic(6, 3),
      make_dihedral8(),
      make_quaternion8(),
      make_semidirect_z4(make_cyclic(2), {0, 1}),
      make_semidirect_z4(make_cyclic(2), {0, 0}),
      make_semidirect_z4(make_cyclic(4), {0, 1, 0, 1}),
  };
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; p + q <= 4; ++q) out.push_back(make_clifford_group(p, q));
  return out;
}

double table_orthogonality_residual(const CharacterTable& t) {
  double worst = 0;
  int r = (int)t.chars.size();
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      cplx ip = 0;
      for (int j = 0; j < r; ++j)
        ip += (double)t.classes.sizes[j] * t.chars[a][j] *
              std::conj(t.chars[b][j]);
      ip /= (double)t.group->order();
      cplx want = (a == b) ? cplx(1, 0) : cplx(0, 0);
      worst = std::max(worst, std::abs(ip - want));
    }
  return worst;
}

}  // namespace

TEST_CASE("character table health on the regression list") {
  for (const auto& g : regression_groups()) {
    CAPTURE(g->order());
    auto t = complex_character_table(g);
    CHECK((int)t.chars.size() == (int)t.classes.classes.size());
    CHECK(table_orthogonality_residual(t) < 1e-9);
    int sq = 0;
    for (int d : t.degrees) {
      sq += d * d;
      CHECK(g->order() % d == 0);
    }
    CHECK(sq == g->order());
  }
}

TEST_CASE("small character tables") {
  auto t2 = complex_character_table(make_cyclic(2, 1));
  REQUIRE(t2.chars.size() == 2);
  // Trivial character first, then the sign character.
  CHECK(t2.chars[0][0].real() == doctest::Approx(1));
  CHECK(t2.chars[0][1].real() == doctest::Approx(1));
  CHECK(t2.chars[1][1].real() == doctest::Approx(-1));

  auto t1 = complex_character_table(make_trivial());
  REQUIRE(t1.chars.size() == 1);
  CHECK(t1.degrees[0] == 1);

  // Z/4: the four linear characters [k] -> i^{jk}, against the brute-force
  // enumeration of homomorphisms into the fourth roots of unity.
  auto z4 = make_cyclic(4);
  auto t4 = complex_character_table(z4);
  REQUIRE(t4.chars.size() == 4);
  std::vector<std::vector<cplx>> homs;
  const cplx i_unit(0, 1);
  for (int j = 0; j < 4; ++j) {
    std::vector<cplx> row(4);
    for (int k = 0; k < 4; ++k) row[k] = std::pow(i_unit, j * k);
    homs.push_back(row);
  }
  for (const auto& hom : homs) {
    bool found = false;
    for (const auto& row : t4.chars) {
      double diff = 0;
      for (int k = 0; k < 4; ++k) diff += std::abs(row[k] - hom[k]);
      if (diff < 1e-8) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("frobenius-schur indicators") {
  for (const auto& g : regression_groups()) {
    auto t = complex_character_table(g);
    // Trivial character: always +1.
    CHECK(frobenius_schur(t, 0) == 1);
  }

  auto q8 = make_quaternion8();
  auto tq = complex_character_table(q8);
  int found_minus = 0;
  for (int i = 0; i < (int)tq.chars.size(); ++i) {
    if (tq.degrees[i] == 2) {
      // Direct sum over the eight elements.
      cplx s = 0;
      for (int x = 0; x < 8; ++x)
        s += tq.chars[i][tq.classes.class_of[q8->mul(x, x)]];
      CHECK(std::abs(s / 8.0 - cplx(-1, 0)) < 1e-9);
      CHECK(frobenius_schur(tq, i) == -1);
      ++found_minus;
    }
  }
  CHECK(found_minus == 1);

  auto z4 = make_cyclic(4);
  auto t4 = complex_character_table(z4);
  const cplx i_unit(0, 1);
  for (int i = 0; i < 4; ++i) {
    // Identify the faithful character [k] -> i^k and check FS = 0, matching
    // (1/4) sum_k i^{2k} = 0.
    bool faithful = std::abs(t4.chars[i][t4.classes.class_of[1]] - i_unit) <
                    1e-8;
    if (faithful) CHECK(frobenius_schur(t4, i) == 0);
  }
}

TEST_CASE("real irreducible representations") {
  auto z4 = real_irreps(make_cyclic(4, 2));
  REQUIRE(z4.irreps.size() == 3);
  int n_r = 0, n_c = 0;
  for (const auto& rho : z4.irreps) {
    if (rho.type == IrrepType::R) {
      ++n_r;
      CHECK(rho.real_dim == 1);
      CHECK(rho.c == 1);
    } else {
      ++n_c;
      CHECK(rho.type == IrrepType::C);
      CHECK(rho.real_dim == 2);
      CHECK(rho.c == 2);
    }
  }
  CHECK(n_r == 2);
  CHECK(n_c == 1);

  auto d8 = real_irreps(make_dihedral8());
  REQUIRE(d8.irreps.size() == 5);
  for (const auto& rho : d8.irreps) {
    CHECK(rho.type == IrrepType::R);
    CHECK(rho.c == 1);
  }
  CHECK(std::count_if(d8.irreps.begin(), d8.irreps.end(),
                      [](const RealIrrep& r) { return r.real_dim == 2; }) == 1);

  auto q8 = real_irreps(make_quaternion8());
  REQUIRE(q8.irreps.size() == 5);
  int n_h = 0;
  for (const auto& rho : q8.irreps)
    if (rho.type == IrrepType::H) {
      ++n_h;
      CHECK(rho.real_dim == 4);
      CHECK(rho.c == 4);
    }
  CHECK(n_h == 1);

  // Norm and Peter-Weyl identities across the regression list.
  for (const auto& g : regression_groups()) {
    auto set = real_irreps(g);
    int total = 0;
    for (const auto& rho : set.irreps) {
      double norm = 0;
      for (size_t j = 0; j < rho.character.size(); ++j)
        norm += set.classes.sizes[j] * rho.character[j] * rho.character[j];
      norm /= g->order();
      CHECK(norm == doctest::Approx((double)rho.c).epsilon(1e-9));
      total += rho.real_dim * rho.real_dim / rho.c;
    }
    CHECK(total == g->order());
  }
}

TEST_CASE("odd irreps") {
  auto z2 = real_irreps(make_cyclic(2, 1));
  auto odd_z2 = odd_irreps(z2);
  REQUIRE(odd_z2.size() == 1);
  CHECK(odd_z2[0].real_dim == 1);
  CHECK(odd_z2[0].type == IrrepType::R);

  auto odd_z4 = odd_irreps(make_cyclic(4, 2));
  REQUIRE(odd_z4.size() == 1);
  CHECK(odd_z4[0].real_dim == 2);
  CHECK(odd_z4[0].c == 2);

  auto odd_d8 = odd_irreps(make_dihedral8());
  REQUIRE(odd_d8.size() == 1);
  CHECK(odd_d8[0].real_dim == 2);
  CHECK(odd_d8[0].c == 1);

  auto odd_q8 = odd_irreps(make_quaternion8());
  REQUIRE(odd_q8.size() == 1);
  CHECK(odd_q8[0].real_dim == 4);
  CHECK(odd_q8[0].c == 4);

  CHECK(odd_irreps(make_clifford_group(2, 1)).size() == 2);
  CHECK(odd_irreps(make_clifford_group(0, 3)).size() == 2);

  CHECK_THROWS_AS(odd_irreps(make_cyclic(4)), Error);

  CHECK(unique_odd_irrep(real_irreps(make_quaternion8())).has_value());
  CHECK_FALSE(unique_odd_irrep(real_irreps(make_clifford_group(2, 1)))
                  .has_value());
  CHECK(unique_odd_irrep(real_irreps(make_cyclic(2, 1))).has_value());
}

TEST_CASE("multiplicities") {
  auto set = real_irreps(make_quaternion8());
  for (const auto& rho : set.irreps)
    CHECK(multiplicity(set, rho.character, rho) == 1);

  // Regular representation contains every rho with multiplicity dim/c.
  std::vector<double> reg(set.classes.classes.size(), 0.0);
  reg[set.classes.class_of[set.group->identity()]] = 8.0;
  for (const auto& rho : set.irreps)
    CHECK(multiplicity(set, reg, rho) == rho.real_dim / rho.c);

  // C^2 with Z/4 acting by multiplication by i: real character
  // (4, 0, -4, 0); contains the 2-dimensional complex-type irrep twice.
  auto z4 = real_irreps(make_cyclic(4, 2));
  std::vector<double> w(4, 0.0);
  w[z4.classes.class_of[0]] = 4.0;
  w[z4.classes.class_of[2]] = -4.0;
  for (const auto& rho : z4.irreps)
    if (rho.type == IrrepType::C) CHECK(multiplicity(z4, w, rho) == 2);

  // Additivity on random nonnegative integer combinations.
  std::mt19937_64 rng(7);
  for (const auto& g : {make_dihedral8(), make_quaternion8()}) {
    auto s = real_irreps(g);
    std::uniform_int_distribution<int> u(0, 3);
    std::vector<double> w1(s.classes.classes.size(), 0.0);
    std::vector<double> w2 = w1;
    for (const auto& rho : s.irreps) {
      int m1 = u(rng), m2 = u(rng);
      for (size_t j = 0; j < w1.size(); ++j) {
        w1[j] += m1 * rho.character[j];
        w2[j] += m2 * rho.character[j];
      }
    }
    std::vector<double> sum(w1.size());
    for (size_t j = 0; j < w1.size(); ++j) sum[j] = w1[j] + w2[j];
    for (const auto& rho : s.irreps)
      CHECK(multiplicity(s, sum, rho) ==
            multiplicity(s, w1, rho) + multiplicity(s, w2, rho));
  }

  // A non-character is rejected.
  auto z2 = real_irreps(make_cyclic(2, 1));
  CHECK_THROWS_AS(multiplicity(z2, {0.5, 0.25}, z2.irreps[0]), Error);
}

TEST_CASE("regular odd character") {
  auto z2 = real_irreps(make_cyclic(2, 1));
  auto chi = regular_odd_character(z2);
  CHECK(chi[z2.classes.class_of[0]] == doctest::Approx(1.0));
  CHECK(chi[z2.classes.class_of[1]] == doctest::Approx(-1.0));
  auto odd = odd_irreps(z2);
  CHECK(multiplicity(z2, chi, odd[0]) == 1);

  auto q8 = real_irreps(make_quaternion8());
  auto chi_q = regular_odd_character(q8);
  CHECK(multiplicity(q8, chi_q, odd_irreps(q8)[0]) == 1);

  auto d8 = real_irreps(make_dihedral8());
  auto chi_d = regular_odd_character(d8);
  CHECK(multiplicity(d8, chi_d, odd_irreps(d8)[0]) == 2);

  // dim/c for odd, zero for even, across groups with t.
  for (const auto& g :
       {make_cyclic(4, 2), make_dihedral8(), make_quaternion8(),
        make_clifford_group(2, 1), make_clifford_group(0, 3),
        make_clifford_group(1, 2)}) {
    auto s = real_irreps(g);
    auto chi_r = regular_odd_character(s);
    for (const auto& rho : s.irreps) {
      int want = rho.odd ? rho.real_dim / rho.c : 0;
      CHECK(multiplicity(s, chi_r, rho) == want);
    }
  }
}

TEST_CASE("restriction of class functions") {
  auto d8 = make_dihedral8();
  auto set = real_irreps(d8);
  auto rot = subgroup_as_group(subgroup_generated(d8, {1}));
  auto rot_set = real_irreps(rot.group);

  // Trivial restricts to trivial.
  std::vector<double> triv(set.classes.classes.size(), 1.0);
  auto r = restrict_class_function(set.classes, triv, rot, rot_set.classes);
  for (double v : r) CHECK(v == doctest::Approx(1.0));

  // Regular character of G restricts to [G:H] copies of the regular
  // character of H.
  std::vector<double> reg(set.classes.classes.size(), 0.0);
  reg[set.classes.class_of[d8->identity()]] = 8.0;
  auto reg_r = restrict_class_function(set.classes, reg, rot, rot_set.classes);
  for (const auto& rho : rot_set.irreps)
    CHECK(multiplicity(rot_set, reg_r, rho) == 2 * rho.real_dim / rho.c);

  // The 2-dimensional odd irrep of D8 restricts to the complex-type odd
  // irrep of the rotation subgroup Z/4.
  auto odd_d8 = odd_irreps(set)[0];
  auto restricted =
      restrict_class_function(set.classes, odd_d8.character, rot,
                              rot_set.classes);
  for (const auto& rho : rot_set.irreps) {
    int want = (rho.type == IrrepType::C) ? 1 : 0;
    CHECK(multiplicity(rot_set, restricted, rho) == want);
  }
}

TEST_CASE("character values recovered from the regular representation") {
  for (const auto& g : {make_cyclic(4, 2), make_dihedral8(),
                        make_quaternion8(), make_clifford_group(2, 1)}) {
    auto set = real_irreps(g);
    for (const auto& rho : set.irreps) {
      auto recovered = character_from_regular_rep(set, rho);
      for (size_t j = 0; j < recovered.size(); ++j)
        CHECK(recovered[j] == doctest::Approx(rho.character[j]).epsilon(1e-6));
    }
  }
}

TEST_CASE("deterministic tables") {
  auto a = complex_character_table(make_quaternion8());
  auto b = complex_character_table(make_quaternion8());
  for (size_t i = 0; i < a.chars.size(); ++i)
    for (size_t j = 0; j < a.chars[i].size(); ++j)
      CHECK(a.chars[i][j] == b.chars[i][j]);
}
