#include <Eigen/Dense>
#include <algorithm>

#include "doctest.h"
#include "eqb/clifford.hpp"
#include "eqb/oracles.hpp"
#include "eqb/reptheory.hpp"

using namespace eqb;

TEST_CASE("algebra classification seeds") {
  auto t = clifford_type(0, 0);
  CHECK(t.base == CliffordBase::R);
  CHECK(t.matrix_size == 1);

  t = clifford_type(0, 1);
  CHECK(t.base == CliffordBase::C);
  CHECK(t.matrix_size == 1);

  t = clifford_type(0, 2);
  CHECK(t.base == CliffordBase::H);
  CHECK(t.matrix_size == 1);

  t = clifford_type(0, 3);
  CHECK(t.base == CliffordBase::HH);
  CHECK(t.matrix_size == 1);

  t = clifford_type(1, 0);
  CHECK(t.base == CliffordBase::RR);
  CHECK(t.matrix_size == 1);

  t = clifford_type(2, 0);
  CHECK(t.base == CliffordBase::R);
  CHECK(t.matrix_size == 2);

  t = clifford_type(3, 0);
  CHECK(t.base == CliffordBase::C);
  CHECK(t.matrix_size == 2);

  t = clifford_type(4, 0);
  CHECK(t.base == CliffordBase::H);
  CHECK(t.matrix_size == 2);
}

TEST_CASE("signature (1,1) against explicit gamma matrices") {
  // e1 = diag(1,-1), e2 = [[0,1],[-1,0]] anticommute with squares +1, -1;
  // they realize the algebra on R^2, so the type is M_2(R).
  Eigen::Matrix2d e1, e2;
  e1 << 1, 0, 0, -1;
  e2 << 0, 1, -1, 0;
  CHECK((e1 * e1).isApprox(Eigen::Matrix2d::Identity()));
  CHECK((e2 * e2).isApprox(-Eigen::Matrix2d::Identity()));
  CHECK((e1 * e2 + e2 * e1).norm() == doctest::Approx(0));

  auto t = clifford_type(1, 1);
  CHECK(t.base == CliffordBase::R);
  CHECK(t.matrix_size == 2);

  // The monomial group represented by these matrices decomposes with one
  // copy of a 2-dimensional odd irrep of real type.
  auto g = make_clifford_group(1, 1);
  std::map<int, Eigen::MatrixXd> gens;
  gens[1] = e1;  // +e1 has mask 01
  gens[2] = e2;  // +e2 has mask 10
  auto rep = rep_from_generators(g, gens);
  auto set = real_irreps(g);
  auto mult = brute_decompose(rep, set);
  int total = 0;
  for (size_t i = 0; i < set.irreps.size(); ++i) {
    if (mult[i]) {
      CHECK(set.irreps[i].real_dim == 2);
      CHECK(set.irreps[i].c == 1);
      CHECK(set.irreps[i].odd);
      total += mult[i];
    }
  }
  CHECK(total == 1);
}

TEST_CASE("matrix doubling rule") {
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; q <= 6; ++q) {
      auto small = clifford_type(p, q);
      auto big = clifford_type(p + 1, q + 1);
      CHECK(big.base == small.base);
      CHECK(big.matrix_size == 2 * small.matrix_size);
    }
}

TEST_CASE("unique odd irrep by signature") {
  CHECK(has_unique_odd_irrep(1, 2));
  CHECK_FALSE(has_unique_odd_irrep(2, 1));
  CHECK(has_unique_odd_irrep(0, 0));
  CHECK_FALSE(has_unique_odd_irrep(0, 3));
  CHECK(has_unique_odd_irrep(1, 1));
  CHECK(has_unique_odd_irrep(0, 2));

  for (int p = 0; p <= 16; ++p)
    for (int q = 0; q <= 16; ++q) {
      int m = ((p - q) % 8 + 8) % 8;
      CHECK(has_unique_odd_irrep(p, q) == (m != 1 && m != 5));
    }
}

TEST_CASE("odd irrep profiles") {
  using profile = std::vector<std::pair<int, int>>;
  CHECK(odd_irrep_profile(2, 1) == profile{{2, 1}, {2, 1}});
  CHECK(odd_irrep_profile(0, 3) == profile{{4, 4}, {4, 4}});
  CHECK(odd_irrep_profile(1, 1) == profile{{2, 1}});
  CHECK(odd_irrep_profile(1, 2) == profile{{4, 2}});

  // Against the group-level computation on the whole supported range.
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; p + q <= 5; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      auto from_algebra = odd_irrep_profile(p, q);
      auto odd = odd_irreps(make_clifford_group(p, q));
      profile from_group;
      for (const auto& rho : odd) from_group.emplace_back(rho.real_dim, rho.c);
      std::sort(from_algebra.begin(), from_algebra.end());
      std::sort(from_group.begin(), from_group.end());
      CHECK(from_algebra == from_group);
      CHECK(has_unique_odd_irrep(p, q) == (odd.size() == 1));
    }
}
