#include <cmath>

#include "doctest.h"
#include "eqb/bloch.hpp"

using namespace eqb;

namespace {

// Two-band chain with alternating hoppings: H(k) has off-diagonal
// t1 + t2 exp(ik), spectrum +-|t1 + t2 exp(ik)|, inversion symmetry
// sigma_x H(-k) sigma_x = H(k).
TightBindingModel chain_model(double t1, double t2) {
  TightBindingModel m;
  m.d = 1;
  m.k_int = 2;
  MatC h0(2, 2), h1(2, 2);
  h0 << 0, t1, t1, 0;
  h1 << 0, t2, 0, 0;
  m.hoppings[{0}] = h0;
  m.hoppings[{1}] = h1;
  m.hoppings[{-1}] = h1.adjoint();
  SymmetryGenerator inv;
  inv.lattice_action = -Eigen::MatrixXi::Identity(1, 1);
  MatC sx(2, 2);
  sx << 0, 1, 1, 0;
  inv.u = sx;
  inv.antiunitary = false;
  m.generators.push_back(inv);
  return m;
}

// Four-band cube with point reflection (R^2 = +1) and time reversal
// (Theta^2 = -1), built so that (R Theta)^2 = +1: H(k) = f(k) I (x) sigma_z
// with f(k) = 1 - 0.3 sum_j cos k_j.
TightBindingModel reflection_time_model(int d) {
  TightBindingModel m;
  m.d = d;
  m.k_int = 4;
  MatC block = MatC::Zero(4, 4);
  block(0, 0) = 1;
  block(1, 1) = -1;
  block(2, 2) = 1;
  block(3, 3) = -1;  // I (x) sigma_z
  m.hoppings[{std::vector<int>(d, 0)}] = block;
  for (int j = 0; j < d; ++j) {
    std::vector<int> e(d, 0);
    e[j] = 1;
    m.hoppings[e] = -0.15 * block;
    e[j] = -1;
    m.hoppings[e] = -0.15 * block;
  }

  MatC sy(2, 2), sx(2, 2), id2 = MatC::Identity(2, 2);
  sy << 0, cplx(0, -1), cplx(0, 1), 0;
  sx << 0, 1, 1, 0;
  auto kron = [](const MatC& a, const MatC& b) {
    MatC out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j)
        out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
            a(i, j) * b;
    return out;
  };

  SymmetryGenerator reflection;
  reflection.lattice_action = -Eigen::MatrixXi::Identity(d, d);
  reflection.u = kron(sx, id2);
  reflection.antiunitary = false;
  m.generators.push_back(reflection);

  SymmetryGenerator tr;
  tr.lattice_action = Eigen::MatrixXi::Identity(d, d);
  tr.u = kron(cplx(0, 1) * sy, id2);
  tr.antiunitary = true;
  m.generators.push_back(tr);
  return m;
}

}  // namespace

TEST_CASE("bloch hamiltonian assembly") {
  // Only an onsite matrix: constant in k.
  TightBindingModel m;
  m.d = 1;
  m.k_int = 2;
  MatC h0(2, 2);
  h0 << 1, 0, 0, -1;
  m.hoppings[{0}] = h0;
  auto h = bloch_hamiltonian(m, {0.7});
  CHECK((h - h0).norm() == doctest::Approx(0));

  // The chain at k = 0 gives (t1 + t2) sigma_x.
  auto chain = chain_model(0.5, 1.0);
  auto hk = bloch_hamiltonian(chain, {0.0});
  CHECK(hk(0, 1).real() == doctest::Approx(1.5));
  CHECK(hk(0, 1).imag() == doctest::Approx(0));
  CHECK(hk(0, 0).real() == doctest::Approx(0));

  // Hermiticity from H_{-n} = H_n^* at arbitrary momenta.
  for (double k : {0.3, 1.1, 2.9}) {
    auto hh = bloch_hamiltonian(chain, {k});
    CHECK((hh - hh.adjoint()).norm() < 1e-14);
  }
}

TEST_CASE("symmetry residuals") {
  auto chain = chain_model(0.5, 1.0);
  CHECK(check_symmetry(chain, 32) < 1e-12);

  // Symmetry-broken perturbation shows up at its own scale.
  auto broken = chain;
  MatC eps(2, 2);
  eps << 1e-3, 0, 0, -1e-3;
  broken.hoppings[{0}] += eps;
  double resid = check_symmetry(broken, 32);
  CHECK(resid > 1e-4);
  CHECK(resid < 1e-2);

  // No generators: nothing to violate.
  TightBindingModel bare = chain;
  bare.generators.clear();
  CHECK(check_symmetry(bare, 8) == doctest::Approx(0));
}

TEST_CASE("fermi projector") {
  TightBindingModel m;
  m.d = 1;
  m.k_int = 2;
  MatC h0(2, 2);
  h0 << -1, 0, 0, 1;
  m.hoppings[{0}] = h0;
  auto p = fermi_projector(m, {0.4});
  CHECK(p(0, 0).real() == doctest::Approx(1));
  CHECK(p(1, 1).real() == doctest::Approx(0));

  // Rank is constant over the grid for a gapped chain.
  auto chain = chain_model(0.5, 1.0);
  for (int i = 0; i < 64; ++i) {
    auto pk = fermi_projector(chain, {2 * 3.14159265358979 * i / 64});
    CHECK(std::llround(pk.trace().real()) == 1);
  }

  // Equal hoppings close the gap at k = pi.
  auto gapless = chain_model(1.0, 1.0);
  CHECK_THROWS_AS(fermi_projector(gapless, {3.14159265358979323846}), Error);
}

TEST_CASE("fibre multiplicities of the inversion chain") {
  auto chain = chain_model(0.5, 1.0);
  auto sym = unitary_symmetry_group(chain);
  REQUIRE(sym.group->order() == 2);
  std::vector<int> all = {0, 1};

  // Occupied state at k = 0 is odd under inversion, even at k = pi.
  auto m0 = fibre_multiplicities(chain, {0.0}, sym, all);
  CHECK(m0 == std::vector<int>{0, 1});
  auto mpi = fibre_multiplicities(chain, {3.14159265358979323846}, sym, all);
  CHECK(mpi == std::vector<int>{1, 0});
  CHECK(m0[0] + m0[1] == 1);

  // Trivial stabiliser: one entry carrying the whole rank.
  auto m_gen = fibre_multiplicities(chain, {0.71}, sym, {0});
  CHECK(m_gen == std::vector<int>{1});

  // An element moving the momentum is rejected.
  CHECK_THROWS_AS(fibre_multiplicities(chain, {0.71}, sym, all), Error);
}

TEST_CASE("analyze the inversion-symmetric chain") {
  auto analysis = analyze(chain_model(0.5, 1.0));
  CHECK(analysis.gap > 0.4);
  CHECK(analysis.occupied_rank == 1);
  CHECK_FALSE(analysis.antiunitary_mode);
  REQUIRE(analysis.fixed_points.size() == 2);
  for (const auto& fp : analysis.fixed_points) {
    int total = 0;
    for (size_t i = 0; i < fp.multiplicities.size(); ++i) total += fp.multiplicities[i];
    CHECK(total == 1);
  }
  CHECK(analysis.robustness == Robustness::robust_line_rule);
  CHECK(validate(analysis.bundle).ok);

  // The recorded parities are opposite at the two fixed points, so the data
  // cannot come from a single representation: not stably trivial.
  CHECK(analysis.fixed_points[0].multiplicities !=
        analysis.fixed_points[1].multiplicities);
  CHECK_FALSE(analysis.stably_trivial_data);

  // Gapless parameters raise the gap error.
  CHECK_THROWS_WITH_AS(analyze(chain_model(1.0, 1.0)),
                       doctest::Contains("gap"), Error);

  // A broken symmetry raises the symmetry error.
  auto broken = chain_model(0.5, 1.0);
  MatC eps(2, 2);
  eps << 1e-3, 0, 0, -1e-3;
  broken.hoppings[{0}] += eps;
  CHECK_THROWS_AS(analyze(broken), Error);
}

TEST_CASE("grid refinement does not change integer outputs") {
  BlochOptions coarse;
  coarse.grid = 16;
  BlochOptions fine;
  fine.grid = 32;
  auto a = analyze(chain_model(0.5, 1.0), coarse);
  auto b = analyze(chain_model(0.5, 1.0), fine);
  CHECK(a.occupied_rank == b.occupied_rank);
  REQUIRE(a.fixed_points.size() == b.fixed_points.size());
  for (size_t i = 0; i < a.fixed_points.size(); ++i)
    CHECK(a.fixed_points[i].multiplicities ==
          b.fixed_points[i].multiplicities);
}

TEST_CASE("adding a symmetric flat band shifts multiplicities uniformly") {
  // Direct sum with a constant negative-energy inversion-even band.
  auto chain = chain_model(0.5, 1.0);
  TightBindingModel bigger;
  bigger.d = 1;
  bigger.k_int = 3;
  for (const auto& [n, h] : chain.hoppings) {
    MatC m = MatC::Zero(3, 3);
    m.topLeftCorner(2, 2) = h;
    if (n == std::vector<int>{0}) m(2, 2) = -2.0;
    bigger.hoppings[n] = m;
  }
  SymmetryGenerator inv;
  inv.lattice_action = -Eigen::MatrixXi::Identity(1, 1);
  MatC u = MatC::Zero(3, 3);
  u(0, 1) = 1;
  u(1, 0) = 1;
  u(2, 2) = 1;
  inv.u = u;
  bigger.generators.push_back(inv);

  auto base = analyze(chain_model(0.5, 1.0));
  auto shifted = analyze(bigger);
  CHECK(shifted.occupied_rank == base.occupied_rank + 1);
  REQUIRE(shifted.fixed_points.size() == base.fixed_points.size());
  for (size_t i = 0; i < base.fixed_points.size(); ++i) {
    // The flat band is inversion-even: the trivial entry grows by one.
    CHECK(shifted.fixed_points[i].multiplicities[0] ==
          base.fixed_points[i].multiplicities[0] + 1);
    CHECK(shifted.fixed_points[i].multiplicities[1] ==
          base.fixed_points[i].multiplicities[1]);
  }
  // Rank 2 in dimension 1 clears every threshold: still robust.
  CHECK(shifted.robustness == Robustness::robust_threshold);
}

TEST_CASE("reflection plus time reversal in three dimensions") {
  auto model = reflection_time_model(3);
  BlochOptions opt;
  opt.grid = 8;
  auto analysis = analyze(model, opt);
  CHECK(analysis.antiunitary_mode);
  CHECK(analysis.occupied_rank == 2);  // complex rank; real rank 4
  CHECK(analysis.space.group->order() == 16);
  REQUIRE(analysis.fixed_points.size() == 8);

  // Each fixed point carries one copy of the unique 4-dimensional odd
  // irrep of the 16-element group.
  for (const auto& fp : analysis.fixed_points) {
    int total = 0, hits = 0;
    for (size_t i = 0; i < fp.multiplicities.size(); ++i) {
      total += fp.multiplicities[i];
      if (fp.multiplicities[i]) ++hits;
    }
    CHECK(total == 1);
    CHECK(hits == 1);
  }

  // Real rank 4 on the 3-torus: stably trivial data but below the
  // unstabilisation threshold; this is the one potentially fragile case.
  CHECK(analysis.stably_trivial_data);
  CHECK(analysis.robustness == Robustness::fragile_possible);

  // The kernel of the momentum action is an 8-element group with a unique
  // 2-dimensional odd irrep carrying the bulk fibre twice.
  auto free_fibre = analysis.bundle.fibre("free", "bulk");
  int nonzero = 0;
  for (int v : free_fibre) nonzero += v ? 1 : 0;
  CHECK(nonzero == 1);
  CHECK(*std::max_element(free_fibre.begin(), free_fibre.end()) == 2);
}

TEST_CASE("grid refinement of the antiunitary model") {
  auto model = reflection_time_model(3);
  BlochOptions coarse;
  coarse.grid = 4;
  BlochOptions fine;
  fine.grid = 8;
  auto a = analyze(model, coarse);
  auto b = analyze(model, fine);
  CHECK(a.occupied_rank == b.occupied_rank);
  REQUIRE(a.fixed_points.size() == b.fixed_points.size());
  for (size_t i = 0; i < a.fixed_points.size(); ++i)
    CHECK(a.fixed_points[i].multiplicities ==
          b.fixed_points[i].multiplicities);
  CHECK(a.robustness == b.robustness);
}

TEST_CASE("intermediate stabilisers are rejected with guidance") {
  // A fourfold rotation on the square torus fixes (0,0) and (pi,pi) fully
  // but stabilises (pi,0) only by its half turn, which the automatic
  // stratification does not model.
  TightBindingModel m;
  m.d = 2;
  m.k_int = 1;
  MatC on(1, 1), hop(1, 1);
  on << 1.0;
  hop << 0.05;
  m.hoppings[{0, 0}] = on;
  for (auto n : {std::vector<int>{1, 0}, {-1, 0}, {0, 1}, {0, -1}})
    m.hoppings[n] = hop;
  SymmetryGenerator rot;
  rot.lattice_action.resize(2, 2);
  rot.lattice_action << 0, -1, 1, 0;
  rot.u = MatC::Identity(1, 1);
  m.generators.push_back(rot);
  CHECK(check_symmetry(m, 16) < 1e-12);
  CHECK_THROWS_WITH_AS(analyze(m), doctest::Contains("intermediate"), Error);
}

TEST_CASE("reflection time model in one dimension is robust") {
  auto model = reflection_time_model(1);
  BlochOptions opt;
  opt.grid = 16;
  auto analysis = analyze(model, opt);
  // Real rank 4 >= max{2 d0, 2 d1 + 2} = 4 at d0 = 0, d1 = 1.
  CHECK(analysis.robustness == Robustness::robust_threshold);
}
