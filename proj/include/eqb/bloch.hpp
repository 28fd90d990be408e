#ifndef EQB_BLOCH_HPP
#define EQB_BLOCH_HPP

#include <Eigen/Dense>

#include <map>
#include <vector>

#include "eqb/criteria.hpp"

namespace eqb {

using MatC = Eigen::MatrixXcd;
using MatR = Eigen::MatrixXd;

struct SymmetryGenerator {
  Eigen::MatrixXi lattice_action;  // integer d x d matrix on the lattice
  MatC u;                          // unitary on the internal space
  bool antiunitary = false;        // complex conjugation follows u
};

struct BlochOptions {
  double gap_tol = 1e-8;
  double tol_int = 1e-6;
  double symmetry_tol = 1e-9;
  int grid = 32;       // points per torus direction for scans
  int d0 = 0;          // dimension of the fixed stratum (isolated points)
};

// Finite-range hopping model: H(k) = sum_n H_n exp(i k.n) with
// H_{-n} = H_n^*; symmetries act on momenta by
// k -> (-1)^{antiunitary} A^{-T} k.
struct TightBindingModel {
  int d = 0;
  int k_int = 0;
  std::map<std::vector<int>, MatC> hoppings;
  std::vector<SymmetryGenerator> generators;

  void validate() const;
  bool has_antiunitary() const;
};

MatC bloch_hamiltonian(const TightBindingModel& model,
                       const std::vector<double>& k);

// Momentum image under one generator.
std::vector<double> momentum_action(const SymmetryGenerator& g,
                                    const std::vector<double>& k);

// Max over a grid and over generators of
// |U H(k) U^-1 - H(g k)| (H conjugated first for antiunitary generators).
double check_symmetry(const TightBindingModel& model, int grid);

// Spectral projector onto negative energies; throws on a gap violation.
MatC fermi_projector(const TightBindingModel& model,
                     const std::vector<double>& k, double gap_tol = 1e-8);

// One realified symmetry element: the momentum action B (with antiunitary
// conjugation folded in) and the orthogonal action on R^(2 k_int).
struct RealifiedElement {
  Eigen::MatrixXi momentum;  // B = (-1)^anti A^{-T}
  MatR fibre;                // realified, includes conjugation
};

// Closure of the generators together with multiplication by i, as abstract
// group plus realified data.  Element 0 is the identity.
struct RealifiedSymmetryGroup {
  GroupPtr group;
  std::vector<RealifiedElement> elements;
  int t_index = -1;  // the element acting as -1 on the fibre
};

RealifiedSymmetryGroup realified_symmetry_group(const TightBindingModel& m);

// Unitary closure (no conjugation, no i): the plain point group.
struct UnitarySymmetryGroup {
  GroupPtr group;
  std::vector<Eigen::MatrixXi> momentum;
  std::vector<MatC> fibre;
};

UnitarySymmetryGroup unitary_symmetry_group(const TightBindingModel& m);

// Multiplicities of the occupied fibre at a high-symmetry momentum under a
// stabiliser subgroup acting unitarily, via character inner products.
std::vector<int> fibre_multiplicities(const TightBindingModel& model,
                                      const std::vector<double>& k_star,
                                      const UnitarySymmetryGroup& sym,
                                      const std::vector<int>& stabiliser,
                                      const BlochOptions& opt = {});

enum class Robustness { robust_line_rule, robust_threshold, fragile_possible };

struct FixedPointData {
  std::vector<int> k_over_pi;      // each entry 0 or 1
  std::vector<std::string> irreps; // labels aligned with multiplicities
  std::vector<int> multiplicities;
};

struct BlochAnalysis {
  double gap = 0;
  int occupied_rank = 0;           // complex rank of the Bloch bundle
  double symmetry_residual = 0;
  bool antiunitary_mode = false;
  std::vector<FixedPointData> fixed_points;
  SpaceSpec space;
  BundleSpec bundle;
  Robustness robustness = Robustness::fragile_possible;
  bool stably_trivial_data = false;
  Verdict stable_verdict;          // threshold route underlying robustness
  std::vector<double> band_samples;  // optional energy samples for plotting
};

// Full pipeline: symmetry check, gap scan, projector rank, fixed-point
// multiplicities, bundle assembly, robustness classification.
BlochAnalysis analyze(const TightBindingModel& model,
                      const BlochOptions& opt = {});

}  // namespace eqb

#endif  // EQB_BLOCH_HPP
