#include "eqb/bloch.hpp"

#include <algorithm>
#include <cmath>

namespace eqb {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<int> negate(const std::vector<int>& n) {
  std::vector<int> out(n.size());
  for (size_t i = 0; i < n.size(); ++i) out[i] = -n[i];
  return out;
}

Eigen::MatrixXi integer_inverse(const Eigen::MatrixXi& a) {
  Eigen::MatrixXd inv = a.cast<double>().inverse();
  Eigen::MatrixXi out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      double v = inv(i, j);
      double r = std::round(v);
      if (std::abs(v - r) > 1e-9)
        throw Error(ErrorCode::domain,
                    "lattice action is not invertible over the integers");
      out(i, j) = (int)r;
    }
  if ((a * out) != Eigen::MatrixXi(Eigen::MatrixXi::Identity(a.rows(),
                                                             a.cols())))
    throw Error(ErrorCode::domain, "lattice action inverse check failed");
  return out;
}

MatR realify(const MatC& u) {
  int n = (int)u.rows();
  MatR out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = u.real();
  out.topRightCorner(n, n) = -u.imag();
  out.bottomLeftCorner(n, n) = u.imag();
  out.bottomRightCorner(n, n) = u.real();
  return out;
}

// Realification of u composed with complex conjugation.
MatR realify_antiunitary(const MatC& u) {
  int n = (int)u.rows();
  MatR out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = u.real();
  out.topRightCorner(n, n) = u.imag();
  out.bottomLeftCorner(n, n) = u.imag();
  out.bottomRightCorner(n, n) = -u.real();
  return out;
}

}  // namespace

void TightBindingModel::validate() const {
  if (d <= 0 || k_int <= 0)
    throw Error(ErrorCode::domain, "model needs positive dimensions");
  for (const auto& [n, m] : hoppings) {
    if ((int)n.size() != d)
      throw Error(ErrorCode::domain, "hopping vector has wrong length");
    if (m.rows() != k_int || m.cols() != k_int)
      throw Error(ErrorCode::domain, "hopping matrix has wrong size");
    auto it = hoppings.find(negate(n));
    if (it == hoppings.end() || (it->second - m.adjoint()).norm() > 1e-12)
      throw Error(ErrorCode::domain,
                  "hoppings are not hermitian: H_{-n} must equal H_n^*");
  }
  for (const auto& g : generators) {
    if (g.lattice_action.rows() != d || g.lattice_action.cols() != d)
      throw Error(ErrorCode::domain, "lattice action has wrong size");
    integer_inverse(g.lattice_action);
    if (g.u.rows() != k_int || g.u.cols() != k_int)
      throw Error(ErrorCode::domain, "internal unitary has wrong size");
    if ((g.u * g.u.adjoint() - MatC::Identity(k_int, k_int)).norm() > 1e-9)
      throw Error(ErrorCode::domain, "internal matrix is not unitary");
  }
}

bool TightBindingModel::has_antiunitary() const {
  for (const auto& g : generators)
    if (g.antiunitary) return true;
  return false;
}

MatC bloch_hamiltonian(const TightBindingModel& model,
                       const std::vector<double>& k) {
  if ((int)k.size() != model.d)
    throw Error(ErrorCode::domain, "momentum has wrong dimension");
  MatC h = MatC::Zero(model.k_int, model.k_int);
  for (const auto& [n, m] : model.hoppings) {
    double phase = 0;
    for (int i = 0; i < model.d; ++i) phase += k[i] * n[i];
    h += std::exp(cplx(0, phase)) * m;
  }
  if ((h - h.adjoint()).norm() > 1e-12)
    throw Error(ErrorCode::internal, "bloch hamiltonian is not hermitian");
  return h;
}

std::vector<double> momentum_action(const SymmetryGenerator& g,
                                    const std::vector<double>& k) {
  Eigen::MatrixXi b = integer_inverse(g.lattice_action).transpose();
  if (g.antiunitary) b = -b;
  std::vector<double> out(k.size(), 0.0);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out[i] += b(i, j) * k[j];
  return out;
}

double check_symmetry(const TightBindingModel& model, int grid) {
  model.validate();
  if (grid < 2) grid = 2;
  std::vector<int> idx(model.d, 0);
  double worst = 0;
  while (true) {
    std::vector<double> k(model.d);
    for (int i = 0; i < model.d; ++i) k[i] = 2.0 * kPi * idx[i] / grid;
    MatC h = bloch_hamiltonian(model, k);
    for (const auto& g : model.generators) {
      MatC m = g.antiunitary ? h.conjugate() : h;
      MatC lhs = g.u * m * g.u.adjoint();
      MatC rhs = bloch_hamiltonian(model, momentum_action(g, k));
      worst = std::max(worst, (lhs - rhs).norm());
    }
    int pos = 0;
    while (pos < model.d && ++idx[pos] == grid) idx[pos++] = 0;
    if (pos == model.d) break;
  }
  return worst;
}

MatC fermi_projector(const TightBindingModel& model,
                     const std::vector<double>& k, double gap_tol) {
  MatC h = bloch_hamiltonian(model, k);
  Eigen::SelfAdjointEigenSolver<MatC> es(h);
  MatC p = MatC::Zero(model.k_int, model.k_int);
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    double ev = es.eigenvalues()(i);
    if (std::abs(ev) <= gap_tol)
      throw Error(ErrorCode::gap,
                  "spectral gap violated: eigenvalue " + std::to_string(ev));
    if (ev < 0)
      p += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  }
  if ((p * p - p).norm() > 1e-10 || (p - p.adjoint()).norm() > 1e-12)
    throw Error(ErrorCode::internal, "projector residual too large");
  return p;
}

namespace {

// Momentum matrix of a generator with the antiunitary sign folded in.
Eigen::MatrixXi momentum_matrix(const SymmetryGenerator& g) {
  Eigen::MatrixXi b = integer_inverse(g.lattice_action).transpose();
  if (g.antiunitary) b = -b;
  return b;
}

template <typename Elem, typename Mul, typename Same>
std::vector<Elem> close_elements(std::vector<Elem> gens, Mul mul, Same same,
                                 const Elem& id, int cap) {
  std::vector<Elem> elems = {id};
  auto find = [&](const Elem& e) -> int {
    for (size_t i = 0; i < elems.size(); ++i)
      if (same(elems[i], e)) return (int)i;
    return -1;
  };
  for (const auto& g : gens)
    if (find(g) < 0) elems.push_back(g);
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j) {
      Elem prod = mul(elems[i], elems[j]);
      if (find(prod) < 0) {
        if ((int)elems.size() >= cap)
          throw Error(ErrorCode::symmetry,
                      "symmetry operators do not close into a small finite "
                      "group; check for nontrivial projective phases");
        elems.push_back(prod);
      }
    }
  return elems;
}

template <typename Elem, typename Mul, typename Same>
GroupPtr group_from_elements(const std::vector<Elem>& elems, Mul mul,
                             Same same, std::optional<int> t) {
  int n = (int)elems.size();
  std::vector<int> table(n * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elem prod = mul(elems[i], elems[j]);
      for (int k = 0; k < n; ++k)
        if (same(elems[k], prod)) {
          table[i * n + j] = k;
          break;
        }
      if (table[i * n + j] < 0)
        throw Error(ErrorCode::symmetry, "symmetry closure is inconsistent");
    }
  return FiniteGroup::from_table(n, std::move(table), t);
}

}  // namespace

UnitarySymmetryGroup unitary_symmetry_group(const TightBindingModel& m) {
  for (const auto& g : m.generators)
    if (g.antiunitary)
      throw Error(ErrorCode::domain,
                  "unitary symmetry group requested for a model with "
                  "antiunitary generators");
  using Elem = std::pair<Eigen::MatrixXi, MatC>;
  auto mul = [](const Elem& a, const Elem& b) {
    return Elem{a.first * b.first, a.second * b.second};
  };
  auto same = [](const Elem& a, const Elem& b) {
    return a.first == b.first && (a.second - b.second).norm() < 1e-6;
  };
  std::vector<Elem> gens;
  for (const auto& g : m.generators)
    gens.push_back({momentum_matrix(g), g.u});
  Elem id{Eigen::MatrixXi::Identity(m.d, m.d),
          MatC::Identity(m.k_int, m.k_int)};
  auto elems = close_elements(gens, mul, same, id, 1024);

  UnitarySymmetryGroup out;
  out.group = group_from_elements(elems, mul, same, std::nullopt);
  for (const auto& e : elems) {
    out.momentum.push_back(e.first);
    out.fibre.push_back(e.second);
  }
  return out;
}

RealifiedSymmetryGroup realified_symmetry_group(const TightBindingModel& m) {
  using Elem = std::pair<Eigen::MatrixXi, MatR>;
  auto mul = [](const Elem& a, const Elem& b) {
    return Elem{a.first * b.first, a.second * b.second};
  };
  auto same = [](const Elem& a, const Elem& b) {
    return a.first == b.first && (a.second - b.second).norm() < 1e-6;
  };
  std::vector<Elem> gens;
  // Multiplication by i on the fibre, trivial on momenta.
  MatC i_mat = cplx(0, 1) * MatC::Identity(m.k_int, m.k_int);
  gens.push_back({Eigen::MatrixXi::Identity(m.d, m.d), realify(i_mat)});
  for (const auto& g : m.generators)
    gens.push_back({momentum_matrix(g), g.antiunitary
                                            ? realify_antiunitary(g.u)
                                            : realify(g.u)});
  Elem id{Eigen::MatrixXi::Identity(m.d, m.d),
          MatR::Identity(2 * m.k_int, 2 * m.k_int)};
  auto elems = close_elements(gens, mul, same, id, 2048);

  int t_index = -1;
  MatR minus = -MatR::Identity(2 * m.k_int, 2 * m.k_int);
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i].first == id.first && (elems[i].second - minus).norm() < 1e-6)
      t_index = (int)i;
  if (t_index < 0)
    throw Error(ErrorCode::internal, "realified group has no -1 element");

  RealifiedSymmetryGroup out;
  out.group = group_from_elements(elems, mul, same, t_index);
  out.t_index = t_index;
  for (const auto& e : elems) out.elements.push_back({e.first, e.second});
  return out;
}

std::vector<int> fibre_multiplicities(const TightBindingModel& model,
                                      const std::vector<double>& k_star,
                                      const UnitarySymmetryGroup& sym,
                                      const std::vector<int>& stabiliser,
                                      const BlochOptions& opt) {
  // Every listed element must fix k_star on the torus.
  for (int idx : stabiliser) {
    const auto& b = sym.momentum[idx];
    for (int i = 0; i < model.d; ++i) {
      double moved = 0;
      for (int j = 0; j < model.d; ++j) moved += b(i, j) * k_star[j];
      double diff = (moved - k_star[i]) / (2.0 * kPi);
      if (std::abs(diff - std::round(diff)) > 1e-9)
        throw Error(ErrorCode::domain,
                    "stabiliser element does not fix the momentum");
    }
  }
  Subgroup sub;
  sub.parent = sym.group;
  sub.members = stabiliser;
  std::sort(sub.members.begin(), sub.members.end());
  auto mat = subgroup_as_group(sub);
  auto table = complex_character_table(mat.group);

  MatC p = fermi_projector(model, k_star, opt.gap_tol);
  int rank = (int)std::llround(p.trace().real());

  std::vector<int> out(table.chars.size(), 0);
  int total = 0;
  for (size_t r = 0; r < table.chars.size(); ++r) {
    cplx acc = 0;
    for (int h = 0; h < mat.group->order(); ++h) {
      const MatC& u = sym.fibre[mat.to_parent[h]];
      acc += std::conj(table.chars[r][table.classes.class_of[h]]) *
             (u * p).trace();
    }
    acc /= (double)mat.group->order();
    double m = acc.real();
    double rounded = std::round(m);
    if (std::abs(acc.imag()) > opt.tol_int ||
        std::abs(m - rounded) > opt.tol_int || rounded < -0.1)
      throw Error(ErrorCode::numeric,
                  "fibre multiplicity is not a nonnegative integer; "
                  "symmetry or gap violated upstream");
    out[r] = (int)rounded;
    total += out[r] * table.degrees[r];
  }
  if (total != rank)
    throw Error(ErrorCode::numeric, "multiplicity sum rule violated");
  return out;
}

namespace {

std::vector<std::vector<int>> fixed_point_candidates(int d) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << d); ++mask) {
    std::vector<int> w(d);
    for (int i = 0; i < d; ++i) w[i] = (mask >> i) & 1;
    out.push_back(w);
  }
  return out;
}

bool fixes_point(const Eigen::MatrixXi& b, const std::vector<int>& w) {
  // k = pi w; b k - k must lie in 2 pi Z^d, i.e. (b - 1) w must be even.
  for (int i = 0; i < b.rows(); ++i) {
    int acc = -w[i];
    for (int j = 0; j < b.cols(); ++j) acc += b(i, j) * w[j];
    if (acc % 2 != 0) return false;
  }
  return true;
}

std::string point_id(const std::vector<int>& w) {
  std::string s = "k=(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += w[i] ? "pi" : "0";
  }
  return s + ")";
}

std::vector<double> point_momentum(const std::vector<int>& w) {
  std::vector<double> k(w.size());
  for (size_t i = 0; i < w.size(); ++i) k[i] = w[i] ? kPi : 0.0;
  return k;
}

// Occupied-subspace real representation matrices of the listed elements at
// one momentum, via an orthonormal basis of the realified projector image.
std::vector<int> realified_multiplicities(const TightBindingModel& model,
                                          const RealifiedSymmetryGroup& rsym,
                                          const std::vector<int>& members,
                                          const MaterializedSubgroup& mat,
                                          const RealIrrepSet& set,
                                          const std::vector<double>& k_star,
                                          const BlochOptions& opt) {
  MatC p = fermi_projector(model, k_star, opt.gap_tol);
  int n = model.k_int;
  MatR p_real(2 * n, 2 * n);
  p_real.topLeftCorner(n, n) = p.real();
  p_real.topRightCorner(n, n) = -p.imag();
  p_real.bottomLeftCorner(n, n) = p.imag();
  p_real.bottomRightCorner(n, n) = p.real();

  Eigen::SelfAdjointEigenSolver<MatR> es(p_real);
  std::vector<int> occ;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    double ev = es.eigenvalues()(i);
    if (std::abs(ev - 1.0) < 1e-8)
      occ.push_back(i);
    else if (std::abs(ev) > 1e-8)
      throw Error(ErrorCode::internal, "realified projector not idempotent");
  }
  MatR basis(2 * n, (int)occ.size());
  for (size_t i = 0; i < occ.size(); ++i) basis.col(i) = es.eigenvectors().col(occ[i]);

  std::vector<double> traces(mat.group->order());
  for (int h = 0; h < mat.group->order(); ++h) {
    const MatR& m_h = rsym.elements[mat.to_parent[h]].fibre;
    MatR on_occ = basis.transpose() * m_h * basis;
    // The symmetry must preserve the occupied subspace.
    if ((m_h * p_real - p_real * m_h).norm() > 1e-6)
      throw Error(ErrorCode::numeric,
                  "stabiliser element does not preserve the projector");
    traces[h] = on_occ.trace();
  }
  (void)members;
  auto chi = class_function_from_traces(set.classes, traces);
  std::vector<int> out(set.irreps.size(), 0);
  int total = 0;
  for (size_t i = 0; i < set.irreps.size(); ++i) {
    out[i] = multiplicity(set, chi, set.irreps[i], opt.tol_int);
    if (out[i] > 0 && !set.irreps[i].odd)
      throw Error(ErrorCode::internal,
                  "realified occupied space contains an even irrep");
    total += out[i] * set.irreps[i].real_dim;
  }
  if (total != (int)occ.size())
    throw Error(ErrorCode::numeric, "multiplicity sum rule violated");
  return out;
}

}  // namespace

BlochAnalysis analyze(const TightBindingModel& model,
                      const BlochOptions& opt) {
  model.validate();
  BlochAnalysis out;

  out.symmetry_residual = check_symmetry(model, opt.grid);
  if (out.symmetry_residual > opt.symmetry_tol)
    throw Error(ErrorCode::symmetry,
                "symmetry residual " + std::to_string(out.symmetry_residual) +
                    " exceeds tolerance");

  // Gap and rank scan over the full grid.
  int grid = std::max(2, opt.grid - opt.grid % 2);
  std::vector<int> idx(model.d, 0);
  double gap = 1e300;
  int rank = -1;
  while (true) {
    std::vector<double> k(model.d);
    for (int i = 0; i < model.d; ++i) k[i] = 2.0 * kPi * idx[i] / grid;
    MatC h = bloch_hamiltonian(model, k);
    Eigen::SelfAdjointEigenSolver<MatC> es(h);
    int neg = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
      double ev = es.eigenvalues()(i);
      gap = std::min(gap, std::abs(ev));
      if (ev < 0) ++neg;
    }
    if (gap <= opt.gap_tol)
      throw Error(ErrorCode::gap, "spectral gap closes on the grid");
    if (rank < 0) rank = neg;
    if (neg != rank)
      throw Error(ErrorCode::gap, "occupied rank is not constant");
    int pos = 0;
    while (pos < model.d && ++idx[pos] == grid) idx[pos++] = 0;
    if (pos == model.d) break;
  }
  out.gap = gap;
  out.occupied_rank = rank;

  // Band samples along the first axis for external plotting.
  for (int i = 0; i < grid; ++i) {
    std::vector<double> k(model.d, 0.0);
    k[0] = 2.0 * kPi * i / grid;
    Eigen::SelfAdjointEigenSolver<MatC> es(bloch_hamiltonian(model, k));
    for (int j = 0; j < es.eigenvalues().size(); ++j)
      out.band_samples.push_back(es.eigenvalues()(j));
  }

  out.antiunitary_mode = model.has_antiunitary();
  std::vector<double> generic(model.d);
  for (int i = 0; i < model.d; ++i) generic[i] = 0.31 + 0.17 * i;

  if (!out.antiunitary_mode) {
    auto sym = unitary_symmetry_group(model);
    int n = sym.group->order();
    std::vector<int> kernel;
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) {
      all[i] = i;
      if (sym.momentum[i] == Eigen::MatrixXi::Identity(model.d, model.d))
        kernel.push_back(i);
    }
    bool has_fixed_stratum = (int)kernel.size() != n;

    SpaceSpec space;
    space.group = sym.group;
    std::vector<std::vector<int>> fixed_pts;
    if (has_fixed_stratum) {
      StratumSpec fixed;
      fixed.id = "fixed";
      fixed.stabiliser = full_subgroup(sym.group);
      fixed.d = opt.d0;
      for (const auto& w : fixed_point_candidates(model.d)) {
        int stab = 0;
        for (int i = 0; i < n; ++i)
          if (fixes_point(sym.momentum[i], w)) ++stab;
        if (stab == n) {
          fixed.components.push_back(point_id(w));
          fixed_pts.push_back(w);
        } else if (stab != (int)kernel.size()) {
          throw Error(ErrorCode::domain,
                      "high-symmetry point " + point_id(w) +
                          " has an intermediate stabiliser; supply the "
                          "stratified space explicitly via the check "
                          "command");
        }
      }
      if (!fixed.components.empty()) space.strata.push_back(fixed);
    }
    {
      StratumSpec free;
      free.id = "free";
      free.stabiliser.parent = sym.group;
      free.stabiliser.members = kernel;
      free.d = model.d;
      free.components = {"bulk"};
      space.strata.push_back(free);
    }
    out.space = space;

    BundleSpec bundle = zero_bundle(space, Field::C, false);
    if (!fixed_pts.empty()) {
      auto ctx_probe = subgroup_as_group(full_subgroup(sym.group));
      auto table = complex_character_table(ctx_probe.group);
      for (size_t i = 0; i < fixed_pts.size(); ++i) {
        auto m = fibre_multiplicities(model, point_momentum(fixed_pts[i]),
                                      sym, all, opt);
        FixedPointData fp;
        fp.k_over_pi = fixed_pts[i];
        for (size_t r = 0; r < m.size(); ++r)
          fp.irreps.push_back(
              irrep_signature_complex((int)r, table.degrees[r]));
        fp.multiplicities = m;
        out.fixed_points.push_back(fp);
        bundle.fibres[{"fixed", point_id(fixed_pts[i])}] = m;
      }
    }
    bundle.fibres[{"free", "bulk"}] =
        fibre_multiplicities(model, generic, sym, kernel, opt);
    out.bundle = bundle;
  } else {
    auto rsym = realified_symmetry_group(model);
    int n = rsym.group->order();
    std::vector<int> kernel;
    for (int i = 0; i < n; ++i)
      if (rsym.elements[i].momentum ==
          Eigen::MatrixXi::Identity(model.d, model.d))
        kernel.push_back(i);

    SpaceSpec space;
    space.group = rsym.group;
    std::vector<std::vector<int>> fixed_pts;
    StratumSpec fixed;
    fixed.id = "fixed";
    fixed.stabiliser = full_subgroup(rsym.group);
    fixed.d = opt.d0;
    for (const auto& w : fixed_point_candidates(model.d)) {
      int stab = 0;
      for (int i = 0; i < n; ++i)
        if (fixes_point(rsym.elements[i].momentum, w)) ++stab;
      if (stab == n) {
        fixed.components.push_back(point_id(w));
        fixed_pts.push_back(w);
      } else if (stab != (int)kernel.size()) {
        throw Error(ErrorCode::domain,
                    "high-symmetry point " + point_id(w) +
                        " has an intermediate stabiliser; supply the "
                        "stratified space explicitly");
      }
    }
    bool has_fixed_stratum =
        (int)kernel.size() != n && !fixed.components.empty();
    if (has_fixed_stratum) space.strata.push_back(fixed);
    {
      StratumSpec free;
      free.id = "free";
      free.stabiliser.parent = rsym.group;
      free.stabiliser.members = kernel;
      free.d = model.d;
      free.components = {"bulk"};
      space.strata.push_back(free);
    }
    out.space = space;

    auto ctx = SpaceContext::build(space);
    BundleSpec bundle = zero_bundle(space, Field::R, true);
    int fixed_si = has_fixed_stratum ? 0 : -1;
    if (has_fixed_stratum) {
      const auto& sc = ctx.strata[0];
      for (size_t i = 0; i < fixed_pts.size(); ++i) {
        auto m = realified_multiplicities(
            model, rsym, space.strata[0].stabiliser.members, sc.sub,
            sc.real_set, point_momentum(fixed_pts[i]), opt);
        FixedPointData fp;
        fp.k_over_pi = fixed_pts[i];
        for (size_t r = 0; r < m.size(); ++r)
          fp.irreps.push_back(
              irrep_signature((int)r, sc.real_set.irreps[r]));
        fp.multiplicities = m;
        out.fixed_points.push_back(fp);
        bundle.fibres[{"fixed", point_id(fixed_pts[i])}] = m;
      }
    }
    {
      const auto& sc = ctx.strata[fixed_si + 1];
      bundle.fibres[{"free", "bulk"}] = realified_multiplicities(
          model, rsym, kernel, sc.sub, sc.real_set, generic, opt);
    }
    out.bundle = bundle;
  }

  // Robustness: every irrep of every stabiliser (odd ones in odd mode) must
  // clear the unstabilisation threshold; a rank-1 complex bundle is covered
  // by the exterior-power route instead.
  auto ctx = SpaceContext::build(out.space);
  bool threshold_ok = true;
  for (size_t si = 0; si < out.space.strata.size(); ++si) {
    const auto& s = out.space.strata[si];
    const auto& sc = ctx.strata[si];
    int count = irrep_count(sc, out.bundle.field);
    for (const auto& comp : s.components) {
      auto stored = out.bundle.fibre(s.id, comp);
      for (int i = 0; i < count; ++i) {
        if (out.bundle.odd && !irrep_odd(sc, out.bundle.field, i)) continue;
        int c = irrep_commutant(sc, out.bundle.field, i);
        int required = std::max(0, (s.d + 2 - c + c - 1) / c);
        int have = i < (int)stored.size() ? stored[i] : 0;
        if (have < required) threshold_ok = false;
      }
    }
  }

  // Universal comparison bundle for the report: contains every relevant
  // irrep of the whole group.
  std::vector<int> probe;
  if (out.bundle.field == Field::C) {
    auto table = complex_character_table(out.space.group);
    probe.assign(table.chars.size(), 1);
  } else {
    probe = regular_odd_multiplicities(real_irreps(out.space.group));
  }
  auto v_ref = trivial_bundle(out.space, out.bundle.field, probe, 1);
  out.stable_verdict = stable_iso_verdict(out.bundle, out.bundle, v_ref);

  if (out.bundle.field == Field::C && out.occupied_rank == 1)
    out.robustness = Robustness::robust_line_rule;
  else if (threshold_ok)
    out.robustness = Robustness::robust_threshold;
  else
    out.robustness = Robustness::fragile_possible;

  // Stable triviality of the data: some representation of the whole group
  // restricts to the recorded fibre data on every component.
  {
    bool trivial_data = true;
    std::vector<int> w;
    if (!out.fixed_points.empty()) {
      w = out.fixed_points[0].multiplicities;
    } else {
      // No fixed stratum: compare against the free fibre directly.
      w = out.bundle.fibre("free", "bulk");
    }
    try {
      auto t = trivial_bundle(out.space, out.bundle.field, w, 1);
      for (const auto& s : out.space.strata)
        for (const auto& comp : s.components) {
          auto a = out.bundle.fibre(s.id, comp);
          auto b = t.fibre(s.id, comp);
          std::vector<int> av(a.begin(), a.end()), bv(b.begin(), b.end());
          size_t len = std::max(av.size(), bv.size());
          av.resize(len, 0);
          bv.resize(len, 0);
          if (av != bv) trivial_data = false;
        }
    } catch (const Error&) {
      trivial_data = false;
    }
    out.stably_trivial_data = trivial_data;
  }

  return out;
}

}  // namespace eqb
