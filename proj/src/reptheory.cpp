#include "eqb/reptheory.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

namespace eqb {

namespace {

double round_check(double x, double tol, const char* what) {
  double r = std::round(x);
  if (std::abs(x - r) > tol)
    throw Error(ErrorCode::numeric,
                std::string(what) + " is not integral: " + std::to_string(x));
  return r;
}

}  // namespace

ClassData ClassData::build(const FiniteGroup& g) {
  ClassData d;
  d.classes = conjugacy_classes(g);
  d.order = g.order();
  d.class_of.assign(g.order(), -1);
  for (int i = 0; i < (int)d.classes.size(); ++i) {
    d.sizes.push_back((int)d.classes[i].size());
    for (int x : d.classes[i]) d.class_of[x] = i;
  }
  return d;
}

CharacterTable complex_character_table(const GroupPtr& g,
                                       const TableOptions& opt) {
  if (g->order() > 128)
    throw Error(ErrorCode::domain, "character table limited to order <= 128");
  ClassData cd = ClassData::build(*g);
  int r = (int)cd.classes.size();

  // Class multiplication coefficients a[i][k][j]: the number of ways a fixed
  // representative of class j factors as (element of class i) * (element of
  // class k).  The vector of scaled character values
  // omega_j = |C_j| chi(g_j) / chi(1) is then a simultaneous eigenvector of
  // the matrices M_i with (M_i)_{kj} = a[i][k][j], eigenvalue omega_i.
  std::vector<Eigen::MatrixXd> M(r, Eigen::MatrixXd::Zero(r, r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      int rep = cd.classes[j][0];
      for (int x : cd.classes[i]) {
        int y = g->mul(g->inverse(x), rep);
        M[i](cd.class_of[y], j) += 1.0;
      }
    }

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> u(1.0, 2.0);

  int id_class = cd.class_of[g->identity()];
  std::string last_err;
  for (int attempt = 0; attempt < opt.max_retries; ++attempt) {
    Eigen::MatrixXd comb = Eigen::MatrixXd::Zero(r, r);
    for (int i = 0; i < r; ++i) comb += u(rng) * M[i];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comb.cast<cplx>());
    if (solver.info() != Eigen::Success) {
      last_err = "eigensolver failed";
      continue;
    }

    CharacterTable table;
    table.group = g;
    table.classes = cd;
    bool ok = true;
    for (int v = 0; v < r && ok; ++v) {
      Eigen::VectorXcd vec = solver.eigenvectors().col(v);
      if (std::abs(vec(id_class)) < 1e-9) {
        ok = false;
        break;
      }
      Eigen::VectorXcd omega = vec / vec(id_class);
      // Residual against every class matrix; a degenerate random combination
      // shows up here and triggers a retry.
      for (int i = 0; i < r && ok; ++i) {
        Eigen::VectorXcd resid = M[i].cast<cplx>() * omega -
                                 omega(i) * omega;
        if (resid.norm() > 1e-6 * (1.0 + omega.norm())) ok = false;
      }
      if (!ok) break;
      double inv_sq = 0;
      for (int j = 0; j < r; ++j)
        inv_sq += std::norm(omega(j)) / cd.sizes[j];
      double deg = std::sqrt((double)g->order() / inv_sq);
      double deg_r = std::round(deg);
      if (std::abs(deg - deg_r) > opt.tol_int || deg_r < 1.0) {
        ok = false;
        break;
      }
      std::vector<cplx> row(r);
      for (int j = 0; j < r; ++j) row[j] = omega(j) * deg_r / (double)cd.sizes[j];
      table.degrees.push_back((int)deg_r);
      table.chars.push_back(std::move(row));
    }
    if (!ok) {
      last_err = "degenerate eigenvector set";
      continue;
    }

    // Canonical order: trivial character first, then by degree, then by
    // class-value lexicographic comparison.  Keeps outputs reproducible.
    // Sort keys on a fixed rounding grid so the comparison is a strict
    // weak ordering even with floating point values.
    std::vector<int> perm(r);
    for (int i = 0; i < r; ++i) perm[i] = i;
    auto grid = [](double x) { return (long long)std::llround(x * 1e6); };
    auto value_less = [&](int a, int b) {
      if (table.degrees[a] != table.degrees[b])
        return table.degrees[a] < table.degrees[b];
      for (int j = 0; j < r; ++j) {
        long long dre = grid(table.chars[a][j].real()) -
                        grid(table.chars[b][j].real());
        if (dre != 0) return dre > 0;
        long long dim = grid(table.chars[a][j].imag()) -
                        grid(table.chars[b][j].imag());
        if (dim != 0) return dim > 0;
      }
      return false;
    };
    std::sort(perm.begin(), perm.end(), value_less);
    CharacterTable sorted;
    sorted.group = g;
    sorted.classes = cd;
    for (int i : perm) {
      sorted.degrees.push_back(table.degrees[i]);
      sorted.chars.push_back(table.chars[i]);
    }
    table = std::move(sorted);

    // Health checks: row orthogonality, degree-sum identity, degree | order.
    int deg_sq = 0;
    for (int d : table.degrees) {
      deg_sq += d * d;
      if (g->order() % d != 0) {
        ok = false;
        last_err = "degree does not divide the group order";
      }
    }
    if (deg_sq != g->order()) {
      ok = false;
      last_err = "degree-sum identity violated";
    }
    for (int a = 0; a < r && ok; ++a)
      for (int b = 0; b < r && ok; ++b) {
        cplx ip = 0;
        for (int j = 0; j < r; ++j)
          ip += (double)cd.sizes[j] * table.chars[a][j] *
                std::conj(table.chars[b][j]);
        ip /= (double)g->order();
        cplx want = (a == b) ? cplx(1, 0) : cplx(0, 0);
        if (std::abs(ip - want) > opt.tol_ortho) {
          ok = false;
          last_err = "orthogonality violated";
        }
      }
    if (ok) return table;
  }
  throw Error(ErrorCode::numeric,
              "character table did not converge: " + last_err);
}

int frobenius_schur(const CharacterTable& table, int i) {
  if (i < 0 || i >= (int)table.chars.size())
    throw Error(ErrorCode::domain, "character index out of range");
  const auto& g = *table.group;
  cplx sum = 0;
  for (int x = 0; x < g.order(); ++x)
    sum += table.chars[i][table.classes.class_of[g.mul(x, x)]];
  sum /= (double)g.order();
  double re = sum.real();
  double rounded = std::round(re);
  if (std::abs(sum.imag()) > 1e-6 || std::abs(re - rounded) > 1e-6 ||
      rounded < -1.0 || rounded > 1.0)
    throw Error(ErrorCode::numeric, "frobenius-schur indicator corrupt");
  return (int)rounded;
}

RealIrrepSet real_irreps(const GroupPtr& g, const TableOptions& opt) {
  CharacterTable table = complex_character_table(g, opt);
  int r = (int)table.chars.size();
  RealIrrepSet set;
  set.group = g;
  set.classes = table.classes;

  std::vector<int> fs(r);
  for (int i = 0; i < r; ++i) fs[i] = frobenius_schur(table, i);

  auto to_real = [&](const std::vector<cplx>& row) {
    std::vector<double> out(row.size());
    for (size_t j = 0; j < row.size(); ++j) {
      if (std::abs(row[j].imag()) > opt.tol_ortho)
        throw Error(ErrorCode::numeric, "real character has imaginary part");
      out[j] = row[j].real();
    }
    return out;
  };

  std::vector<char> used(r, 0);
  for (int i = 0; i < r; ++i) {
    if (used[i]) continue;
    RealIrrep rho;
    if (fs[i] == 1) {
      used[i] = 1;
      rho.character = to_real(table.chars[i]);
      rho.real_dim = table.degrees[i];
      rho.type = IrrepType::R;
      rho.c = 1;
      rho.constituents = {i};
    } else if (fs[i] == -1) {
      used[i] = 1;
      std::vector<cplx> twice(table.chars[i]);
      for (auto& v : twice) v *= 2.0;
      rho.character = to_real(twice);
      rho.real_dim = 2 * table.degrees[i];
      rho.type = IrrepType::H;
      rho.c = 4;
      rho.constituents = {i};
    } else {
      // Complex type: find the conjugate partner by value matching.
      int partner = -1;
      for (int j = 0; j < r && partner < 0; ++j) {
        if (j == i || used[j]) continue;
        bool match = true;
        for (size_t k = 0; k < table.chars[i].size() && match; ++k)
          match = std::abs(table.chars[j][k] -
                           std::conj(table.chars[i][k])) < opt.tol_ortho;
        if (match) partner = j;
      }
      if (partner < 0)
        throw Error(ErrorCode::numeric,
                    "conjugate partner of a complex-type character missing");
      used[i] = used[partner] = 1;
      std::vector<cplx> sum(table.chars[i]);
      for (size_t k = 0; k < sum.size(); ++k) sum[k] += table.chars[partner][k];
      rho.character = to_real(sum);
      rho.real_dim = 2 * table.degrees[i];
      rho.type = IrrepType::C;
      rho.c = 2;
      rho.constituents = {i, partner};
    }
    if (g->t()) {
      double at_t = rho.character[set.classes.class_of[*g->t()]];
      rho.odd = std::abs(at_t + rho.real_dim) < opt.tol_int;
    }
    set.irreps.push_back(std::move(rho));
  }

  // Peter-Weyl count over R, exact after rounding.
  int total = 0;
  for (const auto& rho : set.irreps) total += rho.real_dim * rho.real_dim / rho.c;
  if (total != g->order())
    throw Error(ErrorCode::internal, "real irrep dimension count mismatch");

  std::sort(set.irreps.begin(), set.irreps.end(),
            [](const RealIrrep& a, const RealIrrep& b) {
              if (a.real_dim != b.real_dim) return a.real_dim < b.real_dim;
              if (a.c != b.c) return a.c < b.c;
              for (size_t j = 0; j < a.character.size(); ++j) {
                long long d = std::llround(a.character[j] * 1e6) -
                              std::llround(b.character[j] * 1e6);
                if (d != 0) return d > 0;
              }
              return false;
            });
  return set;
}

std::vector<RealIrrep> odd_irreps(const RealIrrepSet& set) {
  if (!set.group->t())
    throw Error(ErrorCode::domain, "odd irreps need the involution t");
  std::vector<RealIrrep> out;
  for (const auto& rho : set.irreps)
    if (rho.odd) out.push_back(rho);
  return out;
}

std::vector<RealIrrep> odd_irreps(const GroupPtr& g, const TableOptions& opt) {
  return odd_irreps(real_irreps(g, opt));
}

int multiplicity(const RealIrrepSet& set, const std::vector<double>& w,
                 const RealIrrep& rho, double tol_int) {
  if (w.size() != set.classes.classes.size())
    throw Error(ErrorCode::domain, "class function has wrong length");
  double ip = 0;
  for (size_t j = 0; j < w.size(); ++j)
    ip += set.classes.sizes[j] * w[j] * rho.character[j];
  ip /= (double)set.classes.order;
  double m = round_check(ip / rho.c, tol_int, "multiplicity");
  if (m < 0)
    throw Error(ErrorCode::numeric, "negative multiplicity; not a character");
  return (int)m;
}

int multiplicity_complex(const CharacterTable& table,
                         const std::vector<cplx>& w, int irrep,
                         double tol_int) {
  cplx ip = 0;
  for (size_t j = 0; j < w.size(); ++j)
    ip += (double)table.classes.sizes[j] * w[j] *
          std::conj(table.chars[irrep][j]);
  ip /= (double)table.classes.order;
  if (std::abs(ip.imag()) > tol_int)
    throw Error(ErrorCode::numeric, "complex multiplicity is not real");
  double m = round_check(ip.real(), tol_int, "multiplicity");
  if (m < 0)
    throw Error(ErrorCode::numeric, "negative multiplicity; not a character");
  return (int)m;
}

template <typename T>
static std::vector<T> restrict_impl(const ClassData& g_classes,
                                    const std::vector<T>& chi,
                                    const MaterializedSubgroup& sub,
                                    const ClassData& sub_classes) {
  std::vector<T> out(sub_classes.classes.size());
  for (size_t j = 0; j < sub_classes.classes.size(); ++j) {
    int rep_sub = sub_classes.classes[j][0];
    int rep_parent = sub.to_parent[rep_sub];
    out[j] = chi[g_classes.class_of[rep_parent]];
  }
  return out;
}

std::vector<double> restrict_class_function(const ClassData& g_classes,
                                            const std::vector<double>& chi,
                                            const MaterializedSubgroup& sub,
                                            const ClassData& sub_classes) {
  return restrict_impl(g_classes, chi, sub, sub_classes);
}

std::vector<cplx> restrict_class_function(const ClassData& g_classes,
                                          const std::vector<cplx>& chi,
                                          const MaterializedSubgroup& sub,
                                          const ClassData& sub_classes) {
  return restrict_impl(g_classes, chi, sub, sub_classes);
}

std::vector<double> regular_odd_character(const RealIrrepSet& set) {
  auto t = set.group->t();
  if (!t)
    throw Error(ErrorCode::domain, "regular odd character needs t");
  std::vector<double> chi(set.classes.classes.size(), 0.0);
  chi[set.classes.class_of[set.group->identity()]] = set.classes.order / 2.0;
  chi[set.classes.class_of[*t]] = -set.classes.order / 2.0;
  return chi;
}

std::optional<RealIrrep> unique_odd_irrep(const RealIrrepSet& set) {
  auto odd = odd_irreps(set);
  if (odd.size() == 1) return odd[0];
  return std::nullopt;
}

std::vector<double> class_function_from_traces(
    const ClassData& classes, const std::vector<double>& traces) {
  if ((int)traces.size() != classes.order)
    throw Error(ErrorCode::domain, "trace table has wrong length");
  std::vector<double> out(classes.classes.size());
  for (size_t j = 0; j < classes.classes.size(); ++j) {
    double v = traces[classes.classes[j][0]];
    for (int x : classes.classes[j])
      if (std::abs(traces[x] - v) > 1e-6)
        throw Error(ErrorCode::numeric, "traces are not a class function");
    out[j] = v;
  }
  return out;
}

const char* irrep_type_name(IrrepType t) {
  switch (t) {
    case IrrepType::R: return "R";
    case IrrepType::C: return "C";
    case IrrepType::H: return "H";
  }
  return "?";
}

std::string irrep_signature(int index, const RealIrrep& rho) {
  return "#" + std::to_string(index) + ":d" + std::to_string(rho.real_dim) +
         irrep_type_name(rho.type);
}

std::string irrep_signature_complex(int index, int degree) {
  return "#" + std::to_string(index) + ":d" + std::to_string(degree);
}

}  // namespace eqb
