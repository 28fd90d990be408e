#include "eqb/oracles.hpp"

#include <cmath>

namespace eqb {

void validate_circle_bundle(const CircleBundle& b) {
  if (b.k < 0 || b.l_minus < 0 || b.l_plus < 0 || b.l_minus > b.k ||
      b.l_plus > b.k)
    throw Error(ErrorCode::domain, "eigenspace dimensions must lie in [0,k]");
}

bool circle_is_trivial(const CircleBundle& b) {
  validate_circle_bundle(b);
  return b.l_minus == b.l_plus;
}

bool circle_has_trivial_summand(const CircleBundle& b,
                                bool nontrivial_character) {
  validate_circle_bundle(b);
  if (nontrivial_character) return b.l_minus >= 1 && b.l_plus >= 1;
  return b.l_minus <= b.k - 1 && b.l_plus <= b.k - 1;
}

bool circle_embeds(const CircleBundle& v, const CircleBundle& e) {
  validate_circle_bundle(v);
  validate_circle_bundle(e);
  int dk = e.k - v.k;
  return e.l_minus >= v.l_minus && e.l_plus >= v.l_plus &&
         e.l_minus - v.l_minus <= dk && e.l_plus - v.l_plus <= dk;
}

CircleBundle circle_direct_sum(const CircleBundle& a, const CircleBundle& b) {
  return CircleBundle{a.k + b.k, a.l_minus + b.l_minus, a.l_plus + b.l_plus};
}

bool circle_stable_iso_is_iso(const CircleBundle& b1, const CircleBundle& b2,
                              const CircleBundle& v) {
  CircleBundle s1 = circle_direct_sum(b1, v);
  CircleBundle s2 = circle_direct_sum(b2, v);
  bool stably_iso = s1.k == s2.k && s1.l_minus == s2.l_minus &&
                    s1.l_plus == s2.l_plus;
  if (!stably_iso) return true;  // hypothesis fails, nothing to conclude
  return b1.k == b2.k && b1.l_minus == b2.l_minus && b1.l_plus == b2.l_plus;
}

ExplicitRep rep_from_generators(const GroupPtr& g,
                                const std::map<int, Eigen::MatrixXd>& gens) {
  if (gens.empty()) throw Error(ErrorCode::domain, "no generator matrices");
  int dim = (int)gens.begin()->second.rows();
  std::vector<Eigen::MatrixXd> mats(g->order());
  std::vector<char> known(g->order(), 0);
  mats[g->identity()] = Eigen::MatrixXd::Identity(dim, dim);
  known[g->identity()] = 1;
  std::vector<int> elems = {g->identity()};

  for (const auto& [idx, m] : gens) {
    if (m.rows() != dim || m.cols() != dim)
      throw Error(ErrorCode::domain, "generator matrices must share a size");
    if (known[idx]) {
      if ((mats[idx] - m).norm() > 1e-9)
        throw Error(ErrorCode::numeric, "inconsistent generator matrix");
      continue;
    }
    mats[idx] = m;
    known[idx] = 1;
    elems.push_back(idx);
  }

  auto fill = [&](int z, const Eigen::MatrixXd& mz) {
    if (!known[z]) {
      mats[z] = mz;
      known[z] = 1;
      elems.push_back(z);
    } else if ((mats[z] - mz).norm() > 1e-9) {
      throw Error(ErrorCode::numeric,
                  "generator matrices violate a group relation");
    }
  };
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j) {
      int x = elems[i], y = elems[j];
      fill(g->mul(x, y), mats[x] * mats[y]);
      fill(g->mul(y, x), mats[y] * mats[x]);
    }

  for (char k : known)
    if (!k)
      throw Error(ErrorCode::domain,
                  "generator matrices do not cover the whole group");

  // Full relation check against the table.
  for (int x = 0; x < g->order(); ++x)
    for (int y = 0; y < g->order(); ++y)
      if ((mats[g->mul(x, y)] - mats[x] * mats[y]).norm() > 1e-9)
        throw Error(ErrorCode::numeric, "matrices are not a representation");

  return ExplicitRep{g, std::move(mats)};
}

ExplicitRep regular_rep(const GroupPtr& g) {
  int n = g->order();
  std::vector<Eigen::MatrixXd> mats(n, Eigen::MatrixXd::Zero(n, n));
  // Left translation on functions: (h f)(x) = f(h^-1 x), i.e. basis vector
  // e_x maps to e_{h x}.
  for (int h = 0; h < n; ++h)
    for (int x = 0; x < n; ++x) mats[h](g->mul(h, x), x) = 1.0;
  return ExplicitRep{g, std::move(mats)};
}

ExplicitRep direct_sum(const ExplicitRep& a, const ExplicitRep& b) {
  if (a.group->order() != b.group->order())
    throw Error(ErrorCode::domain, "direct sum needs one group");
  int da = (int)a.matrices[0].rows();
  int db = (int)b.matrices[0].rows();
  std::vector<Eigen::MatrixXd> mats(a.matrices.size());
  for (size_t i = 0; i < mats.size(); ++i) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(da + db, da + db);
    m.topLeftCorner(da, da) = a.matrices[i];
    m.bottomRightCorner(db, db) = b.matrices[i];
    mats[i] = std::move(m);
  }
  return ExplicitRep{a.group, std::move(mats)};
}

namespace {

Eigen::MatrixXd isotypic_projector(const ExplicitRep& rep,
                                   const RealIrrepSet& set,
                                   const RealIrrep& rho) {
  int dim = (int)rep.matrices[0].rows();
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(dim, dim);
  for (int x = 0; x < rep.group->order(); ++x)
    p += rho.character[set.classes.class_of[x]] * rep.matrices[x];
  p *= (double)rho.real_dim / (rho.c * rep.group->order());
  return p;
}

// The projector may be oblique when the representation is not orthogonal,
// so use the general eigensolver; eigenvalues must still cluster at 0 and 1.
int projector_rank(const Eigen::MatrixXd& p, double tol) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(p);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::numeric, "projector eigendecomposition failed");
  int rank = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    cplx ev = es.eigenvalues()(i);
    if (std::abs(ev - 1.0) < tol) {
      ++rank;
    } else if (std::abs(ev) > tol) {
      throw Error(ErrorCode::numeric, "isotypic projector is not idempotent");
    }
  }
  return rank;
}

}  // namespace

std::vector<int> brute_decompose(const ExplicitRep& rep,
                                 const RealIrrepSet& set, double tol) {
  if (rep.group->order() != set.group->order())
    throw Error(ErrorCode::domain, "irrep set belongs to a different group");

  std::vector<double> traces(rep.group->order());
  for (int x = 0; x < rep.group->order(); ++x)
    traces[x] = rep.matrices[x].trace();
  std::vector<double> chi = class_function_from_traces(set.classes, traces);

  std::vector<int> out;
  for (const auto& rho : set.irreps) {
    int m_char = multiplicity(set, chi, rho, tol);
    Eigen::MatrixXd p = isotypic_projector(rep, set, rho);
    int rank = projector_rank(p, tol);
    if (rank % rho.real_dim != 0)
      throw Error(ErrorCode::numeric, "isotypic rank is not a multiple of dim");
    int m_proj = rank / rho.real_dim;
    if (m_proj != m_char)
      throw Error(ErrorCode::internal,
                  "character and projector multiplicities disagree");
    out.push_back(m_char);
  }
  return out;
}

std::vector<double> character_from_regular_rep(const RealIrrepSet& set,
                                               const RealIrrep& rho) {
  ExplicitRep reg = regular_rep(set.group);
  Eigen::MatrixXd p = isotypic_projector(reg, set, rho);
  std::vector<double> chi(set.classes.classes.size());
  for (size_t j = 0; j < set.classes.classes.size(); ++j) {
    int rep_elem = set.classes.classes[j][0];
    chi[j] = (double)rho.c / rho.real_dim *
             (reg.matrices[rep_elem] * p).trace();
  }
  return chi;
}

}  // namespace eqb
