#include "eqb/bundle.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace eqb {

const char* field_name(Field f) {
  switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
  }
  return "?";
}

const StratumSpec& SpaceSpec::stratum(const std::string& id) const {
  return strata[stratum_index(id)];
}

int SpaceSpec::stratum_index(const std::string& id) const {
  for (size_t i = 0; i < strata.size(); ++i)
    if (strata[i].id == id) return (int)i;
  throw Error(ErrorCode::domain, "unknown stratum id: " + id);
}

bool same_space(const SpaceSpec& a, const SpaceSpec& b) {
  if (a.relative != b.relative) return false;
  if (a.group->order() != b.group->order()) return false;
  if (a.group->table() != b.group->table()) return false;
  if (a.group->t() != b.group->t()) return false;
  if (a.strata.size() != b.strata.size()) return false;
  for (size_t i = 0; i < a.strata.size(); ++i) {
    const auto& x = a.strata[i];
    const auto& y = b.strata[i];
    if (x.id != y.id || x.d != y.d || x.components != y.components ||
        x.stabiliser.members != y.stabiliser.members)
      return false;
  }
  return true;
}

SpaceContext SpaceContext::build(const SpaceSpec& space,
                                 const TableOptions& opt) {
  SpaceContext ctx;
  for (const auto& s : space.strata) {
    if (s.components.empty())
      throw Error(ErrorCode::domain,
                  "stratum " + s.id + " has no components");
    if (s.d < 0)
      throw Error(ErrorCode::domain, "stratum " + s.id + " has d < 0");
    if (!is_subgroup(s.stabiliser))
      throw Error(ErrorCode::domain,
                  "stabiliser of stratum " + s.id + " is not a subgroup");
    if (s.stabiliser.parent->table() != space.group->table())
      throw Error(ErrorCode::domain,
                  "stabiliser of stratum " + s.id +
                      " belongs to a different group");
    StratumContext sc;
    sc.sub = subgroup_as_group(s.stabiliser);
    sc.real_set = real_irreps(sc.sub.group, opt);
    sc.complex_table = complex_character_table(sc.sub.group, opt);
    ctx.strata.push_back(std::move(sc));
  }
  std::set<std::string> ids;
  for (const auto& s : space.strata)
    if (!ids.insert(s.id).second)
      throw Error(ErrorCode::domain, "duplicate stratum id: " + s.id);
  return ctx;
}

int irrep_count(const StratumContext& ctx, Field field) {
  if (field == Field::C) return (int)ctx.complex_table.chars.size();
  return (int)ctx.real_set.irreps.size();
}

int irrep_dim(const StratumContext& ctx, Field field, int i) {
  switch (field) {
    case Field::C:
      return ctx.complex_table.degrees[i];
    case Field::R:
      return ctx.real_set.irreps[i].real_dim;
    case Field::H: {
      // Quaternionic irreps indexed through the bijection with real irreps;
      // the quaternionic dimension is real_dim scaled by the type.
      const auto& rho = ctx.real_set.irreps[i];
      switch (rho.type) {
        case IrrepType::R: return rho.real_dim;
        case IrrepType::C: return rho.real_dim / 2;
        case IrrepType::H: return rho.real_dim / 4;
      }
    }
  }
  return 0;
}

int irrep_commutant(const StratumContext& ctx, Field field, int i) {
  switch (field) {
    case Field::C: return 2;
    case Field::H: return 4;
    case Field::R: return ctx.real_set.irreps[i].c;
  }
  return 1;
}

bool irrep_odd(const StratumContext& ctx, Field field, int i) {
  auto t = ctx.sub.group->t();
  if (!t) return false;
  if (field == Field::C) {
    cplx at_t =
        ctx.complex_table.chars[i][ctx.complex_table.classes.class_of[*t]];
    return std::abs(at_t + (double)ctx.complex_table.degrees[i]) < 1e-9;
  }
  return ctx.real_set.irreps[i].odd;
}

std::string irrep_label(const StratumContext& ctx, Field field, int i) {
  if (field == Field::C)
    return irrep_signature_complex(i, ctx.complex_table.degrees[i]);
  return irrep_signature(i, ctx.real_set.irreps[i]);
}

const std::vector<int>& BundleSpec::fibre(const std::string& stratum,
                                          const std::string& component) const {
  static const std::vector<int> empty;
  auto it = fibres.find({stratum, component});
  return it == fibres.end() ? empty : it->second;
}

namespace {

std::vector<int> fibre_vector(const BundleSpec& b, const SpaceContext& ctx,
                              int stratum_index, const std::string& comp) {
  const auto& s = b.space.strata[stratum_index];
  const auto& stored = b.fibre(s.id, comp);
  std::vector<int> out(irrep_count(ctx.strata[stratum_index], b.field), 0);
  if (stored.empty()) return out;
  if (stored.size() != out.size())
    throw Error(ErrorCode::domain,
                "fibre vector for " + s.id + "/" + comp +
                    " has wrong length");
  std::copy(stored.begin(), stored.end(), out.begin());
  return out;
}

// Real character of the fibre on the stabiliser (per class); used for
// adjacency compatibility checks.  For field H the realified module of the
// irrep attached to rho appears 4/c times.
std::vector<double> fibre_real_character(const BundleSpec& b,
                                         const SpaceContext& ctx, int si,
                                         const std::string& comp) {
  const auto& sc = ctx.strata[si];
  auto m = fibre_vector(b, ctx, si, comp);
  size_t n_cls = sc.real_set.classes.classes.size();
  std::vector<double> chi(n_cls, 0.0);
  if (b.field == Field::C) {
    for (size_t j = 0; j < n_cls; ++j) {
      cplx v = 0;
      for (size_t i = 0; i < m.size(); ++i)
        v += (double)m[i] * sc.complex_table.chars[i][j];
      chi[j] = 2.0 * v.real();
    }
    return chi;
  }
  for (size_t i = 0; i < m.size(); ++i) {
    const auto& rho = sc.real_set.irreps[i];
    double scale = (b.field == Field::H) ? 4.0 / rho.c : 1.0;
    for (size_t j = 0; j < n_cls; ++j)
      chi[j] += m[i] * scale * rho.character[j];
  }
  return chi;
}

}  // namespace

int component_rank(const BundleSpec& b, const SpaceContext& ctx,
                   const std::string& stratum, const std::string& component) {
  int si = b.space.stratum_index(stratum);
  auto m = fibre_vector(b, ctx, si, component);
  int rank = 0;
  for (size_t i = 0; i < m.size(); ++i)
    rank += m[i] * irrep_dim(ctx.strata[si], b.field, i);
  return rank;
}

ValidationReport validate(const BundleSpec& b, const SpaceContext& ctx) {
  ValidationReport rep;
  auto issue = [&](const std::string& where, const std::string& msg) {
    rep.ok = false;
    rep.issues.push_back({where, msg});
  };

  if (b.odd && !b.space.group->t())
    issue("bundle", "odd flag requires the distinguished involution t");

  std::set<std::pair<std::string, std::string>> valid_keys;
  for (const auto& s : b.space.strata)
    for (const auto& c : s.components) valid_keys.insert({s.id, c});
  for (const auto& [key, vec] : b.fibres) {
    if (!valid_keys.count(key)) {
      issue(key.first + "/" + key.second, "no such stratum component");
      continue;
    }
    for (int v : vec)
      if (v < 0) issue(key.first + "/" + key.second, "negative multiplicity");
  }

  for (size_t si = 0; si < b.space.strata.size(); ++si) {
    const auto& s = b.space.strata[si];
    const auto& sc = ctx.strata[si];
    if (b.odd) {
      if (!sc.sub.group->t()) {
        issue(s.id, "stabiliser does not contain t");
      }
    }
    for (const auto& comp : s.components) {
      std::vector<int> m;
      try {
        m = fibre_vector(b, ctx, (int)si, comp);
      } catch (const Error& e) {
        issue(s.id + "/" + comp, e.what());
        continue;
      }
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 0) continue;  // already reported
        if (b.odd && m[i] > 0 && !irrep_odd(sc, b.field, (int)i))
          issue(s.id + "/" + comp,
                "odd bundle with multiplicity on the even irrep " +
                    irrep_label(sc, b.field, (int)i));
      }
      rep.ranks[{s.id, comp}] =
          component_rank(b, ctx, s.id, comp);
    }
  }

  // Declared adjacencies: the fibre character of the higher stratum must
  // restrict to the fibre character of the lower one.
  for (const auto& adj : b.space.adjacency) {
    int lo, hi;
    try {
      lo = b.space.stratum_index(adj.low_stratum);
      hi = b.space.stratum_index(adj.high_stratum);
    } catch (const Error& e) {
      issue("adjacency", e.what());
      continue;
    }
    const auto& sub_lo = b.space.strata[lo].stabiliser;
    const auto& sub_hi = b.space.strata[hi].stabiliser;
    bool contained = std::includes(sub_hi.members.begin(),
                                   sub_hi.members.end(),
                                   sub_lo.members.begin(),
                                   sub_lo.members.end());
    if (!contained) {
      issue("adjacency " + adj.low_stratum + "->" + adj.high_stratum,
            "low stabiliser is not contained in the high one");
      continue;
    }
    auto chi_lo = fibre_real_character(b, ctx, lo, adj.low_component);
    auto chi_hi = fibre_real_character(b, ctx, hi, adj.high_component);
    // Restrict chi_hi to the lower stabiliser.
    const auto& mat_lo = ctx.strata[lo].sub;
    const auto& cls_hi = ctx.strata[hi].real_set.classes;
    const auto& mat_hi = ctx.strata[hi].sub;
    bool mismatch = false;
    for (size_t j = 0; j < chi_lo.size(); ++j) {
      int parent = mat_lo.to_parent[
          ctx.strata[lo].real_set.classes.classes[j][0]];
      int in_hi = mat_hi.to_sub(parent);
      double v_hi = chi_hi[cls_hi.class_of[in_hi]];
      if (std::abs(v_hi - chi_lo[j]) > 1e-9) mismatch = true;
    }
    if (mismatch)
      issue("adjacency " + adj.low_stratum + "/" + adj.low_component + "->" +
                adj.high_stratum + "/" + adj.high_component,
            "fibre characters are not restriction-compatible");
  }

  return rep;
}

ValidationReport validate(const BundleSpec& b) {
  return validate(b, SpaceContext::build(b.space));
}

SpaceSpec translate_space(const GammaBundle& b) {
  GroupPtr big = make_semidirect_z4(b.group, b.gamma);
  SpaceSpec out;
  out.group = big;
  out.relative = b.space.relative;
  for (const auto& s : b.space.strata) {
    StratumSpec ns;
    ns.id = s.id;
    ns.d = s.d;
    ns.components = s.components;
    ns.stabiliser.parent = big;
    for (int h : s.stabiliser.members)
      for (int j = 0; j < 4; ++j)
        ns.stabiliser.members.push_back(semidirect_index(j, h));
    std::sort(ns.stabiliser.members.begin(), ns.stabiliser.members.end());
    out.strata.push_back(std::move(ns));
  }
  return out;
}

// Unitary part H0 = ker(gamma|H) of a stabiliser, materialized together with
// its complex character table.
static std::pair<MaterializedSubgroup, CharacterTable> gamma_unitary_part(
    const GammaBundle& b, const StratumSpec& s, const TableOptions& opt) {
  Subgroup h0;
  h0.parent = b.group;
  for (int h : s.stabiliser.members)
    if (b.gamma[h] == 0) h0.members.push_back(h);
  auto mat = subgroup_as_group(h0);
  auto table = complex_character_table(mat.group, opt);
  return {std::move(mat), std::move(table)};
}

BundleSpec translate_gamma_to_real(const GammaBundle& b,
                                   const TableOptions& opt) {
  BundleSpec out;
  out.space = translate_space(b);
  out.field = Field::R;
  out.odd = true;
  auto ctx = SpaceContext::build(out.space, opt);

  for (size_t si = 0; si < b.space.strata.size(); ++si) {
    const auto& s = b.space.strata[si];
    auto [h0, h0_table] = gamma_unitary_part(b, s, opt);
    const auto& sc = ctx.strata[si];
    int big_order = sc.sub.group->order();

    for (const auto& comp : s.components) {
      auto it = b.fibres.find({s.id, comp});
      std::vector<int> m(h0_table.chars.size(), 0);
      if (it != b.fibres.end()) {
        if (it->second.size() != m.size())
          throw Error(ErrorCode::domain,
                      "fibre vector for " + s.id + "/" + comp +
                          " must have one entry per complex irrep of the "
                          "unitary part of the stabiliser");
        m = it->second;
        for (int v : m)
          if (v < 0)
            throw Error(ErrorCode::domain, "negative multiplicity");
      }

      // Real character of the translated fibre, element by element: zero on
      // conjugate-linear elements, 2 Re(i^j chi_W(h)) on ([j], h) with
      // gamma(h) = 0.
      std::vector<double> traces(big_order, 0.0);
      for (int x = 0; x < big_order; ++x) {
        int parent = sc.sub.to_parent[x];
        int j = parent % 4;
        int h = parent / 4;
        if (b.gamma[h] == 1) continue;
        int h_in_h0 = h0.to_sub(h);
        cplx chi_w = 0;
        int cls = h0_table.classes.class_of[h_in_h0];
        for (size_t i = 0; i < m.size(); ++i)
          chi_w += (double)m[i] * h0_table.chars[i][cls];
        static const cplx powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        traces[x] = 2.0 * (powers[j] * chi_w).real();
      }

      std::vector<double> chi;
      try {
        chi = class_function_from_traces(sc.real_set.classes, traces);
      } catch (const Error&) {
        throw Error(ErrorCode::numeric,
                    "fibre data at " + s.id + "/" + comp +
                        " is not a genuine twisted character");
      }

      std::vector<int> nm(sc.real_set.irreps.size(), 0);
      int check_dim = 0;
      for (size_t i = 0; i < sc.real_set.irreps.size(); ++i) {
        int mult;
        try {
          mult = multiplicity(sc.real_set, chi, sc.real_set.irreps[i],
                              opt.tol_int);
        } catch (const Error&) {
          throw Error(ErrorCode::numeric,
                      "fibre data at " + s.id + "/" + comp +
                          " is not a genuine twisted character");
        }
        if (mult > 0 && !sc.real_set.irreps[i].odd)
          throw Error(ErrorCode::internal,
                      "translated fibre contains an even irrep");
        nm[i] = mult;
        check_dim += mult * sc.real_set.irreps[i].real_dim;
      }
      int complex_rank = 0;
      for (size_t i = 0; i < m.size(); ++i)
        complex_rank += m[i] * h0_table.degrees[i];
      if (check_dim != 2 * complex_rank)
        throw Error(ErrorCode::numeric,
                    "fibre data at " + s.id + "/" + comp +
                        " is not a genuine twisted character");
      out.fibres[{s.id, comp}] = std::move(nm);
    }
  }
  return out;
}

BundleSpec direct_sum(const BundleSpec& a, const BundleSpec& b) {
  if (!same_space(a.space, b.space))
    throw Error(ErrorCode::domain, "direct sum needs one space");
  if (a.field != b.field || a.odd != b.odd)
    throw Error(ErrorCode::domain,
                "direct sum needs matching field and oddness");
  BundleSpec out = a;
  for (const auto& [key, vec] : b.fibres) {
    auto& dst = out.fibres[key];
    if (dst.size() < vec.size()) dst.resize(vec.size(), 0);
    for (size_t i = 0; i < vec.size(); ++i) dst[i] += vec[i];
  }
  return out;
}

BundleSpec trivial_bundle(const SpaceSpec& space, Field field,
                          const std::vector<int>& rep_multiplicities,
                          int copies, const TableOptions& opt) {
  if (copies < 0) throw Error(ErrorCode::domain, "copies must be >= 0");
  BundleSpec out;
  out.space = space;
  out.field = field;
  auto ctx = SpaceContext::build(space, opt);

  auto g_real = real_irreps(space.group, opt);
  auto g_table = complex_character_table(space.group, opt);

  int n_irreps = (field == Field::C) ? (int)g_table.chars.size()
                                     : (int)g_real.irreps.size();
  if ((int)rep_multiplicities.size() != n_irreps)
    throw Error(ErrorCode::domain,
                "representation vector must have one entry per irrep of G");
  for (int v : rep_multiplicities)
    if (v < 0) throw Error(ErrorCode::domain, "negative multiplicity");

  // Oddness of the resulting bundle: every chosen irrep odd.
  bool odd = space.group->t().has_value();
  for (int i = 0; i < n_irreps && odd; ++i) {
    if (rep_multiplicities[i] == 0) continue;
    if (field == Field::C) {
      cplx at_t = g_table.chars[i][g_table.classes.class_of[*space.group->t()]];
      odd = std::abs(at_t + (double)g_table.degrees[i]) < 1e-9;
    } else {
      odd = g_real.irreps[i].odd;
    }
  }
  out.odd = odd;

  for (size_t si = 0; si < space.strata.size(); ++si) {
    const auto& s = space.strata[si];
    const auto& sc = ctx.strata[si];
    std::vector<int> m(irrep_count(sc, field), 0);
    if (copies > 0) {
      if (field == Field::C) {
        std::vector<cplx> chi(g_table.classes.classes.size(), 0.0);
        for (int i = 0; i < n_irreps; ++i)
          for (size_t j = 0; j < chi.size(); ++j)
            chi[j] += (double)(copies * rep_multiplicities[i]) *
                      g_table.chars[i][j];
        auto chi_h = restrict_class_function(g_table.classes, chi, sc.sub,
                                             sc.complex_table.classes);
        for (size_t i = 0; i < m.size(); ++i)
          m[i] = multiplicity_complex(sc.complex_table, chi_h, (int)i,
                                      opt.tol_int);
      } else {
        std::vector<double> chi(g_real.classes.classes.size(), 0.0);
        for (int i = 0; i < n_irreps; ++i) {
          double scale = 1.0;
          if (field == Field::H) scale = 4.0 / g_real.irreps[i].c;
          for (size_t j = 0; j < chi.size(); ++j)
            chi[j] += copies * rep_multiplicities[i] * scale *
                      g_real.irreps[i].character[j];
        }
        auto chi_h = restrict_class_function(g_real.classes, chi, sc.sub,
                                             sc.real_set.classes);
        for (size_t i = 0; i < m.size(); ++i) {
          int m_real = multiplicity(sc.real_set, chi_h,
                                    sc.real_set.irreps[i], opt.tol_int);
          if (field == Field::H) {
            int unit = 4 / sc.real_set.irreps[i].c;
            if (m_real % unit != 0)
              throw Error(ErrorCode::numeric,
                          "restriction is not quaternionic");
            m_real /= unit;
          }
          m[i] = m_real;
        }
      }
    }
    for (const auto& comp : s.components) out.fibres[{s.id, comp}] = m;
  }
  return out;
}

BundleSpec zero_bundle(const SpaceSpec& space, Field field, bool odd) {
  BundleSpec out;
  out.space = space;
  out.field = field;
  out.odd = odd;
  return out;
}

}  // namespace eqb
