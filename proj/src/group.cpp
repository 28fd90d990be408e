#include "eqb/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace eqb {

namespace {

std::string bracket_label(int k) { return "[" + std::to_string(k) + "]"; }

}  // namespace

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(
    int order, std::vector<int> mult_row_major, std::optional<int> t,
    std::vector<std::string> labels) {
  if (order <= 0 || order > 128)
    throw Error(ErrorCode::domain, "group order must be in 1..128");
  if ((int)mult_row_major.size() != order * order)
    throw Error(ErrorCode::domain, "multiplication table has wrong size");
  for (int v : mult_row_major)
    if (v < 0 || v >= order)
      throw Error(ErrorCode::domain, "table entry out of range");

  auto mul = [&](int a, int b) { return mult_row_major[a * order + b]; };

  // Locate the two-sided identity.
  int identity = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a)
      ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw Error(ErrorCode::domain, "no identity element");

  // Inverses.
  std::vector<int> inv(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (mul(a, b) == identity && mul(b, a) == identity) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] < 0) throw Error(ErrorCode::domain, "element has no inverse");
  }

  // Exhaustive associativity scan; quadratic-order groups stay cheap because
  // order <= 128 (and <= 64 triples dominate actual use).
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw Error(ErrorCode::domain, "multiplication is not associative");

  if (t) {
    int tv = *t;
    if (tv < 0 || tv >= order || tv == identity)
      throw Error(ErrorCode::domain, "t must be a nonidentity element");
    if (mul(tv, tv) != identity)
      throw Error(ErrorCode::domain, "t is not an involution");
    for (int a = 0; a < order; ++a)
      if (mul(tv, a) != mul(a, tv))
        throw Error(ErrorCode::domain, "t is not central");
  }

  if (labels.empty()) {
    labels.resize(order);
    for (int a = 0; a < order; ++a) labels[a] = "g" + std::to_string(a);
  }
  if ((int)labels.size() != order)
    throw Error(ErrorCode::domain, "label list has wrong size");

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = order;
  g->identity_ = identity;
  g->mult_ = std::move(mult_row_major);
  g->inv_ = std::move(inv);
  g->t_ = t;
  g->labels_ = std::move(labels);
  return g;
}

int FiniteGroup::power(int a, int n) const {
  int r = identity_;
  if (n < 0) {
    a = inverse(a);
    n = -n;
  }
  for (int i = 0; i < n; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(int a) const {
  int r = a, n = 1;
  while (r != identity_) {
    r = mul(r, a);
    ++n;
  }
  return n;
}

int FiniteGroup::conjugate(int g, int x) const {
  return mul(mul(g, x), inverse(g));
}

bool FiniteGroup::is_central(int a) const {
  for (int b = 0; b < order_; ++b)
    if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> z;
  for (int a = 0; a < order_; ++a)
    if (is_central(a)) z.push_back(a);
  return z;
}

GroupPtr make_trivial() { return make_cyclic(1); }

GroupPtr make_cyclic(int n, std::optional<int> t_at) {
  if (n < 1) throw Error(ErrorCode::domain, "cyclic order must be positive");
  std::vector<int> table(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) labels[a] = bracket_label(a);
  if (t_at) {
    int tv = *t_at;
    if (tv <= 0 || tv >= n || (2 * tv) % n != 0)
      throw Error(ErrorCode::domain, "t_at element is not of order 2");
  }
  return FiniteGroup::from_table(n, std::move(table), t_at, std::move(labels));
}

namespace {

// Shared layout for the two order-8 groups: index = j + 4*e for a^j b^e.
std::vector<int> order8_table(bool quaternion) {
  std::vector<int> table(64);
  for (int e = 0; e < 2; ++e)
    for (int j = 0; j < 4; ++j)
      for (int f = 0; f < 2; ++f)
        for (int k = 0; k < 4; ++k) {
          int jj = (j + (e ? 4 - k : k)) % 4;
          if (quaternion && e && f) jj = (jj + 2) % 4;
          int idx = (j + 4 * e) * 8 + (k + 4 * f);
          table[idx] = jj + 4 * (e ^ f);
        }
  return table;
}

std::vector<std::string> order8_labels() {
  return {"1", "a", "a^2", "a^3", "b", "a b", "a^2 b", "a^3 b"};
}

}  // namespace

GroupPtr make_dihedral8() {
  return FiniteGroup::from_table(8, order8_table(false), 2, order8_labels());
}

GroupPtr make_quaternion8() {
  return FiniteGroup::from_table(8, order8_table(true), 2, order8_labels());
}

GroupPtr make_clifford_group(int p, int q) {
  if (p < 0 || q < 0 || p + q > 6)
    throw Error(ErrorCode::domain, "clifford group needs 0 <= p+q <= 6");
  int n = p + q;
  int half = 1 << n;
  int order = 2 * half;

  // Element (s, mask) has index s*half + mask; the monomial is
  // (-1)^s e_{i1}...e_{il} with mask bits i ascending, generators 0-indexed.
  auto blade_sign = [&](int m1, int m2) {
    int swaps = 0;
    for (int i = 0; i < n; ++i) {
      if (!(m2 >> i & 1)) continue;
      for (int j = i + 1; j < n; ++j) swaps += m1 >> j & 1;
    }
    int s = swaps & 1;
    int common = m1 & m2;
    for (int i = 0; i < n; ++i)
      if ((common >> i & 1) && i >= p) s ^= 1;
    return s;
  };

  std::vector<int> table(order * order);
  for (int s1 = 0; s1 < 2; ++s1)
    for (int m1 = 0; m1 < half; ++m1)
      for (int s2 = 0; s2 < 2; ++s2)
        for (int m2 = 0; m2 < half; ++m2) {
          int s = s1 ^ s2 ^ blade_sign(m1, m2);
          int idx = (s1 * half + m1) * order + (s2 * half + m2);
          table[idx] = s * half + (m1 ^ m2);
        }

  std::vector<std::string> labels(order);
  for (int s = 0; s < 2; ++s)
    for (int m = 0; m < half; ++m) {
      std::string l = s ? "-" : "+";
      if (m == 0) {
        l += "1";
      } else {
        for (int i = 0; i < n; ++i)
          if (m >> i & 1) l += "e" + std::to_string(i + 1);
      }
      labels[s * half + m] = l;
    }

  return FiniteGroup::from_table(order, std::move(table), half,
                                 std::move(labels));
}

int semidirect_index(int j, int g_index) { return 4 * g_index + j; }

GroupPtr make_semidirect_z4(const GroupPtr& g, const std::vector<int>& gamma) {
  int n = g->order();
  if ((int)gamma.size() != n)
    throw Error(ErrorCode::domain, "gamma must be defined on all of G");
  for (int v : gamma)
    if (v != 0 && v != 1)
      throw Error(ErrorCode::domain, "gamma values must be 0 or 1");
  if (gamma[g->identity()] != 0)
    throw Error(ErrorCode::domain, "gamma is not a homomorphism");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (gamma[g->mul(a, b)] != (gamma[a] ^ gamma[b]))
        throw Error(ErrorCode::domain, "gamma is not a homomorphism");

  int order = 4 * n;
  std::vector<int> table(order * order);
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < 4; ++j)
      for (int b = 0; b < n; ++b)
        for (int k = 0; k < 4; ++k) {
          // ([j], a) ([k], b) = ([j + (-1)^gamma(a) k], a b)
          int jj = (j + (gamma[a] ? 4 - k : k)) % 4;
          table[semidirect_index(j, a) * order + semidirect_index(k, b)] =
              semidirect_index(jj, g->mul(a, b));
        }

  std::vector<std::string> labels(order);
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < 4; ++j) {
      std::string l = bracket_label(j);
      if (n > 1) l += " " + g->label(a);
      labels[semidirect_index(j, a)] = l;
    }

  int t = semidirect_index(2, g->identity());
  return FiniteGroup::from_table(order, std::move(table), t,
                                 std::move(labels));
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  int n = g.order();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> out;
  for (int a = 0; a < n; ++a) {
    if (cls[a] >= 0) continue;
    std::vector<int> orbit;
    for (int x = 0; x < n; ++x) {
      int y = g.conjugate(x, a);
      if (cls[y] < 0) {
        cls[y] = (int)out.size();
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x[0] < y[0]; });
  return out;
}

bool Subgroup::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens) {
  if (gens.empty())
    throw Error(ErrorCode::domain, "generator set must be nonempty");
  std::set<int> closure = {g->identity()};
  std::vector<int> frontier(closure.begin(), closure.end());
  for (int x : gens) {
    if (x < 0 || x >= g->order())
      throw Error(ErrorCode::domain, "generator index out of range");
    if (closure.insert(x).second) frontier.push_back(x);
  }
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int y : std::vector<int>(closure.begin(), closure.end())) {
        for (int z : {g->mul(x, y), g->mul(y, x)})
          if (closure.insert(z).second) next.push_back(z);
      }
    frontier = std::move(next);
  }
  Subgroup s;
  s.parent = g;
  s.members.assign(closure.begin(), closure.end());
  return s;
}

Subgroup full_subgroup(const GroupPtr& g) {
  Subgroup s;
  s.parent = g;
  s.members.resize(g->order());
  std::iota(s.members.begin(), s.members.end(), 0);
  return s;
}

bool is_subgroup(const Subgroup& s) {
  const auto& g = *s.parent;
  if (!s.contains(g.identity())) return false;
  for (int a : s.members) {
    if (!s.contains(g.inverse(a))) return false;
    for (int b : s.members)
      if (!s.contains(g.mul(a, b))) return false;
  }
  return true;
}

bool is_normal(const Subgroup& s) {
  const auto& g = *s.parent;
  for (int x = 0; x < g.order(); ++x)
    for (int a : s.members)
      if (!s.contains(g.conjugate(x, a))) return false;
  return true;
}

MaterializedSubgroup subgroup_as_group(const Subgroup& s) {
  if (!is_subgroup(s))
    throw Error(ErrorCode::domain, "member set is not a subgroup");
  const auto& g = *s.parent;
  std::vector<int> to_parent = s.members;
  // Identity first so the materialized group keeps identity index 0.
  auto it = std::find(to_parent.begin(), to_parent.end(), g.identity());
  std::rotate(to_parent.begin(), it, it + 1);

  int m = (int)to_parent.size();
  std::map<int, int> to_sub;
  for (int i = 0; i < m; ++i) to_sub[to_parent[i]] = i;

  std::vector<int> table(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[i * m + j] = to_sub.at(g.mul(to_parent[i], to_parent[j]));

  std::optional<int> t;
  if (g.t() && to_sub.count(*g.t())) t = to_sub.at(*g.t());

  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = g.label(to_parent[i]);

  MaterializedSubgroup out;
  out.group = FiniteGroup::from_table(m, std::move(table), t,
                                      std::move(labels));
  out.to_parent = std::move(to_parent);
  return out;
}

int MaterializedSubgroup::to_sub(int parent_index) const {
  for (int i = 0; i < (int)to_parent.size(); ++i)
    if (to_parent[i] == parent_index) return i;
  throw Error(ErrorCode::domain, "element not in subgroup");
}

Subgroup conjugate_subgroup(const Subgroup& s, int g) {
  Subgroup out;
  out.parent = s.parent;
  for (int a : s.members) out.members.push_back(s.parent->conjugate(g, a));
  std::sort(out.members.begin(), out.members.end());
  return out;
}

GroupPtr quotient_group(const GroupPtr& g, const Subgroup& normal) {
  if (!is_normal(normal))
    throw Error(ErrorCode::domain, "subgroup is not normal");
  int n = g->order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int a = 0; a < n; ++a) {
    if (coset_of[a] >= 0) continue;
    int c = (int)reps.size();
    reps.push_back(a);
    for (int h : normal.members) coset_of[g->mul(a, h)] = c;
  }
  int m = (int)reps.size();
  std::vector<int> table(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[i * m + j] = coset_of[g->mul(reps[i], reps[j])];
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = g->label(reps[i]) + " N";
  return FiniteGroup::from_table(m, std::move(table), std::nullopt,
                                 std::move(labels));
}

namespace {

std::vector<char> closure_mask(const FiniteGroup& g,
                               const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems = {g.identity()};
  in[g.identity()] = 1;
  for (int x : gens)
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j)
      for (int z : {g.mul(elems[i], elems[j]), g.mul(elems[j], elems[i])})
        if (!in[z]) {
          in[z] = 1;
          elems.push_back(z);
        }
  return in;
}

}  // namespace

std::vector<int> small_generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<char> in = closure_mask(g, gens);
  while (true) {
    int next = -1;
    for (int a = 0; a < g.order(); ++a)
      if (!in[a]) {
        next = a;
        break;
      }
    if (next < 0) break;
    gens.push_back(next);
    in = closure_mask(g, gens);
  }
  if (gens.empty()) gens.push_back(g.identity());
  return gens;
}

namespace {

// Extends the partial map gens[i] -> images[i] to a homomorphism by closing
// products; returns the full image table or nullopt on conflict.
std::optional<std::vector<int>> extend_hom(const FiniteGroup& a,
                                           const FiniteGroup& b,
                                           const std::vector<int>& gens,
                                           const std::vector<int>& images) {
  std::vector<int> map(a.order(), -1);
  map[a.identity()] = b.identity();
  std::vector<int> known = {a.identity()};
  for (size_t i = 0; i < gens.size(); ++i) {
    if (map[gens[i]] >= 0 && map[gens[i]] != images[i]) return std::nullopt;
    if (map[gens[i]] < 0) {
      map[gens[i]] = images[i];
      known.push_back(gens[i]);
    }
  }
  for (size_t i = 0; i < known.size(); ++i)
    for (size_t j = 0; j < known.size(); ++j) {
      int x = a.mul(known[i], known[j]);
      int y = b.mul(map[known[i]], map[known[j]]);
      if (map[x] < 0) {
        map[x] = y;
        known.push_back(x);
      } else if (map[x] != y) {
        return std::nullopt;
      }
    }
  if ((int)known.size() != a.order()) return std::nullopt;  // gens too small
  // Homomorphism property on the full table.
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return std::nullopt;
  std::vector<char> hit(b.order(), 0);
  for (int v : map) {
    if (hit[v]) return std::nullopt;
    hit[v] = 1;
  }
  return map;
}

bool search_images(const FiniteGroup& a, const FiniteGroup& b,
                   const std::vector<int>& gens, std::vector<int>& images,
                   size_t k, std::vector<int>& out) {
  if (k == gens.size()) {
    auto m = extend_hom(a, b, gens, images);
    if (m) {
      out = *m;
      return true;
    }
    return false;
  }
  int want = a.element_order(gens[k]);
  for (int cand = 0; cand < b.order(); ++cand) {
    if (b.element_order(cand) != want) continue;
    images[k] = cand;
    if (search_images(a, b, gens, images, k + 1, out)) return true;
  }
  return false;
}

std::vector<int> order_profile(const FiniteGroup& g) {
  std::vector<int> p;
  for (int x = 0; x < g.order(); ++x) p.push_back(g.element_order(x));
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a,
                                                 const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (order_profile(a) != order_profile(b)) return std::nullopt;
  auto ca = conjugacy_classes(a);
  auto cb = conjugacy_classes(b);
  if (ca.size() != cb.size()) return std::nullopt;

  std::vector<int> gens = small_generating_set(a);
  std::vector<int> images(gens.size());
  std::vector<int> out;
  if (search_images(a, b, gens, images, 0, out)) return out;
  return std::nullopt;
}

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace eqb
