#include "eqb/io.hpp"

#include "eqb/clifford.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace eqb {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse, std::string("invalid JSON: ") + e.what());
  }
}

[[noreturn]] void fail(const std::string& msg) {
  throw Error(ErrorCode::parse, msg);
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string(key) + " must be an integer");
  return v.get<int>();
}

// Numbers whose integrality matters are rendered as integers, everything
// else as (re, im) pairs.
json complex_entry(cplx v) {
  double re = v.real(), im = v.imag();
  if (std::abs(im) < 1e-9 && std::abs(re - std::round(re)) < 1e-9)
    return json((long long)std::llround(re));
  return json::array({re, im});
}

Field parse_field_tag(const std::string& s) {
  if (s == "R") return Field::R;
  if (s == "C") return Field::C;
  if (s == "H") return Field::H;
  fail("field must be one of R, C, H");
}

}  // namespace

TableOptions RunConfig::table_options() const {
  TableOptions opt;
  opt.seed = seed;
  opt.tol_int = tol_int;
  return opt;
}

BlochOptions RunConfig::bloch_options() const {
  BlochOptions opt;
  opt.gap_tol = tol_gap;
  opt.tol_int = tol_int;
  return opt;
}

GroupPtr parse_group_name(const std::string& name) {
  if (name == "trivial") return make_trivial();
  if (name == "d8") return make_dihedral8();
  if (name == "q8") return make_quaternion8();
  if (name.rfind("clifford:", 0) == 0) {
    auto rest = name.substr(9);
    auto comma = rest.find(',');
    if (comma == std::string::npos) fail("expected clifford:p,q");
    try {
      int p = std::stoi(rest.substr(0, comma));
      int q = std::stoi(rest.substr(comma + 1));
      return make_clifford_group(p, q);
    } catch (const std::exception&) {
      fail("expected clifford:p,q with integer signature");
    }
  }
  if (name.size() >= 2 && name[0] == 'z') {
    try {
      int n = std::stoi(name.substr(1));
      std::optional<int> t;
      if (n % 2 == 0 && n >= 2) t = n / 2;
      return make_cyclic(n, t);
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail("unknown group name: " + name);
    }
  }
  fail("unknown group name: " + name);
}

namespace {

GroupPtr group_from_json_value(const json& j) {
  if (j.is_string()) return parse_group_name(j.get<std::string>());
  if (!j.is_object()) fail("group must be a name or an object");
  if (j.contains("builtin")) {
    std::string b = field(j, "builtin").get<std::string>();
    if (b == "trivial") return make_trivial();
    if (b == "d8") return make_dihedral8();
    if (b == "q8") return make_quaternion8();
    if (b == "cyclic") {
      std::optional<int> t;
      if (j.contains("t") && !j["t"].is_null()) t = int_field(j, "t");
      return make_cyclic(int_field(j, "n"), t);
    }
    if (b == "clifford")
      return make_clifford_group(int_field(j, "p"), int_field(j, "q"));
    if (b == "semidirect_z4") {
      GroupPtr base = group_from_json_value(field(j, "base"));
      auto gamma = field(j, "gamma").get<std::vector<int>>();
      return make_semidirect_z4(base, gamma);
    }
    fail("unknown builtin group: " + b);
  }
  int order = int_field(j, "order");
  auto mult = field(j, "mult").get<std::vector<int>>();
  std::optional<int> t;
  if (j.contains("t") && !j["t"].is_null()) t = j["t"].get<int>();
  std::vector<std::string> labels;
  if (j.contains("labels"))
    labels = j["labels"].get<std::vector<std::string>>();
  return FiniteGroup::from_table(order, std::move(mult), t,
                                 std::move(labels));
}

}  // namespace

GroupPtr parse_group_json(const std::string& text) {
  return group_from_json_value(parse(text));
}

std::string group_to_json(const FiniteGroup& g) {
  json j;
  j["order"] = g.order();
  j["mult"] = g.table();
  if (g.t())
    j["t"] = *g.t();
  else
    j["t"] = nullptr;
  j["labels"] = g.labels();
  return j.dump(2);
}

namespace {

json character_table_json(const CharacterTable& t) {
  json classes = json::array();
  for (size_t i = 0; i < t.classes.classes.size(); ++i) {
    json c;
    c["representative"] = t.group->label(t.classes.classes[i][0]);
    c["size"] = t.classes.sizes[i];
    classes.push_back(c);
  }
  json rows = json::array();
  for (size_t i = 0; i < t.chars.size(); ++i) {
    json row;
    row["degree"] = t.degrees[i];
    json values = json::array();
    for (const auto& v : t.chars[i]) values.push_back(complex_entry(v));
    row["values"] = values;
    rows.push_back(row);
  }
  json out;
  out["classes"] = classes;
  out["characters"] = rows;
  return out;
}

json real_irreps_json(const RealIrrepSet& set) {
  json out = json::array();
  for (size_t i = 0; i < set.irreps.size(); ++i) {
    const auto& rho = set.irreps[i];
    json j;
    j["signature"] = irrep_signature((int)i, rho);
    j["dim"] = rho.real_dim;
    j["type"] = irrep_type_name(rho.type);
    j["c"] = rho.c;
    j["odd"] = rho.odd;
    json values = json::array();
    for (double v : rho.character) values.push_back(complex_entry(v));
    j["character"] = values;
    out.push_back(j);
  }
  return out;
}

std::string render_group_report(const GroupPtr& g, const RunConfig& cfg) {
  auto opt = cfg.table_options();
  auto table = complex_character_table(g, opt);
  auto set = real_irreps(g, opt);

  if (cfg.format == OutputFormat::json) {
    json j;
    j["group"] = json::parse(group_to_json(*g));
    j["order"] = g->order();
    j["conjugacy_classes"] = character_table_json(table)["classes"];
    j["character_table"] = character_table_json(table);
    j["real_irreps"] = real_irreps_json(set);
    json odd = json::array();
    for (size_t i = 0; i < set.irreps.size(); ++i)
      if (set.irreps[i].odd)
        odd.push_back(irrep_signature((int)i, set.irreps[i]));
    j["odd_irreps"] = odd;
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "group of order " << g->order() << "\n";
  os << "conjugacy classes (" << table.classes.classes.size() << "):\n";
  for (size_t i = 0; i < table.classes.classes.size(); ++i)
    os << "  [" << i << "] size " << table.classes.sizes[i]
       << " rep " << g->label(table.classes.classes[i][0]) << "\n";
  os << "complex character table:\n";
  for (size_t i = 0; i < table.chars.size(); ++i) {
    os << "  chi_" << i << " (deg " << table.degrees[i] << "):";
    for (const auto& v : table.chars[i]) {
      json e = complex_entry(v);
      os << " " << e.dump();
    }
    os << "\n";
  }
  os << "real irreducible representations:\n";
  for (size_t i = 0; i < set.irreps.size(); ++i) {
    const auto& rho = set.irreps[i];
    os << "  " << irrep_signature((int)i, rho) << ": dim " << rho.real_dim
       << ", type " << irrep_type_name(rho.type) << ", c " << rho.c
       << (rho.odd ? ", odd" : "") << "\n";
  }
  if (g->t()) {
    os << "odd irreps:";
    for (size_t i = 0; i < set.irreps.size(); ++i)
      if (set.irreps[i].odd)
        os << " " << irrep_signature((int)i, set.irreps[i]);
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string group_report(const GroupPtr& g, const RunConfig& cfg) {
  return render_group_report(g, cfg);
}

std::string clifford_report(int p, int q, const RunConfig& cfg) {
  auto type = clifford_type(p, q);
  bool unique = has_unique_odd_irrep(p, q);
  json j;
  j["p"] = p;
  j["q"] = q;
  j["algebra"] = "M_" + std::to_string(type.matrix_size) + "(" +
                 clifford_base_name(type.base) + ")";
  j["unique_odd_irrep"] = unique;
  if (p + q <= 6) {
    json prof = json::array();
    for (auto [dim, c] : odd_irrep_profile(p, q)) {
      json pair = json::array();
      pair.push_back(dim);
      pair.push_back(c);
      prof.push_back(pair);
    }
    j["odd_irrep_profile"] = prof;
  }
  if (cfg.format == OutputFormat::json) return j.dump(2) + "\n";
  std::ostringstream os;
  os << "signature (" << p << "," << q << "): " << j["algebra"].get<std::string>()
     << "\n";
  os << "unique odd irrep: " << (unique ? "yes" : "no") << "\n";
  if (j.contains("odd_irrep_profile")) {
    os << "odd irreps (dim, c):";
    for (auto& e : j["odd_irrep_profile"])
      os << " (" << e[0].get<int>() << "," << e[1].get<int>() << ")";
    os << "\n";
  }
  return os.str();
}

namespace {

Subgroup subgroup_from_json(const json& j, const GroupPtr& g) {
  if (j.is_string() && j.get<std::string>() == "full")
    return full_subgroup(g);
  if (j.is_object() && j.contains("members")) {
    Subgroup s;
    s.parent = g;
    s.members = j["members"].get<std::vector<int>>();
    std::sort(s.members.begin(), s.members.end());
    if (!is_subgroup(s)) fail("member set is not a subgroup");
    return s;
  }
  if (j.is_object() && j.contains("generators")) {
    auto gens = j["generators"].get<std::vector<int>>();
    if (gens.empty()) return subgroup_generated(g, {g->identity()});
    return subgroup_generated(g, gens);
  }
  if (j.is_array())
    return subgroup_generated(g, j.get<std::vector<int>>());
  fail("stabiliser must be \"full\", {members:[..]}, {generators:[..]} or "
       "a generator array");
}

json subgroup_to_json(const Subgroup& s) {
  json j;
  j["members"] = s.members;
  return j;
}

SpaceSpec space_from_json_value(const json& j, const GroupPtr& g) {
  SpaceSpec space;
  space.group = g;
  if (j.contains("relative")) space.relative = j["relative"].get<bool>();
  for (const auto& sj : field(j, "strata")) {
    StratumSpec st;
    st.id = field(sj, "id").get<std::string>();
    st.stabiliser = subgroup_from_json(field(sj, "stabiliser"), g);
    st.d = int_field(sj, "d");
    st.components = field(sj, "components").get<std::vector<std::string>>();
    space.strata.push_back(std::move(st));
  }
  if (j.contains("adjacency")) {
    for (const auto& aj : j["adjacency"]) {
      Adjacency a;
      a.low_stratum = field(aj, "low")[0].get<std::string>();
      a.low_component = field(aj, "low")[1].get<std::string>();
      a.high_stratum = field(aj, "high")[0].get<std::string>();
      a.high_component = field(aj, "high")[1].get<std::string>();
      space.adjacency.push_back(std::move(a));
    }
  }
  return space;
}

json space_to_json_value(const SpaceSpec& s) {
  json j;
  j["relative"] = s.relative;
  json strata = json::array();
  for (const auto& st : s.strata) {
    json sj;
    sj["id"] = st.id;
    sj["stabiliser"] = subgroup_to_json(st.stabiliser);
    sj["d"] = st.d;
    sj["components"] = st.components;
    strata.push_back(sj);
  }
  j["strata"] = strata;
  if (!s.adjacency.empty()) {
    json adj = json::array();
    for (const auto& a : s.adjacency)
      adj.push_back({{"low", {a.low_stratum, a.low_component}},
                     {"high", {a.high_stratum, a.high_component}}});
    j["adjacency"] = adj;
  }
  return j;
}

BundleSpec bundle_from_json_value(const json& j, const SpaceSpec& space) {
  BundleSpec b;
  b.space = space;
  b.field = parse_field_tag(field(j, "field").get<std::string>());
  b.odd = j.contains("odd") && j["odd"].get<bool>();
  if (j.contains("fibres")) {
    for (const auto& fj : j["fibres"]) {
      std::string stratum = field(fj, "stratum").get<std::string>();
      std::string comp = field(fj, "component").get<std::string>();
      auto m = field(fj, "multiplicities").get<std::vector<int>>();
      b.fibres[{stratum, comp}] = std::move(m);
    }
  }
  return b;
}

json bundle_to_json_value(const BundleSpec& b) {
  json j;
  j["field"] = field_name(b.field);
  j["odd"] = b.odd;
  json fibres = json::array();
  for (const auto& [key, vec] : b.fibres) {
    json f;
    f["stratum"] = key.first;
    f["component"] = key.second;
    f["multiplicities"] = vec;
    fibres.push_back(f);
  }
  j["fibres"] = fibres;
  return j;
}

json verdict_to_json_value(const Verdict& v) {
  json j;
  j["outcome"] = outcome_name(v.outcome);
  json rows = json::array();
  for (const auto& row : v.rows) {
    json r;
    r["stratum"] = row.stratum;
    r["component"] = row.component;
    r["irrep"] = row.irrep;
    r["required"] = row.required;
    r["actual"] = row.actual;
    r["status"] = row_status_name(row.status);
    rows.push_back(r);
  }
  j["rows"] = rows;
  if (v.line_rule_applied) j["line_rule_applied"] = true;
  if (v.zero_rank_shortcut) j["zero_rank_shortcut"] = true;
  if (v.hypothesis_asserted) j["hypothesis_asserted"] = true;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

std::string render_verdict_text(const Verdict& v) {
  std::ostringstream os;
  os << "verdict: " << outcome_name(v.outcome) << "\n";
  if (!v.note.empty()) os << "note: " << v.note << "\n";
  if (v.line_rule_applied) os << "line-bundle rule applied\n";
  for (const auto& row : v.rows)
    os << "  " << row.stratum << "/" << row.component << " " << row.irrep
       << ": required " << row.required << ", actual " << row.actual << " ["
       << row_status_name(row.status) << "]\n";
  return os.str();
}

struct Document {
  GroupPtr group;
  SpaceSpec space;
  std::map<std::string, BundleSpec> bundles;
  json question;
};

Document parse_document(const std::string& text) {
  json j = parse(text);
  Document doc;
  doc.group = group_from_json_value(field(j, "group"));
  doc.space = space_from_json_value(field(j, "space"), doc.group);
  if (j.contains("bundles")) {
    for (const auto& bj : j["bundles"]) {
      std::string id = field(bj, "id").get<std::string>();
      doc.bundles.emplace(id, bundle_from_json_value(bj, doc.space));
    }
  }
  doc.question = field(j, "question");
  return doc;
}

const BundleSpec& doc_bundle(const Document& doc, const json& q,
                             const char* key) {
  std::string id = field(q, key).get<std::string>();
  auto it = doc.bundles.find(id);
  if (it == doc.bundles.end()) fail("no bundle with id '" + id + "'");
  return it->second;
}

}  // namespace

std::string space_to_json(const SpaceSpec& s) {
  return space_to_json_value(s).dump(2);
}

SpaceSpec space_from_json(const std::string& text, const GroupPtr& g) {
  return space_from_json_value(parse(text), g);
}

std::string bundle_to_json(const BundleSpec& b) {
  return bundle_to_json_value(b).dump(2);
}

std::string verdict_to_json(const Verdict& v) {
  return verdict_to_json_value(v).dump(2);
}

CheckResult run_check(const std::string& text, const RunConfig& cfg,
                      const std::string& expected_kind) {
  Document doc = parse_document(text);
  auto opt = cfg.table_options();
  std::string kind = field(doc.question, "kind").get<std::string>();
  if (!expected_kind.empty() && kind != expected_kind)
    fail("document question kind '" + kind + "' does not match the requested '" +
         expected_kind + "'");
  Verdict verdict;
  if (kind == "embed") {
    verdict = embed_verdict(doc_bundle(doc, doc.question, "V"),
                            doc_bundle(doc, doc.question, "E"), opt);
  } else if (kind == "stable-iso") {
    verdict = stable_iso_verdict(doc_bundle(doc, doc.question, "E1"),
                                 doc_bundle(doc, doc.question, "E2"),
                                 doc_bundle(doc, doc.question, "V"), opt);
  } else {
    fail("question kind must be embed or stable-iso");
  }
  CheckResult out;
  out.outcome = verdict.outcome;
  if (cfg.format == OutputFormat::json) {
    json j;
    j["question"] = kind;
    j["verdict"] = verdict_to_json_value(verdict);
    out.report = j.dump(2) + "\n";
  } else {
    out.report = render_verdict_text(verdict);
  }
  return out;
}

std::string run_swan(const std::string& text, const RunConfig& cfg) {
  Document doc = parse_document(text);
  auto opt = cfg.table_options();
  const BundleSpec& v = doc_bundle(doc, doc.question, "V");
  auto report = swan_selfcheck(v, opt);
  if (cfg.format == OutputFormat::json) {
    json j;
    j["r"] = report.r;
    j["upper_bound"] = report.upper_bound;
    j["guaranteed_at_r"] = report.guaranteed_at_r;
    j["not_guaranteed_below"] = report.not_guaranteed_below;
    j["pass"] = report.pass;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "smallest trivial-bundle exponent r = " << report.r << "\n";
  os << "upper bound rank(V) + dim(X) + 1 = " << report.upper_bound << "\n";
  os << "self-check: embeds at r: " << (report.guaranteed_at_r ? "yes" : "no")
     << "; not guaranteed at r-1: "
     << (report.not_guaranteed_below ? "yes" : "no") << "\n";
  return os.str();
}

namespace {

CircleBundle circle_from_json(const json& j) {
  CircleBundle b;
  b.k = int_field(j, "k");
  b.l_minus = int_field(j, "l_minus");
  b.l_plus = int_field(j, "l_plus");
  validate_circle_bundle(b);
  return b;
}

}  // namespace

CheckResult run_circle(const std::string& text, const RunConfig& cfg) {
  json j = parse(text);
  std::string kind = field(j, "question").get<std::string>();
  CheckResult out;
  json extra;
  Verdict verdict;
  if (kind == "embed") {
    verdict = circle_verdict_embed(circle_from_json(field(j, "V")),
                                   circle_from_json(field(j, "E")));
  } else if (kind == "stable-iso") {
    verdict = circle_verdict_stable_iso(circle_from_json(field(j, "E1")),
                                        circle_from_json(field(j, "E2")),
                                        circle_from_json(field(j, "V")));
  } else if (kind == "trivial-summand") {
    auto e = circle_from_json(field(j, "E"));
    bool sign = circle_has_trivial_summand(e, true);
    bool trivial = circle_has_trivial_summand(e, false);
    verdict.outcome =
        (sign || trivial) ? Outcome::Guaranteed : Outcome::Impossible;
    extra["sign_character_summand"] = sign;
    extra["trivial_character_summand"] = trivial;
  } else if (kind == "is-trivial") {
    auto e = circle_from_json(field(j, "E"));
    bool trivial = circle_is_trivial(e);
    verdict.outcome = trivial ? Outcome::Guaranteed : Outcome::Impossible;
    extra["trivial"] = trivial;
  } else {
    fail("circle question must be embed, stable-iso, trivial-summand or "
         "is-trivial");
  }
  out.outcome = verdict.outcome;
  if (cfg.format == OutputFormat::json) {
    json r;
    r["question"] = kind;
    r["verdict"] = verdict_to_json_value(verdict);
    if (!extra.is_null()) r["detail"] = extra;
    out.report = r.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << render_verdict_text(verdict);
    if (!extra.is_null()) os << "detail: " << extra.dump() << "\n";
    out.report = os.str();
  }
  return out;
}

namespace {

MatC matrix_from_json(const json& j, int rows, int cols) {
  if (!j.is_array() || (int)j.size() != rows)
    fail("matrix has wrong number of rows");
  MatC m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || (int)row.size() != cols)
      fail("matrix has wrong number of columns");
    for (int c = 0; c < cols; ++c) {
      const json& e = row[c];
      if (e.is_number()) {
        m(r, c) = e.get<double>();
      } else if (e.is_array() && e.size() == 2) {
        m(r, c) = cplx(e[0].get<double>(), e[1].get<double>());
      } else {
        fail("matrix entries must be numbers or [re, im] pairs");
      }
    }
  }
  return m;
}

json matrix_to_json(const MatC& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c)
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TightBindingModel model_from_json(const std::string& text) {
  json j = parse(text);
  TightBindingModel m;
  m.d = int_field(j, "d");
  m.k_int = int_field(j, "k_int");
  for (const auto& hj : field(j, "hoppings")) {
    auto n = field(hj, "n").get<std::vector<int>>();
    m.hoppings[n] = matrix_from_json(field(hj, "matrix"), m.k_int, m.k_int);
  }
  if (j.contains("generators")) {
    for (const auto& gj : j["generators"]) {
      SymmetryGenerator g;
      auto rows = field(gj, "lattice_action").get<std::vector<std::vector<int>>>();
      if ((int)rows.size() != m.d) fail("lattice_action has wrong size");
      g.lattice_action.resize(m.d, m.d);
      for (int r = 0; r < m.d; ++r) {
        if ((int)rows[r].size() != m.d) fail("lattice_action has wrong size");
        for (int c = 0; c < m.d; ++c) g.lattice_action(r, c) = rows[r][c];
      }
      g.u = matrix_from_json(field(gj, "u"), m.k_int, m.k_int);
      g.antiunitary =
          gj.contains("antiunitary") && gj["antiunitary"].get<bool>();
      m.generators.push_back(std::move(g));
    }
  }
  m.validate();
  return m;
}

std::string model_to_json(const TightBindingModel& m) {
  json j;
  j["d"] = m.d;
  j["k_int"] = m.k_int;
  json hops = json::array();
  for (const auto& [n, h] : m.hoppings) {
    json hj;
    hj["n"] = n;
    hj["matrix"] = matrix_to_json(h);
    hops.push_back(hj);
  }
  j["hoppings"] = hops;
  json gens = json::array();
  for (const auto& g : m.generators) {
    json gj;
    std::vector<std::vector<int>> rows(m.d, std::vector<int>(m.d));
    for (int r = 0; r < m.d; ++r)
      for (int c = 0; c < m.d; ++c) rows[r][c] = g.lattice_action(r, c);
    gj["lattice_action"] = rows;
    gj["u"] = matrix_to_json(g.u);
    gj["antiunitary"] = g.antiunitary;
    gens.push_back(gj);
  }
  j["generators"] = gens;
  return j.dump(2);
}

std::string run_bloch(const std::string& text, const RunConfig& cfg) {
  json j = parse(text);
  TightBindingModel model = model_from_json(text);
  BlochOptions opt = cfg.bloch_options();
  bool emit_bands = false;
  if (j.contains("options")) {
    const json& oj = j["options"];
    if (oj.contains("grid")) opt.grid = oj["grid"].get<int>();
    if (oj.contains("d0")) opt.d0 = oj["d0"].get<int>();
    if (oj.contains("emit_bands")) emit_bands = oj["emit_bands"].get<bool>();
  }
  auto analysis = analyze(model, opt);

  const char* robustness =
      analysis.robustness == Robustness::robust_line_rule
          ? "robust (line-bundle rule)"
          : analysis.robustness == Robustness::robust_threshold
                ? "robust (multiplicity thresholds)"
                : "possibly fragile";

  if (cfg.format == OutputFormat::json) {
    json out;
    out["gap"] = analysis.gap;
    out["occupied_rank"] = analysis.occupied_rank;
    out["symmetry_residual"] = analysis.symmetry_residual;
    out["antiunitary_mode"] = analysis.antiunitary_mode;
    json fps = json::array();
    for (const auto& fp : analysis.fixed_points) {
      json f;
      f["k_over_pi"] = fp.k_over_pi;
      f["irreps"] = fp.irreps;
      f["multiplicities"] = fp.multiplicities;
      fps.push_back(f);
    }
    out["fixed_points"] = fps;
    out["space"] = space_to_json_value(analysis.space);
    out["bundle"] = bundle_to_json_value(analysis.bundle);
    out["robustness"] = robustness;
    out["stably_trivial_data"] = analysis.stably_trivial_data;
    out["stable_verdict"] = verdict_to_json_value(analysis.stable_verdict);
    if (emit_bands) out["band_samples"] = analysis.band_samples;
    return out.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "gap: " << analysis.gap << "\n";
  os << "occupied rank: " << analysis.occupied_rank << "\n";
  os << "symmetry residual: " << analysis.symmetry_residual << "\n";
  os << "mode: " << (analysis.antiunitary_mode ? "antiunitary (odd real)"
                                               : "unitary (complex)")
     << "\n";
  for (const auto& fp : analysis.fixed_points) {
    os << "fixed point (";
    for (size_t i = 0; i < fp.k_over_pi.size(); ++i)
      os << (i ? "," : "") << (fp.k_over_pi[i] ? "pi" : "0");
    os << "):";
    for (size_t i = 0; i < fp.multiplicities.size(); ++i)
      if (fp.multiplicities[i])
        os << " " << fp.irreps[i] << " x" << fp.multiplicities[i];
    os << "\n";
  }
  os << "stably trivial data: "
     << (analysis.stably_trivial_data ? "yes" : "no") << "\n";
  os << "classification: " << robustness << "\n";
  if (emit_bands) {
    os << "band samples:";
    for (double e : analysis.band_samples) os << " " << e;
    os << "\n";
  }
  return os.str();
}

}  // namespace eqb
