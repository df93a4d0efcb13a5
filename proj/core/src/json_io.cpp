#include "expsr/json_io.hpp"

#include <fstream>

#include "expsr/catalog.hpp"

namespace expsr::io {

namespace {

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw FormatError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

template <typename T>
T get_as(const json& doc, const char* key) {
  try {
    return require(doc, key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

Table table_from(const json& doc, const char* key) {
  auto rows = get_as<std::vector<std::vector<long long>>>(doc, key);
  Table t;
  t.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<Index> r;
    r.reserve(row.size());
    for (long long v : row) {
      if (v < 0) throw FormatError(std::string("negative entry in '") + key + "'");
      r.push_back(static_cast<Index>(v));
    }
    t.push_back(std::move(r));
  }
  return t;
}

json table_json(std::size_t rows, std::size_t cols, auto entry) {
  json t = json::array();
  for (Index i = 0; i < rows; ++i) {
    json row = json::array();
    for (Index j = 0; j < cols; ++j) row.push_back(entry(i, j));
    t.push_back(std::move(row));
  }
  return t;
}

}  // namespace

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const json& doc) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

bool is_semimodule_document(const json& doc) { return doc.is_object() && doc.contains("action"); }

RawSemiring raw_semiring_from_json(const json& doc) {
  RawSemiring r;
  r.name = doc.value("name", std::string{});
  r.size = get_as<std::size_t>(doc, "size");
  r.zero = get_as<Index>(doc, "zero");
  r.one = get_as<Index>(doc, "one");
  r.add = table_from(doc, "add");
  r.mul = table_from(doc, "mul");
  return r;
}

json to_json(const FiniteSemiring& s) {
  return {{"name", s.name()},
          {"size", s.size()},
          {"zero", s.zero()},
          {"one", s.one()},
          {"add", table_json(s.size(), s.size(), [&](Index a, Index b) { return s.add(a, b); })},
          {"mul", table_json(s.size(), s.size(), [&](Index a, Index b) { return s.mul(a, b); })}};
}

RawSemimodule raw_semimodule_from_json(const json& doc) {
  RawSemimodule r;
  r.name = doc.value("name", std::string{});
  if (doc.contains("base")) {
    const json& base = doc.at("base");
    if (base.is_string()) r.base = base.get<std::string>();
    else if (base.is_object()) r.base = base.value("name", std::string{});
  }
  r.size = get_as<std::size_t>(doc, "size");
  r.zero = get_as<Index>(doc, "zero");
  r.add = table_from(doc, "add");
  r.action = table_from(doc, "action");
  return r;
}

json to_json(const FiniteSemimodule& m) {
  return {{"name", m.name()},
          {"base", to_json(m.base())},
          {"size", m.size()},
          {"zero", m.zero()},
          {"add", table_json(m.size(), m.size(), [&](Index a, Index b) { return m.add(a, b); })},
          {"action", table_json(m.base().size(), m.size(),
                                [&](Index s, Index x) { return m.act(s, x); })}};
}

SemiringPtr base_from_json(const json& doc) {
  const json& base = require(doc, "base");
  if (base.is_string()) return builtin_semiring(base.get<std::string>());
  if (base.is_object())
    return std::make_shared<const FiniteSemiring>(validate_semiring(raw_semiring_from_json(base)));
  throw FormatError("field 'base' must be a semiring document or a builtin name");
}

json to_json(const ExpectationInstance& e) {
  json doc = to_json(e.product());
  json pairs = json::array();
  for (Index p = 0; p < e.product().size(); ++p) pairs.push_back({e.pair(p).s, e.pair(p).m});
  doc["pairing"] = {{"semiring", e.factor_s().name()},
                    {"module", e.factor_m().name()},
                    {"semiring_size", e.factor_s().size()},
                    {"module_size", e.factor_m().size()},
                    {"pairs", std::move(pairs)}};
  return doc;
}

json to_json(const Subset& s) { return s.members(); }

json to_json(const Violation& v) { return {{"axiom", v.axiom}, {"witness", v.witness}}; }

json to_json(const ClassReport& r) {
  const auto& f = r.flags;
  return {{"units", to_json(r.units)},
          {"v_set", to_json(r.v_set)},
          {"idempotents", to_json(r.idempotents)},
          {"nilpotents", to_json(r.nilpotents)},
          {"zero_divisors", to_json(r.zero_divisors)},
          {"flags",
           {{"local", f.local},
            {"semifield", f.semifield},
            {"presimplifiable", f.presimplifiable},
            {"strongly_associate", f.strongly_associate},
            {"domainlike", f.domainlike},
            {"clean", f.clean},
            {"almost_clean", f.almost_clean},
            {"weakly_clean", f.weakly_clean},
            {"weakly_clean_literal", f.weakly_clean_literal},
            {"additively_regular", f.additively_regular}}}};
}

json to_json(const ModuleFlags& f) {
  return {{"zero_module", f.zero_module},
          {"v_set", to_json(f.v_set)},
          {"zero_divisors", to_json(f.zero_divisors)},
          {"annihilator", to_json(f.annihilator)},
          {"presimplifiable", f.presimplifiable},
          {"strongly_associate", f.strongly_associate},
          {"domainlike", f.domainlike},
          {"additively_regular", f.additively_regular},
          {"subtractive", f.subtractive}};
}

json to_json(const IdealProfile& p) {
  auto opt = [](const std::optional<bool>& b) -> json { return b ? json(*b) : json(nullptr); };
  return {{"members", to_json(p.members)},     {"proper", p.proper},
          {"subtractive", p.subtractive},      {"prime", opt(p.prime)},
          {"maximal", opt(p.maximal)},         {"primary", opt(p.primary)},
          {"weakly_prime", opt(p.weakly_prime)}, {"radical", to_json(p.radical)}};
}

WeightedDag graph_from_json(const json& doc) {
  const auto dim = get_as<std::size_t>(doc, "d");
  const json& node_list = require(doc, "nodes");
  if (!node_list.is_array()) throw FormatError("field 'nodes' must be an array");

  std::vector<std::string> nodes;
  for (const json& n : node_list) nodes.push_back(n.is_string() ? n.get<std::string>() : n.dump());
  auto node_index = [&](const json& ref) -> std::size_t {
    const std::string key = ref.is_string() ? ref.get<std::string>() : ref.dump();
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i] == key) return i;
    throw FormatError("unknown node " + key);
  };

  std::vector<Edge> edges;
  for (const json& e : require(doc, "edges")) {
    if (e.contains("r") || e.contains("lifted"))
      throw FormatError("edges take raw (p, v); pre-lifted weights are not accepted");
    edges.push_back({node_index(require(e, "from")), node_index(require(e, "to")),
                     get_as<double>(e, "p"), get_as<std::vector<double>>(e, "v")});
  }
  return WeightedDag(dim, std::move(nodes), node_index(require(doc, "source")),
                     node_index(require(doc, "sink")), std::move(edges));
}

json to_json(const WeightedDag& g) {
  json edges = json::array();
  for (const Edge& e : g.edges())
    edges.push_back(
        {{"from", g.nodes()[e.from]}, {"to", g.nodes()[e.to]}, {"p", e.p}, {"v", e.v}});
  return {{"d", g.dim()},
          {"nodes", g.nodes()},
          {"source", g.nodes()[g.source()]},
          {"sink", g.nodes()[g.sink()]},
          {"edges", std::move(edges)}};
}

json to_json(const NumericWeight& w) { return {{"p", w.p}, {"r", w.r}}; }

}  // namespace expsr::io
