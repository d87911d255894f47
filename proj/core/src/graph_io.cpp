#include "iwagraph/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "iwagraph/errors.hpp"

namespace iwagraph {

namespace {

using nlohmann::ordered_json;

ordered_json parse_or_throw(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error("malformed JSON input");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

GraphBundle parse_graph_json(const std::string& text) {
  ordered_json j = parse_or_throw(text);
  if (!j.is_object()) throw input_error("graph file: expected an object");
  GraphBundle b;
  if (!j.contains("p") || !j["p"].is_number_unsigned())
    throw input_error("graph file: missing prime 'p'");
  b.p = j["p"].get<std::uint32_t>();
  if (!is_prime(b.p)) throw input_error("graph file: p must be prime");
  b.d = j.value("d", 1);
  if (b.d < 1) throw input_error("graph file: d must be >= 1");
  if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
    throw input_error("graph file: missing vertices");
  std::set<std::string> seen;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw input_error("graph file: vertex names must be strings");
    std::string name = v.get<std::string>();
    if (!seen.insert(name).second)
      throw input_error("graph file: duplicate vertex '" + name + "'");
    b.graph.add_vertex(name);
  }
  std::vector<Exponents> volts;
  std::set<std::string> edge_ids;
  if (!j.contains("edges") || !j["edges"].is_array())
    throw input_error("graph file: missing edges");
  for (const auto& e : j["edges"]) {
    if (!e.is_object()) throw input_error("graph file: edge must be an object");
    std::string id = e.value("id", "e" + std::to_string(volts.size() + 1));
    if (!edge_ids.insert(id).second)
      throw input_error("graph file: duplicate edge id '" + id + "'");
    int from = b.graph.vertex_index(e.value("from", ""));
    int to = b.graph.vertex_index(e.value("to", ""));
    if (from < 0 || to < 0)
      throw input_error("graph file: edge '" + id + "' has an unknown endpoint");
    if (!e.contains("weight") || !e["weight"].is_string())
      throw input_error("graph file: edge '" + id + "' needs a weight string");
    Rational w = parse_rational(e["weight"].get<std::string>());
    Rational w_rev = e.contains("weight_rev")
                         ? parse_rational(e["weight_rev"].get<std::string>())
                         : w;
    Exponents volt(static_cast<std::size_t>(b.d), 0);
    if (e.contains("voltage")) {
      if (!e["voltage"].is_array() ||
          e["voltage"].size() != static_cast<std::size_t>(b.d))
        throw input_error("graph file: edge '" + id + "' voltage must have d entries");
      for (std::size_t i = 0; i < volt.size(); ++i)
        volt[i] = e["voltage"][i].get<std::int32_t>();
    }
    b.graph.add_edge(from, to, w, w_rev, id);
    volts.push_back(std::move(volt));
  }
  b.alpha = ZdVoltage(b.d, std::move(volts));
  return b;
}

GraphBundle load_graph_file(const std::string& path) {
  return parse_graph_json(read_file(path));
}

std::string graph_to_json(const GraphBundle& b) {
  ordered_json j;
  j["p"] = b.p;
  j["d"] = b.d;
  j["vertices"] = ordered_json::array();
  for (int v = 0; v < b.graph.vertex_count(); ++v)
    j["vertices"].push_back(b.graph.vertex_name(v));
  j["edges"] = ordered_json::array();
  for (int k = 0; k < b.graph.pair_count(); ++k) {
    const Dart& e = b.graph.dart(2 * k);
    const Dart& ebar = b.graph.dart(2 * k + 1);
    ordered_json je;
    je["id"] = b.graph.edge_name(k);
    je["from"] = b.graph.vertex_name(e.origin);
    je["to"] = b.graph.vertex_name(e.terminus);
    je["weight"] = rational_str(e.weight);
    if (ebar.weight != e.weight) je["weight_rev"] = rational_str(ebar.weight);
    je["voltage"] = b.alpha.on_pair(static_cast<std::size_t>(k));
    j["edges"].push_back(je);
  }
  return j.dump(2) + "\n";
}

BetaBundle parse_beta_json(const std::string& text, const WeightedGraph& graph) {
  ordered_json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("group"))
    throw input_error("beta file: expected an object with 'group'");
  BetaBundle b;
  const auto& jg = j["group"];
  if (jg.is_string()) {
    std::string name = jg.get<std::string>();
    if (name == "Q8")
      b.group = FiniteGroup::quaternion8();
    else if (name == "D4")
      b.group = FiniteGroup::dihedral8();
    else
      throw input_error("beta file: unknown group '" + name + "'");
  } else if (jg.is_object() && jg.contains("names") && jg.contains("table")) {
    std::vector<std::string> names = jg["names"].get<std::vector<std::string>>();
    std::vector<std::vector<std::uint32_t>> table =
        jg["table"].get<std::vector<std::vector<std::uint32_t>>>();
    b.group = FiniteGroup::from_table(std::move(names), std::move(table));
  } else {
    throw input_error("beta file: 'group' must be \"Q8\", \"D4\", or {names, table}");
  }
  if (!j.contains("beta") || !j["beta"].is_object())
    throw input_error("beta file: missing 'beta' map");
  b.beta.per_pair.assign(static_cast<std::size_t>(graph.pair_count()),
                         b.group.identity());
  std::set<int> assigned;
  for (const auto& [edge_id, elem] : j["beta"].items()) {
    int pair = graph.edge_index(edge_id);
    if (pair < 0) throw input_error("beta file: unknown edge '" + edge_id + "'");
    if (!elem.is_string())
      throw input_error("beta file: element for '" + edge_id + "' must be a string");
    int idx = b.group.element_index(elem.get<std::string>());
    if (idx < 0)
      throw input_error("beta file: unknown group element '" +
                        elem.get<std::string>() + "'");
    b.beta.per_pair[static_cast<std::size_t>(pair)] = static_cast<std::uint32_t>(idx);
    assigned.insert(pair);
  }
  return b;
}

BetaBundle load_beta_file(const std::string& path, const WeightedGraph& graph) {
  return parse_beta_json(read_file(path), graph);
}

}  // namespace iwagraph
