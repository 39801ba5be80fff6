#include "matchfactory/io.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace matchfactory {

std::string serialize(const Multigraph& g) {
  std::ostringstream out;
  out << "{\"n\": " << g.vertex_count() << ", \"edges\": [";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << (e == 0 ? "\n" : ",\n");
    out << "[" << g.edge(e).a << "," << g.edge(e).b << "]";
  }
  out << "\n]}\n";
  return out.str();
}

Multigraph parse(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("parse: malformed document: ") +
                                ex.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") ||
      !doc["n"].is_number_unsigned() || !doc["edges"].is_array())
    throw std::invalid_argument(
        "parse: document must be {\"n\": int, \"edges\": [[a,b],...]}");
  Multigraph g(doc["n"].get<VertexId>());
  for (const auto& item : doc["edges"]) {
    if (!item.is_array() || item.size() != 2 ||
        !item[0].is_number_unsigned() || !item[1].is_number_unsigned())
      throw std::invalid_argument("parse: edge entries must be [a,b] pairs");
    g.add_edge(item[0].get<VertexId>(), item[1].get<VertexId>());
  }
  return g;
}

std::string to_dot(const Multigraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges())
    out << "  " << e.a << " -- " << e.b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace matchfactory
