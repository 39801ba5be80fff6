#include "matchfactory/provenance.hpp"

#include <stdexcept>

#include "json.hpp"

namespace matchfactory {

namespace {

using nlohmann::json;

json embedding_json(const BlockEmbedding& emb) {
  json j;
  switch (emb.role) {
    case BlockEmbedding::Role::kPetersenCopy: j["role"] = "P"; break;
    case BlockEmbedding::Role::kQBlock: j["role"] = "Q"; break;
    case BlockEmbedding::Role::kTBlock: j["role"] = "T"; break;
  }
  j["index"] = emb.index;
  j["vertex_map"] = emb.vertex_map;
  if (emb.u_q != kNoVertex) j["u_q"] = emb.u_q;
  if (emb.z1 != kNoVertex) j["z1"] = emb.z1;
  if (emb.z2 != kNoVertex) j["z2"] = emb.z2;
  if (emb.x[0] != kNoVertex) j["x"] = emb.x;
  if (!emb.u_side[0].empty() || !emb.u_side[1].empty())
    j["u_side"] = {emb.u_side[0], emb.u_side[1]};
  return j;
}

json edges_json(const Multigraph& g) {
  json arr = json::array();
  for (const Edge& e : g.edges()) arr.push_back({e.a, e.b});
  return arr;
}

}  // namespace

std::string provenance_json(const PetersenHost& host) {
  json j;
  j["schema_version"] = 1;
  j["family"] = host.added_types.empty() ? "petersen" : "P";
  j["n"] = host.g.vertex_count();
  j["added_types"] = host.added_types;
  j["base_edge"] = host.base_edge;
  j["source"] = host.source;
  return j.dump(2) + "\n";
}

std::string provenance_json(const QGadget& q) {
  json j;
  j["schema_version"] = 1;
  j["family"] = "Q";
  j["n"] = q.g.vertex_count();
  j["block"] = embedding_json(q.embedding);
  json info = json::array();
  for (const QEdgeInfo& e : q.edge_info)
    info.push_back({e.copy, e.base, e.source});
  j["edge_info"] = info;
  return j.dump(2) + "\n";
}

std::string provenance_json(const Multigraph& t, const BlockEmbedding& emb,
                            int k) {
  json j;
  j["schema_version"] = 1;
  j["family"] = "T";
  j["k"] = k;
  j["n"] = t.vertex_count();
  j["block"] = embedding_json(emb);
  return j.dump(2) + "\n";
}

std::string provenance_json(const SFamily& s) {
  json j;
  j["schema_version"] = 1;
  j["family"] = "S";
  j["k"] = s.k;
  j["n"] = s.g.vertex_count();
  j["q_blocks"] = json::array();
  for (const BlockEmbedding& b : s.q_blocks)
    j["q_blocks"].push_back(embedding_json(b));
  j["t_blocks"] = json::array();
  for (const BlockEmbedding& b : s.t_blocks)
    j["t_blocks"].push_back(embedding_json(b));
  return j.dump(2) + "\n";
}

std::string provenance_json(const HFamily& h) {
  json j;
  j["schema_version"] = 1;
  j["family"] = "H";
  j["k"] = h.k;
  j["variant"] = variant_name(h.variant);
  j["n"] = h.g.vertex_count();
  j["edges"] = edges_json(h.g);
  j["blocks"] = json::array();
  for (const BlockEmbedding& b : h.blocks)
    j["blocks"].push_back(embedding_json(b));
  j["x"] = h.x;
  json info = json::array();
  for (const HEdgeInfo& e : h.edge_info)
    info.push_back({e.block, e.q.copy, e.q.base, e.q.source,
                    static_cast<int>(e.glue), e.glue_block, e.glue_slot});
  j["edge_info"] = info;
  j["xz1"] = h.xz1;
  j["triangle"] = h.triangle;
  j["t_internal"] = h.t_internal;
  j["added"] = json::array();
  for (const MatchingCopyRange& r : h.added)
    j["added"].push_back({{"label", r.label},
                          {"first", r.first},
                          {"count", r.count}});
  return j.dump(2) + "\n";
}

HFamily load_h_family(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("load_h_family: bad document: ") +
                                ex.what());
  }
  if (!j.is_object() || j.value("family", "") != "H")
    throw std::invalid_argument("load_h_family: not an H-family sidecar");
  HFamily h;
  h.k = j.at("k").get<int>();
  std::string var = j.at("variant").get<std::string>();
  if (var == "base") h.variant = HVariant::kBase;
  else if (var == "prime") h.variant = HVariant::kPrime;
  else if (var == "double-prime") h.variant = HVariant::kDoublePrime;
  else if (var == "triple-prime") h.variant = HVariant::kTriplePrime;
  else throw std::invalid_argument("load_h_family: unknown variant");

  h.g = Multigraph(j.at("n").get<VertexId>());
  for (const auto& e : j.at("edges"))
    h.g.add_edge(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());

  int bi = 0;
  for (const auto& b : j.at("blocks")) {
    BlockEmbedding emb;
    emb.role = BlockEmbedding::Role::kQBlock;
    emb.index = b.at("index").get<int>();
    emb.vertex_map = b.at("vertex_map").get<std::vector<VertexId>>();
    emb.u_q = b.at("u_q").get<VertexId>();
    emb.z1 = b.at("z1").get<VertexId>();
    emb.z2 = b.at("z2").get<VertexId>();
    emb.u_side[0] = b.at("u_side").at(0).get<std::vector<EdgeId>>();
    emb.u_side[1] = b.at("u_side").at(1).get<std::vector<EdgeId>>();
    h.blocks[bi++] = std::move(emb);
    if (bi == 3) break;
  }
  h.x = j.at("x").get<std::array<VertexId, 3>>();
  for (const auto& row : j.at("edge_info")) {
    HEdgeInfo info;
    info.block = static_cast<std::int8_t>(row.at(0).get<int>());
    info.q.copy = static_cast<std::uint8_t>(row.at(1).get<int>());
    info.q.base = static_cast<std::uint8_t>(row.at(2).get<int>());
    info.q.source = static_cast<std::int16_t>(row.at(3).get<int>());
    info.glue = static_cast<HEdgeInfo::Glue>(row.at(4).get<int>());
    info.glue_block = static_cast<std::uint8_t>(row.at(5).get<int>());
    info.glue_slot = static_cast<std::uint8_t>(row.at(6).get<int>());
    h.edge_info.push_back(info);
  }
  h.xz1 = j.at("xz1")
              .get<std::array<std::array<std::vector<EdgeId>, 2>, 3>>();
  h.triangle = j.at("triangle").get<std::array<std::vector<EdgeId>, 3>>();
  h.t_internal = j.at("t_internal").get<std::array<std::vector<EdgeId>, 3>>();
  for (const auto& r : j.at("added")) {
    MatchingCopyRange range;
    range.label = r.at("label").get<std::string>();
    range.first = r.at("first").get<EdgeId>();
    range.count = r.at("count").get<EdgeId>();
    h.added.push_back(std::move(range));
  }
  return h;
}

}  // namespace matchfactory
