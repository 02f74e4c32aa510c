#include "schubert/json_io.hpp"

#include "schubert/error.hpp"

namespace schubert {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorKind::invalid_argument, what);
}

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    bad(std::string("field \"") + key + "\" has the wrong type");
  }
}

}  // namespace

AffinePermutation element_from_json(const Json& j) {
  int n = get<int>(j, "n");
  if (n < 1) throw Error(ErrorKind::invalid_period, "n must be positive");
  if (j.contains("window")) {
    auto win = get<std::vector<AffinePermutation::value_type>>(j, "window");
    if (static_cast<int>(win.size()) != n)
      throw Error(ErrorKind::period_mismatch, "window length differs from n");
    return AffinePermutation::from_window(std::move(win));
  }
  if (j.contains("word")) {
    auto word = get<std::vector<int>>(j, "word");
    return AffinePermutation::from_word(n, word);
  }
  bad("element needs \"window\" or \"word\"");
}

Json element_to_json(const AffinePermutation& w) {
  Json j;
  j["n"] = w.period();
  j["window"] = Json::array();
  for (auto x : w.window()) j["window"].push_back(x);
  return j;
}

Json graph_to_json(const CoxGraph& g) {
  Json j;
  j["kind"] = g.kind == GraphKind::path ? "path" : "cycle";
  j["n"] = g.n;
  return j;
}

CoxGraph graph_from_json(const Json& j) {
  auto kind = get<std::string>(j, "kind");
  int n = get<int>(j, "n");
  if (kind == "path") return CoxGraph::path(n);
  if (kind == "cycle") return CoxGraph::cycle(n);
  bad("graph kind must be \"path\" or \"cycle\"");
}

StaircaseDiagram diagram_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("graph")) bad("missing field \"graph\"");
  CoxGraph g = graph_from_json(j.at("graph"));
  std::vector<BlockMask> blocks;
  for (const auto& b : get<std::vector<std::vector<int>>>(j, "blocks")) {
    BlockMask m = 0;
    for (int label : b) m |= BlockMask{1} << g.vertex(label);
    blocks.push_back(m);
  }
  std::vector<std::pair<int, int>> rel;
  if (j.contains("covers"))
    for (const auto& p : get<std::vector<std::vector<int>>>(j, "covers")) {
      if (p.size() != 2) throw Error(ErrorKind::malformed_relation, "relation pairs have two entries");
      rel.emplace_back(p[0], p[1]);
    }
  return StaircaseDiagram(g, std::move(blocks), rel);
}

Json diagram_to_json(const StaircaseDiagram& d) {
  const CoxGraph& g = d.graph();
  Json j;
  j["graph"] = graph_to_json(g);
  j["blocks"] = Json::array();
  for (BlockMask b : d.blocks()) {
    Json arr = Json::array();
    // cycle blocks are written from the start of the arc
    int start = 0;
    if (g.kind == GraphKind::cycle && b != g.all())
      for (int v = 0; v < g.n; ++v)
        if ((b >> v & 1u) && !(b >> ((v + g.n - 1) % g.n) & 1u)) {
          start = v;
          break;
        }
    for (int t = 0; t < g.n; ++t) {
      int v = (start + t) % g.n;
      if (b >> v & 1u) arr.push_back(g.label(v));
    }
    j["blocks"].push_back(arr);
  }
  j["covers"] = Json::array();
  for (auto [a, b] : d.covers()) j["covers"].push_back({a, b});
  return j;
}

}  // namespace schubert
