#include "gentlekit/quiver.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gentlekit {

GentleQuiver::GentleQuiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows,
                           std::vector<std::pair<ArrowId, ArrowId>> relations)
    : vertex_names_(std::move(vertex_names)),
      arrows_(std::move(arrows)),
      relations_(std::move(relations)) {
  std::sort(relations_.begin(), relations_.end());
  relations_.erase(std::unique(relations_.begin(), relations_.end()), relations_.end());
  validate();
}

std::optional<VertexId> GentleQuiver::find_vertex(std::string_view name) const {
  for (size_t i = 0; i < vertex_names_.size(); ++i)
    if (vertex_names_[i] == name) return static_cast<VertexId>(i);
  return std::nullopt;
}

std::optional<ArrowId> GentleQuiver::find_arrow(std::string_view name) const {
  for (size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return static_cast<ArrowId>(i);
  return std::nullopt;
}

bool GentleQuiver::in_ideal(ArrowId a, ArrowId b) const {
  return std::binary_search(relations_.begin(), relations_.end(), std::make_pair(a, b));
}

VertexId GentleQuiver::path_source(const Path& p) const {
  return p.trivial() ? p.base : arrows_[p.arrows.front()].source;
}

VertexId GentleQuiver::path_target(const Path& p) const {
  return p.trivial() ? p.base : arrows_[p.arrows.back()].target;
}

bool GentleQuiver::path_valid(const Path& p) const {
  if (p.trivial()) return p.base >= 0 && p.base < vertex_count();
  for (size_t i = 0; i + 1 < p.arrows.size(); ++i) {
    if (arrows_[p.arrows[i]].target != arrows_[p.arrows[i + 1]].source) return false;
    if (in_ideal(p.arrows[i], p.arrows[i + 1])) return false;
  }
  return true;
}

std::string GentleQuiver::format_path(const Path& p) const {
  if (p.trivial()) return "e(" + vertex_names_[p.base] + ")";
  std::string s;
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '.';
    s += arrows_[p.arrows[i]].name;
  }
  return s;
}

void GentleQuiver::validate() {
  const int nv = vertex_count();
  const int na = arrow_count();
  out_.assign(nv, {});
  in_.assign(nv, {});

  for (size_t i = 0; i < vertex_names_.size(); ++i)
    for (size_t j = i + 1; j < vertex_names_.size(); ++j)
      if (vertex_names_[i] == vertex_names_[j])
        throw QuiverError("names", "duplicate vertex name '" + vertex_names_[i] + "'");
  for (int i = 0; i < na; ++i)
    for (int j = i + 1; j < na; ++j)
      if (arrows_[i].name == arrows_[j].name)
        throw QuiverError("names", "duplicate arrow name '" + arrows_[i].name + "'");

  for (int a = 0; a < na; ++a) {
    if (arrows_[a].source < 0 || arrows_[a].source >= nv || arrows_[a].target < 0 ||
        arrows_[a].target >= nv)
      throw QuiverError("names", "arrow '" + arrows_[a].name + "' references unknown vertex");
    out_[arrows_[a].source].push_back(a);
    in_[arrows_[a].target].push_back(a);
  }

  for (VertexId v = 0; v < nv; ++v) {
    if (out_[v].size() > 2)
      throw QuiverError("vertex-degree", "vertex '" + vertex_names_[v] +
                                             "' is the source of more than two arrows");
    if (in_[v].size() > 2)
      throw QuiverError("vertex-degree", "vertex '" + vertex_names_[v] +
                                             "' is the target of more than two arrows");
  }

  for (auto [a, b] : relations_) {
    if (a < 0 || a >= na || b < 0 || b >= na)
      throw QuiverError("relations", "relation references unknown arrow");
    if (arrows_[a].target != arrows_[b].source)
      throw QuiverError("relations", "relation " + arrows_[a].name + " " + arrows_[b].name +
                                         " is not composable");
  }

  nonrel_next_.assign(na, kNone);
  rel_next_.assign(na, kNone);
  nonrel_prev_.assign(na, kNone);
  rel_prev_.assign(na, kNone);

  for (ArrowId a = 0; a < na; ++a) {
    for (ArrowId b : out_[arrows_[a].target]) {
      if (in_ideal(a, b)) {
        if (rel_next_[a] != kNone)
          throw QuiverError("successor-uniqueness",
                            "arrow '" + arrows_[a].name + "' has two relation successors");
        rel_next_[a] = b;
      } else {
        if (nonrel_next_[a] != kNone)
          throw QuiverError("successor-uniqueness",
                            "arrow '" + arrows_[a].name + "' has two non-relation successors");
        nonrel_next_[a] = b;
      }
    }
  }
  for (ArrowId b = 0; b < na; ++b) {
    for (ArrowId a : in_[arrows_[b].source]) {
      if (in_ideal(a, b)) {
        if (rel_prev_[b] != kNone)
          throw QuiverError("predecessor-uniqueness",
                            "arrow '" + arrows_[b].name + "' has two relation predecessors");
        rel_prev_[b] = a;
      } else {
        if (nonrel_prev_[b] != kNone)
          throw QuiverError("predecessor-uniqueness",
                            "arrow '" + arrows_[b].name + "' has two non-relation predecessors");
        nonrel_prev_[b] = a;
      }
    }
  }

  // Finite-dimensionality: a cycle in the non-relation successor graph would
  // carry I-avoiding paths of unbounded length.
  std::vector<int> state(na, 0);
  for (ArrowId start = 0; start < na; ++start) {
    if (state[start] != 0) continue;
    ArrowId a = start;
    std::vector<ArrowId> stack;
    while (a != kNone && state[a] == 0) {
      state[a] = 1;
      stack.push_back(a);
      a = nonrel_next_[a];
    }
    if (a != kNone && state[a] == 1)
      throw QuiverError("admissibility", "relation-free oriented cycle through arrow '" +
                                             arrows_[a].name + "': algebra is infinite-dimensional");
    for (ArrowId s : stack) state[s] = 2;
  }
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

}  // namespace

GentleQuiver parse_quiver(const std::string& text) {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::pair<std::string, std::string>> rel_names;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string where = "line " + std::to_string(lineno);
    if (toks[0] == "vertex") {
      if (toks.size() != 2) throw QuiverError("syntax", where + ": expected 'vertex <name>'");
      vertices.push_back(toks[1]);
    } else if (toks[0] == "arrow") {
      if (toks.size() != 6 || toks[2] != ":" || toks[4] != "->")
        throw QuiverError("syntax", where + ": expected 'arrow <name> : <src> -> <tgt>'");
      // Vertex names may be declared after the arrow; stash the endpoint
      // names and resolve once the whole file is read.
      arrows.push_back(Arrow{toks[1] + "\x1f" + toks[3] + "\x1f" + toks[5], kNone, kNone});
    } else if (toks[0] == "rel") {
      if (toks.size() != 3) throw QuiverError("syntax", where + ": expected 'rel <arrow1> <arrow2>'");
      rel_names.emplace_back(toks[1], toks[2]);
    } else {
      throw QuiverError("syntax", where + ": unknown directive '" + toks[0] + "'");
    }
  }

  auto vertex_index = [&](const std::string& name) -> VertexId {
    for (size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == name) return static_cast<VertexId>(i);
    throw QuiverError("names", "unknown vertex '" + name + "'");
  };

  for (auto& a : arrows) {
    auto p1 = a.name.find('\x1f');
    auto p2 = a.name.find('\x1f', p1 + 1);
    std::string nm = a.name.substr(0, p1);
    std::string src = a.name.substr(p1 + 1, p2 - p1 - 1);
    std::string tgt = a.name.substr(p2 + 1);
    a.name = nm;
    a.source = vertex_index(src);
    a.target = vertex_index(tgt);
  }

  auto arrow_index = [&](const std::string& name) -> ArrowId {
    for (size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].name == name) return static_cast<ArrowId>(i);
    throw QuiverError("names", "unknown arrow '" + name + "'");
  };

  std::vector<std::pair<ArrowId, ArrowId>> relations;
  relations.reserve(rel_names.size());
  for (auto& [a, b] : rel_names) relations.emplace_back(arrow_index(a), arrow_index(b));

  return GentleQuiver(std::move(vertices), std::move(arrows), std::move(relations));
}

GentleQuiver quiver_from_json(const nlohmann::json& j) {
  std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
  std::vector<Arrow> arrows;
  std::map<std::string, VertexId> vidx;
  for (size_t i = 0; i < vertices.size(); ++i) vidx[vertices[i]] = static_cast<VertexId>(i);
  auto vertex_index = [&](const std::string& name) {
    auto it = vidx.find(name);
    if (it == vidx.end()) throw QuiverError("names", "unknown vertex '" + name + "'");
    return it->second;
  };
  for (const auto& ja : j.at("arrows")) {
    arrows.push_back(Arrow{ja.at("name").get<std::string>(),
                           vertex_index(ja.at("source").get<std::string>()),
                           vertex_index(ja.at("target").get<std::string>())});
  }
  std::map<std::string, ArrowId> aidx;
  for (size_t i = 0; i < arrows.size(); ++i) aidx[arrows[i].name] = static_cast<ArrowId>(i);
  std::vector<std::pair<ArrowId, ArrowId>> relations;
  for (const auto& jr : j.at("relations")) {
    auto it1 = aidx.find(jr.at(0).get<std::string>());
    auto it2 = aidx.find(jr.at(1).get<std::string>());
    if (it1 == aidx.end() || it2 == aidx.end()) throw QuiverError("names", "unknown arrow in relation");
    relations.emplace_back(it1->second, it2->second);
  }
  return GentleQuiver(std::move(vertices), std::move(arrows), std::move(relations));
}

nlohmann::json quiver_to_json(const GentleQuiver& q) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (VertexId v = 0; v < q.vertex_count(); ++v) j["vertices"].push_back(q.vertex_name(v));
  j["arrows"] = nlohmann::json::array();
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    j["arrows"].push_back({{"name", q.arrow(a).name},
                           {"source", q.vertex_name(q.arrow(a).source)},
                           {"target", q.vertex_name(q.arrow(a).target)}});
  }
  j["relations"] = nlohmann::json::array();
  for (auto [a, b] : q.relations())
    j["relations"].push_back({q.arrow(a).name, q.arrow(b).name});
  return j;
}

std::optional<Path> compose(const GentleQuiver& q, const Path& p1, const Path& p2) {
  if (q.path_target(p1) != q.path_source(p2)) return std::nullopt;
  if (p1.trivial()) return p2;
  if (p2.trivial()) return p1;
  if (q.in_ideal(p1.arrows.back(), p2.arrows.front())) return std::nullopt;
  Path out;
  out.base = q.path_source(p1);
  out.arrows = p1.arrows;
  out.arrows.insert(out.arrows.end(), p2.arrows.begin(), p2.arrows.end());
  return out;
}

Path maximal_path_from(const GentleQuiver& q, VertexId v, int slot) {
  Path p;
  p.base = v;
  const auto& outs = q.arrows_out(v);
  if (slot < 0 || slot >= static_cast<int>(outs.size())) return p;
  ArrowId a = outs[slot];
  while (a != kNone) {
    p.arrows.push_back(a);
    a = q.nonrel_next(a);
  }
  return p;
}

std::vector<Path> enumerate_paths(const GentleQuiver& q, int max_len) {
  std::vector<Path> out;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    Path trivial;
    trivial.base = v;
    out.push_back(trivial);
    // Grow I-avoiding paths breadth-first from v.
    std::vector<Path> frontier{trivial};
    for (int len = 1; len <= max_len; ++len) {
      std::vector<Path> next;
      for (const Path& p : frontier) {
        VertexId end = q.path_target(p);
        for (ArrowId a : q.arrows_out(end)) {
          if (!p.trivial() && q.in_ideal(p.arrows.back(), a)) continue;
          Path ext = p;
          ext.arrows.push_back(a);
          next.push_back(std::move(ext));
        }
      }
      for (const Path& p : next) out.push_back(p);
      frontier = std::move(next);
      if (frontier.empty()) break;
    }
  }
  std::sort(out.begin(), out.end(), [&](const Path& a, const Path& b) {
    auto ka = std::make_tuple(q.path_source(a), a.length(), a.arrows);
    auto kb = std::make_tuple(q.path_source(b), b.length(), b.arrows);
    return ka < kb;
  });
  return out;
}

}  // namespace gentlekit
