#include "gentlekit/random_gentle.hpp"

#include <random>

#include "gentlekit/strings.hpp"

namespace gentlekit {

namespace {

/// One attempt: random arrows with in/out degree at most two, then a random
/// admissible relation assignment. Gentleness requires the composable pairs
/// at each vertex to split into a relation matching and a non-relation
/// matching; with at most 2x2 pairs the choices are small and enumerable.
std::optional<GentleQuiver> attempt(std::mt19937_64& rng, int max_vertices, int max_arrows) {
  std::uniform_int_distribution<int> nv_dist(2, max_vertices);
  int nv = nv_dist(rng);
  std::uniform_int_distribution<int> na_dist(1, max_arrows);
  int na = na_dist(rng);

  std::vector<std::string> vertices;
  for (int v = 0; v < nv; ++v) vertices.push_back("v" + std::to_string(v + 1));

  std::vector<Arrow> arrows;
  std::vector<int> outdeg(static_cast<size_t>(nv), 0), indeg(static_cast<size_t>(nv), 0);
  std::uniform_int_distribution<int> v_dist(0, nv - 1);
  for (int a = 0; a < na; ++a) {
    bool placed = false;
    for (int tries = 0; tries < 20 && !placed; ++tries) {
      int s = v_dist(rng), t = v_dist(rng);
      if (outdeg[static_cast<size_t>(s)] >= 2 || indeg[static_cast<size_t>(t)] >= 2) continue;
      arrows.push_back(Arrow{"a" + std::to_string(arrows.size() + 1), s, t});
      ++outdeg[static_cast<size_t>(s)];
      ++indeg[static_cast<size_t>(t)];
      placed = true;
    }
  }
  if (arrows.empty()) return std::nullopt;

  // Per vertex, classify each composable (incoming, outgoing) pair as
  // relation or not so that both classes form partial matchings.
  std::vector<std::pair<ArrowId, ArrowId>> relations;
  std::uniform_int_distribution<int> coin(0, 1);
  for (int v = 0; v < nv; ++v) {
    std::vector<ArrowId> ins, outs;
    for (size_t a = 0; a < arrows.size(); ++a) {
      if (arrows[a].target == v) ins.push_back(static_cast<ArrowId>(a));
      if (arrows[a].source == v) outs.push_back(static_cast<ArrowId>(a));
    }
    if (ins.empty() || outs.empty()) continue;
    if (ins.size() == 1 && outs.size() == 1) {
      if (coin(rng)) relations.emplace_back(ins[0], outs[0]);
    } else if (ins.size() == 2 && outs.size() == 1) {
      relations.emplace_back(ins[static_cast<size_t>(coin(rng))], outs[0]);
    } else if (ins.size() == 1 && outs.size() == 2) {
      relations.emplace_back(ins[0], outs[static_cast<size_t>(coin(rng))]);
    } else {
      int flip = coin(rng);
      relations.emplace_back(ins[0], outs[static_cast<size_t>(flip)]);
      relations.emplace_back(ins[1], outs[static_cast<size_t>(1 - flip)]);
    }
  }

  try {
    return GentleQuiver(std::move(vertices), std::move(arrows), std::move(relations));
  } catch (const QuiverError&) {
    return std::nullopt;  // e.g. a relation-free cycle slipped through
  }
}

}  // namespace

GentleQuiver random_gentle(uint64_t seed, int max_vertices, int max_arrows, bool require_band) {
  std::mt19937_64 rng(seed);
  for (int tries = 0; tries < 10000; ++tries) {
    auto q = attempt(rng, max_vertices, max_arrows);
    if (!q) continue;
    if (require_band && enumerate_bands(*q, 6).empty()) continue;
    return *q;
  }
  throw std::runtime_error("random_gentle: could not sample a gentle quiver");
}

}  // namespace gentlekit
