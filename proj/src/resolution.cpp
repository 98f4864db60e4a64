#include "gentlekit/resolution.hpp"

#include <algorithm>
#include <map>

namespace gentlekit {

namespace {

/// First tail arrow past the given end of c, if any: for a top end the
/// other arrow out of the end vertex, for a socle end the non-relation
/// continuation of the arrow entering the end.
std::optional<ArrowId> first_tail_arrow(const GentleQuiver& q, const StringWord& c,
                                        bool right_side) {
  const size_t m = c.length();
  if (m == 0) {
    const auto& outs = q.arrows_out(c.vertex(0));
    size_t slot = right_side ? 1 : 0;
    if (slot < outs.size()) return outs[slot];
    return std::nullopt;
  }
  const Letter& edge = right_side ? c.letters().back() : c.letters().front();
  VertexId end = c.vertex(right_side ? m : 0);
  bool end_is_top = right_side ? edge.inverse : !edge.inverse;
  if (end_is_top) {
    for (ArrowId a : q.arrows_out(end))
      if (a != edge.arrow) return a;
    return std::nullopt;
  }
  ArrowId into = edge.arrow;
  if (q.nonrel_next(into) == kNone) return std::nullopt;
  return q.nonrel_next(into);
}

}  // namespace

ResolutionTail resolution_tail(const GentleQuiver& q, const StringWord& c, bool right_side) {
  ResolutionTail tail;
  auto e0 = first_tail_arrow(q, c, right_side);
  if (!e0) return tail;
  std::map<ArrowId, int> seen;
  ArrowId e = *e0;
  while (true) {
    auto it = seen.find(e);
    if (it != seen.end()) {
      tail.period_start = it->second;
      return tail;
    }
    seen[e] = static_cast<int>(tail.steps.size());
    tail.steps.push_back(e);
    e = q.rel_next(e);
    if (e == kNone) return tail;
  }
}

StringWord tail_syzygy_string(const GentleQuiver& q, const ResolutionTail& tail, int t) {
  int period = tail.period_start ? static_cast<int>(tail.steps.size()) - *tail.period_start : 0;
  int idx = t;
  if (idx >= static_cast<int>(tail.steps.size())) {
    if (!tail.period_start) throw std::runtime_error("tail step out of range");
    idx = *tail.period_start + (idx - *tail.period_start) % period;
  }
  ArrowId e = tail.steps[static_cast<size_t>(idx)];
  std::vector<Letter> letters;
  ArrowId g = q.nonrel_next(e);
  while (g != kNone) {
    letters.push_back(Letter{g, false});
    g = q.nonrel_next(g);
  }
  return validate_string(q, letters, q.arrow(e).target);
}

namespace {

/// Tail arrows to use for a window of the given depth (number of tail
/// crossings), unrolling the period as needed.
std::vector<ArrowId> unrolled_tail(const ResolutionTail& tail, int depth) {
  std::vector<ArrowId> out;
  if (tail.steps.empty()) return out;
  if (!tail.period_start) {
    for (int i = 0; i < depth && i < static_cast<int>(tail.steps.size()); ++i)
      out.push_back(tail.steps[static_cast<size_t>(i)]);
    return out;
  }
  int period = static_cast<int>(tail.steps.size()) - *tail.period_start;
  for (int i = 0; i < depth; ++i) {
    int idx = i < static_cast<int>(tail.steps.size())
                  ? i
                  : *tail.period_start + (i - *tail.period_start) % period;
    out.push_back(tail.steps[static_cast<size_t>(idx)]);
  }
  return out;
}

HomotopyString build_rotation(const GentleQuiver& q, const StringWord& c, int left_depth,
                              int right_depth, const ResolutionTail& lt,
                              const ResolutionTail& rt) {
  auto tops = top_positions(c);
  auto socs = soc_positions(c);

  std::vector<ArrowId> left = unrolled_tail(lt, left_depth);
  std::vector<ArrowId> right = unrolled_tail(rt, right_depth);

  std::vector<HomotopyLetter> letters;

  auto arrow_path = [&](ArrowId a) {
    Path p;
    p.base = q.arrow(a).source;
    p.arrows = {a};
    return p;
  };

  // Left tail, deepest crossing first; all letters are walked against their
  // paths.
  for (size_t i = left.size(); i > 1; --i)
    letters.push_back(HomotopyLetter{arrow_path(left[i - 1]), true});
  if (!left.empty()) {
    // junction letter: the covering branch from the first top through the
    // end of c, extended by e_0
    Path p;
    p.base = c.vertex(tops.front());
    for (size_t i = tops.front(); i > 0; --i) p.arrows.push_back(c.letters()[i - 1].arrow);
    p.arrows.push_back(left[0]);
    letters.push_back(HomotopyLetter{p, true});
  }

  // Middle: tops at degree 0, interior socles at degree -1.
  for (size_t j = 0; j + 1 < tops.size(); ++j) {
    size_t t = tops[j], t2 = tops[j + 1];
    size_t s = 0;
    for (size_t sc : socs)
      if (sc > t && sc < t2) s = sc;
    Path down;
    down.base = c.vertex(t);
    for (size_t i = t; i < s; ++i) down.arrows.push_back(c.letters()[i].arrow);
    letters.push_back(HomotopyLetter{down, false});
    Path up;
    up.base = c.vertex(t2);
    for (size_t i = t2; i > s; --i) up.arrows.push_back(c.letters()[i - 1].arrow);
    letters.push_back(HomotopyLetter{up, true});
  }

  if (!right.empty()) {
    Path p;
    p.base = c.vertex(tops.back());
    for (size_t i = tops.back(); i < c.length(); ++i) p.arrows.push_back(c.letters()[i].arrow);
    p.arrows.push_back(right[0]);
    letters.push_back(HomotopyLetter{p, false});
  }
  for (size_t i = 1; i < right.size(); ++i)
    letters.push_back(HomotopyLetter{arrow_path(right[i]), false});

  int base_degree = -static_cast<int>(left.size());
  VertexId base = letters.empty() ? c.vertex(tops.front()) : kNone;
  return validate_homotopy_string(q, letters, base, base_degree);
}

}  // namespace

HomotopyString rotate(const GentleQuiver& q, const StringWord& c) {
  ResolutionTail lt = resolution_tail(q, c, false);
  ResolutionTail rt = resolution_tail(q, c, true);
  int left_depth = static_cast<int>(lt.steps.size());
  int right_depth = static_cast<int>(rt.steps.size());
  HomotopyString h = build_rotation(q, c, left_depth, right_depth, lt, rt);
  if (lt.period_start)
    h.left_tail = PeriodicTail{
        *lt.period_start, static_cast<int>(lt.steps.size()) - *lt.period_start,
        std::vector<ArrowId>(lt.steps.begin() + *lt.period_start, lt.steps.end())};
  if (rt.period_start)
    h.right_tail = PeriodicTail{
        *rt.period_start, static_cast<int>(rt.steps.size()) - *rt.period_start,
        std::vector<ArrowId>(rt.steps.begin() + *rt.period_start, rt.steps.end())};
  return h;
}

HomotopyString window_resolution(const GentleQuiver& q, const StringWord& c, int window) {
  ResolutionTail lt = resolution_tail(q, c, false);
  ResolutionTail rt = resolution_tail(q, c, true);
  auto depth = [&](const ResolutionTail& t) {
    int full = static_cast<int>(t.steps.size());
    return t.period_start ? window : std::min(window, full);
  };
  return build_rotation(q, c, depth(lt), depth(rt), lt, rt);
}

HomotopyBand band_resolution(const GentleQuiver& q, const BandWord& b) {
  // Regroup the cyclic word into maximal direct/inverse runs; each run is
  // one homotopy letter between a top and a socle of the band.
  const size_t n = b.length();
  std::vector<HomotopyLetter> letters;
  size_t start = 0;
  while (b.letters()[start].inverse == b.letters()[(start + n - 1) % n].inverse)
    ++start;  // begin at a run boundary; bands have both kinds of letters
  size_t i = start;
  do {
    bool inv = b.letters()[i].inverse;
    std::vector<ArrowId> run;
    size_t j = i;
    while (b.letters()[j].inverse == inv) {
      run.push_back(b.letters()[j].arrow);
      j = (j + 1) % n;
      if (j == i) break;
    }
    Path p;
    if (inv) {
      // inverse run walked i..j: the underlying path runs backwards
      p.arrows.assign(run.rbegin(), run.rend());
    } else {
      p.arrows.assign(run.begin(), run.end());
    }
    p.base = q.arrow(p.arrows.front()).source;
    letters.push_back(HomotopyLetter{p, inv});
    i = j;
  } while (i != start);
  return validate_homotopy_band(q, letters);
}

}  // namespace gentlekit
