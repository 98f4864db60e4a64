#include "gentlekit/cohomology.hpp"

#include <algorithm>
#include <cassert>

namespace gentlekit {

namespace {

// The cohomology of a string complex decomposes crossing by crossing.  At a
// crossing i the summand P(v_i) meets at most two differential components:
// a letter whose path starts at v_i maps the neighbour into P(v_i)
// (incoming), a letter whose path ends at v_i maps P(v_i) out (outgoing).
// In the position coordinates of the projective string of v_i:
//   - an outgoing letter with final arrow eta kills the top and the whole
//     branch continuing eta without a relation; only the relation branch
//     survives;
//   - an incoming letter of length l along a branch cuts that branch at
//     depth l-1 when the neighbour has another differential of its own
//     (plain image), and at depth l when the neighbour is a source whose
//     two differentials entangle; in the latter case the depth-l positions
//     of the two crossings adjacent to the source are identified and the
//     chains glue (the supplemental union).

struct CrossCut {
  size_t crossing = 0;
  StringWord proj;     // projective string of the crossing vertex
  int top = 0;         // 0-based top position in proj
  int lo = 1, hi = 0;  // kept interval, 0-based positions; empty when lo > hi
  std::optional<int> glue_left;   // glue position toward the walk-left source
  std::optional<int> glue_right;  // toward the walk-right source
};

struct LetterView {
  const HomotopyLetter* letter = nullptr;
  bool incoming = false;  // path starts at the crossing vertex
  size_t neighbor = 0;
};

bool is_source_crossing(const HomotopyString& h, size_t j) {
  if (j == 0 || j + 1 >= h.crossings()) return false;
  return !h.letters()[j - 1].inverse && h.letters()[j].inverse;
}

ArrowId branch_first_arrow(const StringWord& proj, int top, bool low_side) {
  if (low_side) {
    if (top == 0) return kNone;
    return proj.letters()[static_cast<size_t>(top) - 1].arrow;
  }
  if (static_cast<size_t>(top) + 1 >= proj.positions()) return kNone;
  return proj.letters()[static_cast<size_t>(top)].arrow;
}

CrossCut cut_at_crossing(const GentleQuiver& q, const HomotopyString& h, size_t i) {
  CrossCut c;
  c.crossing = i;
  c.proj = projective_string(q, h.vertex(i));
  c.top = static_cast<int>(projective_top_position(q, h.vertex(i)));
  const int low_len = c.top;
  const int high_len = static_cast<int>(c.proj.positions()) - 1 - c.top;
  ArrowId low_first = branch_first_arrow(c.proj, c.top, true);
  ArrowId high_first = branch_first_arrow(c.proj, c.top, false);

  std::vector<LetterView> views;
  if (i > 0) {
    const HomotopyLetter& l = h.letters()[i - 1];
    views.push_back(LetterView{&l, l.inverse, i - 1});
  }
  if (i + 1 < h.crossings()) {
    const HomotopyLetter& l = h.letters()[i];
    views.push_back(LetterView{&l, !l.inverse, i + 1});
  }

  int keep_low = low_len, keep_high = high_len;
  bool top_alive = true;

  for (const LetterView& v : views) {
    if (v.incoming) continue;
    // the outgoing letter's path ends at the crossing vertex
    ArrowId eta = v.letter->path.arrows.back();
    top_alive = false;
    ArrowId survivor = q.rel_next(eta);
    if (survivor != low_first) keep_low = 0;
    if (survivor != high_first) keep_high = 0;
  }

  for (const LetterView& v : views) {
    if (!v.incoming) continue;
    const Path& p = v.letter->path;
    ArrowId first = p.arrows.front();
    int len = static_cast<int>(p.length());
    bool glue = is_source_crossing(h, v.neighbor);
    int depth = glue ? len : len - 1;
    bool low_side;
    if (first == low_first)
      low_side = true;
    else if (first == high_first)
      low_side = false;
    else
      throw std::runtime_error("incoming letter does not follow a branch of the projective");
    if (low_side)
      keep_low = std::min(keep_low, depth);
    else
      keep_high = std::min(keep_high, depth);
    if (glue) {
      int pos = low_side ? c.top - len : c.top + len;
      if (v.neighbor < i)
        c.glue_left = pos;
      else
        c.glue_right = pos;
    }
  }

  if (top_alive) {
    c.lo = c.top - keep_low;
    c.hi = c.top + keep_high;
  } else if (keep_low > 0) {
    c.lo = c.top - keep_low;
    c.hi = c.top - 1;
  } else if (keep_high > 0) {
    c.lo = c.top + 1;
    c.hi = c.top + keep_high;
  } else {
    c.lo = 1;
    c.hi = 0;
  }

  // A glued end always survives all other cuts.
  if (c.glue_left && (c.lo > *c.glue_left || c.hi < *c.glue_left))
    throw std::runtime_error("glue position fell outside the kept interval");
  if (c.glue_right && (c.lo > *c.glue_right || c.hi < *c.glue_right))
    throw std::runtime_error("glue position fell outside the kept interval");
  return c;
}

Truncation to_truncation(const CrossCut& c) {
  Truncation t;
  t.base = c.proj;
  const int m = static_cast<int>(c.proj.positions());
  if (c.lo > c.hi) {
    t.r = 1;
    t.s = 0;
    return t;
  }
  t.r = (c.lo == 0) ? 0 : c.lo + 1;
  t.s = (c.hi == m - 1) ? m + 1 : c.hi + 1;
  return t;
}

/// Walks one glued chain into a string: intervals are traversed from the
/// non-glue end toward the glue, shared positions are identified, and
/// letters are taken from the projective strings.
StringWord chain_to_string(const GentleQuiver& q, const std::vector<const CrossCut*>& chain) {
  std::vector<Letter> letters;
  VertexId lone_vertex = kNone;

  auto traverse = [&](const CrossCut& c, int from, int to, bool skip_first) {
    if (from == to && !skip_first) lone_vertex = c.proj.vertex(static_cast<size_t>(from));
    int step = to >= from ? 1 : -1;
    for (int p = from; p != to; p += step) {
      size_t li = static_cast<size_t>(std::min(p, p + step));
      Letter l = c.proj.letters()[li];
      if (step < 0) l.inverse = !l.inverse;
      letters.push_back(l);
    }
  };

  for (size_t k = 0; k < chain.size(); ++k) {
    const CrossCut& c = *chain[k];
    bool has_left = k > 0;
    bool has_right = k + 1 < chain.size();
    int from, to;
    if (!has_left && !has_right) {
      from = c.lo;
      to = c.hi;
    } else if (!has_left) {
      to = *c.glue_right;
      from = (to == c.lo) ? c.hi : c.lo;
    } else if (!has_right) {
      from = *c.glue_left;
      to = (from == c.lo) ? c.hi : c.lo;
    } else {
      from = *c.glue_left;
      to = *c.glue_right;
    }
    traverse(c, from, to, has_left);
  }
  if (letters.empty()) {
    if (lone_vertex == kNone && !chain.empty()) {
      const CrossCut& c = *chain.front();
      lone_vertex = c.proj.vertex(static_cast<size_t>(c.lo));
    }
    return trivial_string(q, lone_vertex);
  }
  return validate_string(q, letters);
}

}  // namespace

std::map<int, std::vector<CohomCurve>> cohomology_curves(const GentleQuiver& q,
                                                         const HomotopyString& h) {
  std::map<int, std::vector<CohomCurve>> out;
  for (size_t i = 0; i < h.crossings(); ++i) {
    CrossCut c = cut_at_crossing(q, h, i);
    out[h.degree(i)].push_back(CohomCurve{i, to_truncation(c)});
  }
  return out;
}

CohomologyReport cohomology_truncation(const GentleQuiver& q, const HomotopyString& h) {
  std::vector<CrossCut> cuts;
  cuts.reserve(h.crossings());
  for (size_t i = 0; i < h.crossings(); ++i) cuts.push_back(cut_at_crossing(q, h, i));

  // Group crossings by degree in walk order and glue across source
  // crossings: i and i+2 glue exactly when i+1 is a source between them.
  CohomologyReport r;
  std::map<int, std::vector<size_t>> by_degree;
  for (size_t i = 0; i < h.crossings(); ++i) by_degree[h.degree(i)].push_back(i);

  for (auto& [deg, crossings] : by_degree) {
    std::vector<StringWord> strings;
    std::vector<const CrossCut*> chain;
    auto flush = [&]() {
      if (!chain.empty()) strings.push_back(chain_to_string(q, chain));
      chain.clear();
    };
    for (size_t k = 0; k < crossings.size(); ++k) {
      const CrossCut& c = cuts[crossings[k]];
      if (c.lo > c.hi) {
        flush();
        continue;
      }
      bool linked = false;
      if (!chain.empty()) {
        const CrossCut& prev = *chain.back();
        linked = prev.crossing + 2 == c.crossing && is_source_crossing(h, prev.crossing + 1) &&
                 prev.glue_right && c.glue_left;
        if (linked) {
          // shared position carries the source vertex on both sides
          VertexId vj = h.vertex(prev.crossing + 1);
          assert(prev.proj.vertex(static_cast<size_t>(*prev.glue_right)) == vj);
          assert(c.proj.vertex(static_cast<size_t>(*c.glue_left)) == vj);
          (void)vj;
        }
      }
      if (!linked) flush();
      chain.push_back(&c);
    }
    flush();

    if (strings.empty()) continue;
    std::map<VertexId, int> dims;
    for (const StringWord& w : strings)
      for (auto& [v, d] : string_dim_vector(w)) dims[v] += d;
    r.dims[deg] = std::move(dims);
    r.strings[deg] = std::move(strings);
  }
  r.hl = hl(r);
  return r;
}

std::vector<StringWord> supplemental_union(const GentleQuiver& q,
                                           const std::vector<Truncation>& parts,
                                           const HomotopyString* glue_context) {
  if (glue_context != nullptr) {
    // Parts must be the per-crossing cohomological truncations in walk
    // order; recompute the crossing structure and glue along it.
    const HomotopyString& h = *glue_context;
    if (parts.size() != h.crossings())
      throw StringError("supplemental union: need one truncation per crossing");
    CohomologyReport r = cohomology_truncation(q, h);
    std::vector<StringWord> out;
    for (auto& [deg, strs] : r.strings) out.insert(out.end(), strs.begin(), strs.end());
    return out;
  }

  // Without a context, adjacency means: same base, position ranges meeting
  // end to end. Any other configuration keeps the parts separate.
  std::vector<StringWord> out;
  std::optional<Truncation> run;
  auto flush = [&]() {
    if (run) {
      auto w = completion(q, *run);
      if (w) out.push_back(*w);
    }
    run.reset();
  };
  for (const Truncation& t : parts) {
    if (t.trivial()) {
      flush();
      continue;
    }
    const int m = static_cast<int>(t.base.positions());
    int lo = std::max(t.r, 1), hi = std::min(t.s, m);
    if (run && run->base == t.base) {
      int rlo = std::max(run->r, 1), rhi = std::min(run->s, m);
      if (rhi + 1 == lo) {
        run->s = t.s;
        continue;
      }
      if (hi + 1 == rlo) {
        run->r = t.r;
        continue;
      }
    }
    flush();
    run = t;
  }
  flush();
  return out;
}

}  // namespace gentlekit
