#include "gentlekit/homotopy.hpp"

#include <algorithm>
#include <sstream>

namespace gentlekit {

namespace {

VertexId hl_source(const GentleQuiver& q, const HomotopyLetter& l) {
  return l.inverse ? q.path_target(l.path) : q.path_source(l.path);
}

VertexId hl_target(const GentleQuiver& q, const HomotopyLetter& l) {
  return l.inverse ? q.path_source(l.path) : q.path_target(l.path);
}

HomotopyLetter hl_flip(const HomotopyLetter& l) {
  return HomotopyLetter{l.path, !l.inverse};
}

/// Arrow of the letter's path at the given walk vertex side. For a direct
/// letter the walk-source side is the path's first arrow; for an inverse
/// letter it is the path's last arrow.
ArrowId arrow_at_walk_source(const HomotopyLetter& l) {
  return l.inverse ? l.path.arrows.back() : l.path.arrows.front();
}
ArrowId arrow_at_walk_target(const HomotopyLetter& l) {
  return l.inverse ? l.path.arrows.front() : l.path.arrows.back();
}

std::string hpair_violation(const GentleQuiver& q, const HomotopyLetter& a,
                            const HomotopyLetter& b) {
  if (hl_target(q, a) != hl_source(q, b)) return "walk is not composable";
  if (!a.inverse && !b.inverse) {
    // consecutive differentials must compose to zero
    if (!q.in_ideal(arrow_at_walk_target(a), arrow_at_walk_source(b)))
      return "adjacent direct letters do not compose into the ideal";
  } else if (a.inverse && b.inverse) {
    if (!q.in_ideal(arrow_at_walk_source(b), arrow_at_walk_target(a)))
      return "adjacent inverse letters do not compose into the ideal";
  } else if (!a.inverse && b.inverse) {
    // peak: two paths into the shared vertex must end in distinct arrows
    if (arrow_at_walk_target(a) == arrow_at_walk_source(b))
      return "peak letters share their final arrow";
  } else {
    // valley: two paths out of the shared vertex must start with distinct arrows
    if (arrow_at_walk_target(a) == arrow_at_walk_source(b))
      return "valley letters share their initial arrow";
  }
  return {};
}

}  // namespace

HomotopyString validate_homotopy_string(const GentleQuiver& q,
                                        const std::vector<HomotopyLetter>& letters,
                                        VertexId base, int base_degree) {
  HomotopyString h;
  if (letters.empty()) {
    if (base < 0 || base >= q.vertex_count())
      throw StringError("stalk homotopy string needs a valid base vertex");
    h.vseq_ = {base};
    h.degrees_ = {base_degree};
    return h;
  }
  for (const auto& l : letters) {
    if (l.path.trivial()) throw StringError("homotopy letter must be a nontrivial path");
    if (!q.path_valid(l.path))
      throw StringError("homotopy letter path is invalid: " + q.format_path(l.path));
  }
  for (size_t i = 0; i + 1 < letters.size(); ++i) {
    auto why = hpair_violation(q, letters[i], letters[i + 1]);
    if (!why.empty()) throw StringError("at homotopy letter " + std::to_string(i + 1) + ": " + why);
  }
  h.letters_ = letters;
  h.vseq_.push_back(hl_source(q, letters.front()));
  h.degrees_.push_back(base_degree);
  for (const auto& l : letters) {
    h.vseq_.push_back(hl_target(q, l));
    h.degrees_.push_back(h.degrees_.back() + (l.inverse ? 1 : -1));
  }
  return h;
}

HomotopyString HomotopyString::normalized() const {
  HomotopyString h = *this;
  if (h.degrees_.empty()) return h;
  int mx = *std::max_element(h.degrees_.begin(), h.degrees_.end());
  for (int& d : h.degrees_) d -= mx;
  return h;
}

HomotopyString HomotopyString::canonical(const GentleQuiver& q) const {
  HomotopyString a = normalized();
  HomotopyString b;
  b.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) b.letters_.push_back(hl_flip(*it));
  b.vseq_.assign(vseq_.rbegin(), vseq_.rend());
  b.degrees_.assign(degrees_.rbegin(), degrees_.rend());
  b.left_tail = right_tail;
  b.right_tail = left_tail;
  b = b.normalized();
  (void)q;
  auto key = [](const HomotopyString& h) {
    std::vector<long> k;
    for (size_t i = 0; i < h.crossings(); ++i) {
      k.push_back(h.vseq_[i]);
      k.push_back(h.degrees_[i]);
    }
    for (const auto& l : h.letters_) {
      k.push_back(l.inverse ? 0 : 1);
      for (ArrowId ar : l.path.arrows) k.push_back(ar);
    }
    return k;
  };
  return key(b) < key(a) ? b : a;
}

HomotopyString HomotopyString::subwalk(size_t lo, size_t hi) const {
  if (lo > hi || hi >= crossings()) throw std::runtime_error("subwalk range out of bounds");
  HomotopyString h;
  h.vseq_.assign(vseq_.begin() + lo, vseq_.begin() + hi + 1);
  h.degrees_.assign(degrees_.begin() + lo, degrees_.begin() + hi + 1);
  h.letters_.assign(letters_.begin() + lo, letters_.begin() + hi);
  return h;
}

HomotopyString parse_homotopy_string(const GentleQuiver& q, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  if (toks.empty()) throw StringError("empty homotopy string");

  auto parse_degree = [](const std::string& s) -> std::optional<int> {
    if (s.size() < 3 || s.front() != '[' || s.back() != ']') return std::nullopt;
    return std::stoi(s.substr(1, s.size() - 2));
  };

  auto d0 = parse_degree(toks[0]);
  if (!d0) throw StringError("homotopy string must start with a [degree]");

  if (toks.size() == 2 && toks[1].size() > 1 && toks[1][0] == '@') {
    auto v = q.find_vertex(toks[1].substr(1));
    if (!v) throw StringError("unknown vertex in stalk: " + toks[1]);
    return validate_homotopy_string(q, {}, *v, *d0);
  }

  std::vector<HomotopyLetter> letters;
  std::vector<int> degrees{*d0};
  for (size_t i = 1; i < toks.size(); i += 2) {
    if (i + 1 >= toks.size()) throw StringError("homotopy string must end with a [degree]");
    std::string lt = toks[i];
    bool inverse = !lt.empty() && lt[0] == '~';
    if (inverse) lt = lt.substr(1);
    Path p;
    std::stringstream ls(lt);
    std::string an;
    while (std::getline(ls, an, '.')) {
      auto a = q.find_arrow(an);
      if (!a) throw StringError("unknown arrow '" + an + "' in homotopy letter");
      p.arrows.push_back(*a);
    }
    if (p.arrows.empty()) throw StringError("empty homotopy letter");
    p.base = q.arrow(p.arrows.front()).source;
    letters.push_back(HomotopyLetter{p, inverse});
    auto d = parse_degree(toks[i + 1]);
    if (!d) throw StringError("expected [degree] after letter " + lt);
    degrees.push_back(*d);
  }
  HomotopyString h = validate_homotopy_string(q, letters, kNone, degrees[0]);
  for (size_t i = 0; i < h.crossings(); ++i)
    if (h.degree(i) != degrees[i])
      throw StringError("declared degree " + std::to_string(degrees[i]) + " at crossing " +
                        std::to_string(i) + " contradicts the letter directions");
  return h;
}

std::string format_homotopy_string(const GentleQuiver& q, const HomotopyString& h) {
  std::ostringstream out;
  out << "[" << h.degree(0) << "]";
  if (h.letter_count() == 0) {
    out << " @" << q.vertex_name(h.vertex(0));
    return out.str();
  }
  for (size_t i = 0; i < h.letter_count(); ++i) {
    const auto& l = h.letters()[i];
    out << ' ';
    if (l.inverse) out << '~';
    out << q.format_path(l.path);
    out << " [" << h.degree(i + 1) << "]";
  }
  return out.str();
}

HomotopyBand validate_homotopy_band(const GentleQuiver& q,
                                    const std::vector<HomotopyLetter>& letters) {
  if (letters.size() < 2) throw StringError("homotopy band needs at least two letters");
  const size_t n = letters.size();
  int shift = 0;
  for (const auto& l : letters) {
    if (l.path.trivial()) throw StringError("homotopy letter must be a nontrivial path");
    if (!q.path_valid(l.path)) throw StringError("homotopy letter path is invalid");
    shift += l.inverse ? 1 : -1;
  }
  if (shift != 0) throw StringError("homotopy band degree steps do not close up");
  for (size_t i = 0; i < n; ++i) {
    auto why = hpair_violation(q, letters[i], letters[(i + 1) % n]);
    if (!why.empty())
      throw StringError("at cyclic homotopy letter " + std::to_string(i + 1) + ": " + why);
  }
  for (size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (size_t i = 0; i < n && periodic; ++i) periodic = letters[i] == letters[(i + d) % n];
    if (periodic) throw StringError("homotopy band is not primitive");
  }
  // Canonical representative under rotation and inversion.
  auto encode = [](const std::vector<HomotopyLetter>& w) {
    std::vector<long> k;
    for (const auto& l : w) {
      k.push_back(l.inverse ? 0 : 1);
      k.push_back(static_cast<long>(l.path.arrows.size()));
      for (ArrowId ar : l.path.arrows) k.push_back(ar);
    }
    return k;
  };
  std::vector<HomotopyLetter> inverted(letters.rbegin(), letters.rend());
  for (auto& l : inverted) l.inverse = !l.inverse;
  std::vector<HomotopyLetter> best;
  std::vector<long> best_key;
  for (const std::vector<HomotopyLetter>* w :
       {&letters, const_cast<const std::vector<HomotopyLetter>*>(&inverted)}) {
    for (size_t r = 0; r < n; ++r) {
      std::vector<HomotopyLetter> rot(w->begin() + static_cast<long>(r), w->end());
      rot.insert(rot.end(), w->begin(), w->begin() + static_cast<long>(r));
      auto key = encode(rot);
      if (best.empty() || key < best_key) {
        best = std::move(rot);
        best_key = std::move(key);
      }
    }
  }
  HomotopyBand b;
  b.letters_ = std::move(best);
  for (const auto& l : b.letters_) b.vseq_.push_back(hl_source(q, l));
  b.degrees_.resize(n);
  b.degrees_[0] = 0;
  for (size_t i = 0; i + 1 < n; ++i)
    b.degrees_[i + 1] = b.degrees_[i] + (b.letters_[i].inverse ? 1 : -1);
  int mx = *std::max_element(b.degrees_.begin(), b.degrees_.end());
  for (int& d : b.degrees_) d -= mx;
  b.distinguished_ = 0;
  for (size_t i = 0; i < n; ++i)
    if (!b.letters_[i].inverse) {
      b.distinguished_ = i;
      break;
    }
  return b;
}

}  // namespace gentlekit
