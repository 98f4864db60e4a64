#include "gentlekit/strings.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gentlekit {

namespace {

VertexId letter_source(const GentleQuiver& q, const Letter& l) {
  return l.inverse ? q.arrow(l.arrow).target : q.arrow(l.arrow).source;
}

VertexId letter_target(const GentleQuiver& q, const Letter& l) {
  return l.inverse ? q.arrow(l.arrow).source : q.arrow(l.arrow).target;
}

std::vector<Letter> invert_letters(const std::vector<Letter>& letters) {
  std::vector<Letter> out(letters.rbegin(), letters.rend());
  for (auto& l : out) l.inverse = !l.inverse;
  return out;
}

/// First violated string condition for the pair (a, b) of consecutive
/// letters, or empty string.
std::string pair_violation(const GentleQuiver& q, const Letter& a, const Letter& b) {
  if (letter_target(q, a) != letter_source(q, b)) return "walk is not composable";
  if (a.arrow == b.arrow && a.inverse != b.inverse) return "walk is not reduced";
  if (!a.inverse && !b.inverse && q.in_ideal(a.arrow, b.arrow))
    return "direct run meets relation " + q.arrow(a.arrow).name + " " + q.arrow(b.arrow).name;
  if (a.inverse && b.inverse && q.in_ideal(b.arrow, a.arrow))
    return "inverse run meets relation " + q.arrow(b.arrow).name + " " + q.arrow(a.arrow).name;
  return {};
}

}  // namespace

StringWord validate_string(const GentleQuiver& q, const std::vector<Letter>& letters,
                           VertexId base) {
  if (letters.empty()) {
    if (base < 0 || base >= q.vertex_count())
      throw StringError("trivial string needs a valid base vertex");
    StringWord w;
    w.vseq_ = {base};
    return w;
  }
  for (const Letter& l : letters)
    if (l.arrow < 0 || l.arrow >= q.arrow_count()) throw StringError("unknown arrow in string");
  for (size_t i = 0; i + 1 < letters.size(); ++i) {
    auto why = pair_violation(q, letters[i], letters[i + 1]);
    if (!why.empty()) throw StringError("at letter " + std::to_string(i + 1) + ": " + why);
  }
  std::vector<Letter> canon = letters;
  std::vector<Letter> inv = invert_letters(letters);
  if (inv < canon) canon = std::move(inv);
  StringWord w;
  w.letters_ = std::move(canon);
  w.vseq_.push_back(letter_source(q, w.letters_.front()));
  for (const Letter& l : w.letters_) w.vseq_.push_back(letter_target(q, l));
  return w;
}

StringWord trivial_string(const GentleQuiver& q, VertexId v) {
  return validate_string(q, {}, v);
}

StringWord parse_string(const GentleQuiver& q, const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; }),
          s.end());
  if (s.rfind("e(", 0) == 0 && s.back() == ')') {
    std::string name = s.substr(2, s.size() - 3);
    auto v = q.find_vertex(name);
    if (!v) throw StringError("unknown vertex '" + name + "'");
    return trivial_string(q, *v);
  }
  std::vector<Letter> letters;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, '.')) {
    if (tok.empty()) throw StringError("empty letter in '" + text + "'");
    bool inverse = tok[0] == '~';
    std::string name = inverse ? tok.substr(1) : tok;
    auto a = q.find_arrow(name);
    if (!a) throw StringError("unknown arrow '" + name + "'");
    letters.push_back(Letter{*a, inverse});
  }
  return validate_string(q, letters);
}

std::string format_string(const GentleQuiver& q, const StringWord& w) {
  if (w.length() == 0) return "e(" + q.vertex_name(w.vertex(0)) + ")";
  std::string out;
  for (size_t i = 0; i < w.length(); ++i) {
    if (i) out += '.';
    if (w.letters()[i].inverse) out += '~';
    out += q.arrow(w.letters()[i].arrow).name;
  }
  return out;
}

std::vector<size_t> top_positions(const StringWord& w) {
  std::vector<size_t> out;
  const size_t m = w.length();
  for (size_t i = 0; i <= m; ++i) {
    bool left_ok = i == 0 || w.letters()[i - 1].inverse;
    bool right_ok = i == m || !w.letters()[i].inverse;
    if (left_ok && right_ok) out.push_back(i);
  }
  return out;
}

std::vector<size_t> soc_positions(const StringWord& w) {
  std::vector<size_t> out;
  const size_t m = w.length();
  for (size_t i = 0; i <= m; ++i) {
    bool left_ok = i == 0 || !w.letters()[i - 1].inverse;
    bool right_ok = i == m || w.letters()[i].inverse;
    if (left_ok && right_ok) out.push_back(i);
  }
  return out;
}

StringWord projective_string(const GentleQuiver& q, VertexId v) {
  Path a = maximal_path_from(q, v, 0);
  Path b = maximal_path_from(q, v, 1);
  std::vector<Letter> letters;
  for (auto it = a.arrows.rbegin(); it != a.arrows.rend(); ++it)
    letters.push_back(Letter{*it, true});
  for (ArrowId ar : b.arrows) letters.push_back(Letter{ar, false});
  return validate_string(q, letters, v);
}

size_t projective_top_position(const GentleQuiver& q, VertexId v) {
  auto tops = top_positions(projective_string(q, v));
  // A projective string has exactly one top, at v.
  return tops.at(0);
}

BandWord validate_band(const GentleQuiver& q, const std::vector<Letter>& letters) {
  if (letters.size() < 2) throw StringError("band needs at least two letters");
  bool has_direct = false, has_inverse = false;
  for (const Letter& l : letters) (l.inverse ? has_inverse : has_direct) = true;
  if (!has_direct || !has_inverse)
    throw StringError("band must contain a direct and an inverse letter");
  const size_t n = letters.size();
  for (size_t i = 0; i < n; ++i) {
    auto why = pair_violation(q, letters[i], letters[(i + 1) % n]);
    if (!why.empty()) throw StringError("at cyclic letter " + std::to_string(i + 1) + ": " + why);
  }
  for (size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (size_t i = 0; i < n && periodic; ++i) periodic = letters[i] == letters[(i + d) % n];
    if (periodic) throw StringError("band is not primitive");
  }
  // Canonical representative: lexicographically least rotation of the word
  // or its inverse.
  std::vector<Letter> best;
  for (int flip = 0; flip < 2; ++flip) {
    std::vector<Letter> w = flip ? invert_letters(letters) : letters;
    for (size_t r = 0; r < n; ++r) {
      std::vector<Letter> rot(w.begin() + r, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + r);
      if (best.empty() || rot < best) best = std::move(rot);
    }
  }
  BandWord b;
  b.letters_ = std::move(best);
  for (const Letter& l : b.letters_) b.vseq_.push_back(letter_source(q, l));
  return b;
}

BandWord parse_band(const GentleQuiver& q, const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; }),
          s.end());
  if (s.rfind("band[", 0) != 0 || s.back() != ']')
    throw StringError("expected band[...] in '" + text + "'");
  StringWord inner = parse_string(q, s.substr(5, s.size() - 6));
  return validate_band(q, inner.letters());
}

std::string format_band(const GentleQuiver& q, const BandWord& b) {
  std::string out = "band[";
  for (size_t i = 0; i < b.length(); ++i) {
    if (i) out += '.';
    if (b.letters()[i].inverse) out += '~';
    out += q.arrow(b.letters()[i].arrow).name;
  }
  return out + "]";
}

Truncation truncate(const GentleQuiver& q, const StringWord& p, int r, int s) {
  (void)q;
  const int m = static_cast<int>(p.positions());
  if (r < 0 || r > m + 1 || s < 0 || s > m + 1)
    throw StringError("truncation index out of range");
  return Truncation{p, r, s};
}

std::optional<StringWord> completion(const GentleQuiver& q, const Truncation& t) {
  if (t.trivial()) return std::nullopt;
  const int m = static_cast<int>(t.base.positions());
  int lo = std::max(t.r, 1);
  int hi = std::min(t.s, m);
  if (lo > hi) return std::nullopt;
  return substring(q, t.base, static_cast<size_t>(lo - 1), static_cast<size_t>(hi - 1));
}

StringWord substring(const GentleQuiver& q, const StringWord& w, size_t lo, size_t hi) {
  if (lo > hi || hi >= w.positions()) throw StringError("substring range out of bounds");
  if (lo == hi) return trivial_string(q, w.vertex(lo));
  std::vector<Letter> letters(w.letters().begin() + lo, w.letters().begin() + hi);
  return validate_string(q, letters);
}

std::vector<StringWord> enumerate_strings(const GentleQuiver& q, int max_len) {
  std::set<StringWord> seen;
  for (VertexId v = 0; v < q.vertex_count(); ++v) seen.insert(trivial_string(q, v));
  std::vector<std::vector<Letter>> frontier;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    frontier.push_back({Letter{a, false}});
    frontier.push_back({Letter{a, true}});
  }
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<std::vector<Letter>> next;
    for (auto& word : frontier) {
      seen.insert(validate_string(q, word));
      if (len == max_len) continue;
      VertexId end = letter_target(q, word.back());
      for (ArrowId a : q.arrows_out(end)) {
        Letter l{a, false};
        if (pair_violation(q, word.back(), l).empty()) {
          auto w2 = word;
          w2.push_back(l);
          next.push_back(std::move(w2));
        }
      }
      for (ArrowId a : q.arrows_in(end)) {
        Letter l{a, true};
        if (pair_violation(q, word.back(), l).empty()) {
          auto w2 = word;
          w2.push_back(l);
          next.push_back(std::move(w2));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<BandWord> enumerate_bands(const GentleQuiver& q, int max_len) {
  std::set<BandWord> seen;
  std::vector<std::vector<Letter>> frontier;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) frontier.push_back({Letter{a, false}});
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<std::vector<Letter>> next;
    for (auto& word : frontier) {
      // Close up when the walk returns to its start and the wrap pair is
      // admissible.
      if (word.size() >= 2 && letter_target(q, word.back()) == letter_source(q, word.front()) &&
          pair_violation(q, word.back(), word.front()).empty()) {
        bool has_direct = false, has_inverse = false;
        for (const Letter& l : word) (l.inverse ? has_inverse : has_direct) = true;
        if (has_direct && has_inverse) {
          try {
            seen.insert(validate_band(q, word));
          } catch (const StringError&) {
            // imprimitive closure; skip
          }
        }
      }
      if (len == max_len) continue;
      VertexId end = letter_target(q, word.back());
      for (ArrowId a : q.arrows_out(end)) {
        Letter l{a, false};
        if (pair_violation(q, word.back(), l).empty()) {
          auto w2 = word;
          w2.push_back(l);
          next.push_back(std::move(w2));
        }
      }
      for (ArrowId a : q.arrows_in(end)) {
        Letter l{a, true};
        if (pair_violation(q, word.back(), l).empty()) {
          auto w2 = word;
          w2.push_back(l);
          next.push_back(std::move(w2));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::map<VertexId, int> string_dim_vector(const StringWord& w) {
  std::map<VertexId, int> dims;
  for (VertexId v : w.vertex_seq()) ++dims[v];
  return dims;
}

}  // namespace gentlekit
