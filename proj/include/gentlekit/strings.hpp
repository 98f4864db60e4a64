#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gentlekit/quiver.hpp"

namespace gentlekit {

class StringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One step of a walk: an arrow taken with or against its orientation.
struct Letter {
  ArrowId arrow = kNone;
  bool inverse = false;

  friend bool operator==(const Letter&, const Letter&) = default;
  /// Inverse letters sort before direct ones at the same arrow; this order
  /// fixes the canonical representative of strings and bands.
  friend auto operator<=>(const Letter& a, const Letter& b) {
    if (a.arrow != b.arrow) return a.arrow <=> b.arrow;
    return (a.inverse ? 0 : 1) <=> (b.inverse ? 0 : 1);
  }
};

/// A string: reduced I-avoiding walk, canonicalized so that a word and its
/// inverse are the same value. A trivial string carries its vertex.
class StringWord {
 public:
  StringWord() = default;

  size_t length() const { return letters_.size(); }
  size_t positions() const { return vseq_.size(); }
  VertexId vertex(size_t i) const { return vseq_[i]; }
  const std::vector<VertexId>& vertex_seq() const { return vseq_; }
  const std::vector<Letter>& letters() const { return letters_; }

  friend bool operator==(const StringWord&, const StringWord&) = default;
  friend auto operator<=>(const StringWord&, const StringWord&) = default;

 private:
  std::vector<Letter> letters_;
  std::vector<VertexId> vseq_;

  friend StringWord validate_string(const GentleQuiver& q, const std::vector<Letter>& letters,
                                    VertexId base);
  friend class BandWord;
};

/// Validates the gentle string conditions and returns the canonical
/// representative. `base` is required only for the empty word. Throws
/// StringError naming the first violated condition.
StringWord validate_string(const GentleQuiver& q, const std::vector<Letter>& letters,
                           VertexId base = kNone);

StringWord trivial_string(const GentleQuiver& q, VertexId v);

/// Parses the string notation: letters separated by '.', '~' marking an
/// inverse letter, `e(<vertex>)` for trivial strings.
StringWord parse_string(const GentleQuiver& q, const std::string& text);
std::string format_string(const GentleQuiver& q, const StringWord& w);

std::vector<size_t> top_positions(const StringWord& w);
std::vector<size_t> soc_positions(const StringWord& w);

/// The string of the indecomposable projective P(v): both maximal paths out
/// of v glued at their common top.
StringWord projective_string(const GentleQuiver& q, VertexId v);

/// Position (0-based, in canonical orientation) of the top of
/// projective_string(q, v).
size_t projective_top_position(const GentleQuiver& q, VertexId v);

/// A primitive cyclic string with at least one direct and one inverse
/// letter, canonical under rotation and inversion.
class BandWord {
 public:
  BandWord() = default;

  size_t length() const { return letters_.size(); }
  VertexId vertex(size_t i) const { return vseq_[i % vseq_.size()]; }
  const std::vector<VertexId>& vertex_seq() const { return vseq_; }
  const std::vector<Letter>& letters() const { return letters_; }

  friend bool operator==(const BandWord&, const BandWord&) = default;
  friend auto operator<=>(const BandWord&, const BandWord&) = default;

 private:
  std::vector<Letter> letters_;   // letter i runs vseq_[i] -> vseq_[i+1 mod n]
  std::vector<VertexId> vseq_;

  friend BandWord validate_band(const GentleQuiver& q, const std::vector<Letter>& letters);
};

BandWord validate_band(const GentleQuiver& q, const std::vector<Letter>& letters);
BandWord parse_band(const GentleQuiver& q, const std::string& text);
std::string format_band(const GentleQuiver& q, const BandWord& b);

/// Truncation tru_r^s(p) of a projective string, cut indices 0 <= r, s <=
/// m+1 with the convention of the completion keeping positions r..s
/// (clipped to 1..m); trivial exactly when r > s. Indices refer to 1-based
/// positions of the canonical orientation of `base`.
struct Truncation {
  StringWord base;
  int r = 1;
  int s = 0;

  bool trivial() const { return r > s; }
};

Truncation truncate(const GentleQuiver& q, const StringWord& p, int r, int s);

/// The permissible curve with the same arc segments: the substring of the
/// base on positions max(r,1)..min(s,m). Nullopt for trivial truncations.
std::optional<StringWord> completion(const GentleQuiver& q, const Truncation& t);

/// Substring of w on positions lo..hi (0-based, inclusive).
StringWord substring(const GentleQuiver& q, const StringWord& w, size_t lo, size_t hi);

class HomotopyString;  // defined in homotopy.hpp

/// Glues adjacent nontrivial truncations that share a connecting arc
/// segment and completes each glued run. Without a glue context only
/// same-base truncations with adjacent position ranges are glued; with a
/// homotopy-string context the parts must be the per-crossing cohomological
/// truncations in walk order and gluing follows the crossing structure.
std::vector<StringWord> supplemental_union(const GentleQuiver& q,
                                           const std::vector<Truncation>& parts,
                                           const HomotopyString* glue_context = nullptr);

/// All canonical strings with at most max_len letters.
std::vector<StringWord> enumerate_strings(const GentleQuiver& q, int max_len);
/// All canonical bands with at most max_len letters.
std::vector<BandWord> enumerate_bands(const GentleQuiver& q, int max_len);

/// Dimension vector of M(w): number of positions per vertex.
std::map<VertexId, int> string_dim_vector(const StringWord& w);

}  // namespace gentlekit
