#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gentlekit/modules.hpp"
#include "gentlekit/quiver.hpp"

namespace gentlekit {

/// A homotopy letter: a nontrivial I-avoiding path, walked with or against
/// its orientation. A direct letter from walk vertex v_i to v_{i+1} has its
/// path running v_i -> v_{i+1} and realizes the differential component
/// P(v_{i+1}) -> P(v_i); degrees step by -1 along direct letters and +1
/// along inverse ones.
struct HomotopyLetter {
  Path path;
  bool inverse = false;

  friend bool operator==(const HomotopyLetter&, const HomotopyLetter&) = default;
};

/// Marker for an eventually periodic resolution tail: starting preperiod
/// crossings into the tail, the tail letters repeat with the given period.
struct PeriodicTail {
  int preperiod = 0;
  int period = 1;
  std::vector<ArrowId> cycle;  // the repeating tail arrows, deepest step first
};

/// Walk of homotopy letters with one integer degree per walk vertex;
/// determines an indecomposable projective complex. Degrees are pinned by
/// the letter directions up to a global shift.
class HomotopyString {
 public:
  HomotopyString() = default;

  size_t crossings() const { return vseq_.size(); }
  size_t letter_count() const { return letters_.size(); }
  VertexId vertex(size_t i) const { return vseq_[i]; }
  int degree(size_t i) const { return degrees_[i]; }
  const std::vector<HomotopyLetter>& letters() const { return letters_; }
  const std::vector<VertexId>& vertex_seq() const { return vseq_; }
  const std::vector<int>& degrees() const { return degrees_; }

  /// Shifts all degrees so the maximum is 0.
  HomotopyString normalized() const;
  /// Representative invariant under walk reversal.
  HomotopyString canonical(const GentleQuiver& q) const;
  /// Sub-walk on crossings lo..hi (inclusive), degrees kept as-is.
  HomotopyString subwalk(size_t lo, size_t hi) const;

  std::optional<PeriodicTail> left_tail;
  std::optional<PeriodicTail> right_tail;

  friend bool operator==(const HomotopyString&, const HomotopyString&) = default;

 private:
  std::vector<HomotopyLetter> letters_;
  std::vector<VertexId> vseq_;
  std::vector<int> degrees_;

  friend HomotopyString validate_homotopy_string(const GentleQuiver& q,
                                                 const std::vector<HomotopyLetter>& letters,
                                                 VertexId base, int base_degree);
};

/// Validates the gentle homotopy-string conditions: letters are nontrivial
/// I-avoiding paths, adjacent same-direction letters compose into the
/// ideal, and turns use distinct arrows. `base`/`base_degree` seed the walk
/// (base is required only for the stalk case).
HomotopyString validate_homotopy_string(const GentleQuiver& q,
                                        const std::vector<HomotopyLetter>& letters,
                                        VertexId base = kNone, int base_degree = 0);

/// Text format: degree-bracketed walk, letters as dot-joined arrow names
/// with a leading '~' when walked against the path, e.g.
/// "[-1] ~a1 [0] a9 [-1]".  A stalk is "[0] @v" with v a vertex name.
HomotopyString parse_homotopy_string(const GentleQuiver& q, const std::string& text);
std::string format_homotopy_string(const GentleQuiver& q, const HomotopyString& h);

/// Cyclic homotopy string with degree closure; carries a Jordan datum slot
/// on one distinguished letter when assembled.
class HomotopyBand {
 public:
  HomotopyBand() = default;

  size_t crossings() const { return vseq_.size(); }
  VertexId vertex(size_t i) const { return vseq_[i % vseq_.size()]; }
  int degree(size_t i) const { return degrees_[i % degrees_.size()]; }
  const std::vector<HomotopyLetter>& letters() const { return letters_; }
  const std::vector<VertexId>& vertex_seq() const { return vseq_; }
  const std::vector<int>& degrees() const { return degrees_; }
  size_t distinguished_letter() const { return distinguished_; }

  friend bool operator==(const HomotopyBand&, const HomotopyBand&) = default;

 private:
  std::vector<HomotopyLetter> letters_;  // letter i runs vseq_[i] -> vseq_[i+1 mod n]
  std::vector<VertexId> vseq_;
  std::vector<int> degrees_;
  size_t distinguished_ = 0;

  friend HomotopyBand validate_homotopy_band(const GentleQuiver& q,
                                             const std::vector<HomotopyLetter>& letters);
};

/// Cyclic validation: all adjacent pairs (including the wrap) satisfy the
/// homotopy-string conditions, the degree steps sum to zero, and the word
/// is primitive. Degrees are normalized to maximum 0.
HomotopyBand validate_homotopy_band(const GentleQuiver& q,
                                    const std::vector<HomotopyLetter>& letters);

}  // namespace gentlekit
