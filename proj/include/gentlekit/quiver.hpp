#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace gentlekit {

using VertexId = int;
using ArrowId = int;
inline constexpr int kNone = -1;

struct Arrow {
  std::string name;
  VertexId source = kNone;
  VertexId target = kNone;
};

/// Raised by quiver parsing/validation. `clause` names the violated part of
/// the gentle-quiver definition so callers can report it verbatim.
class QuiverError : public std::runtime_error {
 public:
  QuiverError(std::string clause, const std::string& message)
      : std::runtime_error(message), clause_(std::move(clause)) {}
  const std::string& clause() const { return clause_; }

 private:
  std::string clause_;
};

/// A path in the quiver avoiding the relation ideal. An empty path carries
/// its base vertex.
struct Path {
  VertexId base = kNone;
  std::vector<ArrowId> arrows;

  size_t length() const { return arrows.size(); }
  bool trivial() const { return arrows.empty(); }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Bound quiver (Q, I) with quadratic monomial relations, validated gentle
/// and finite-dimensional at construction. Ties between the two arrows at a
/// vertex are broken by declaration order throughout.
class GentleQuiver {
 public:
  /// Builds and validates; throws QuiverError naming the violated clause.
  GentleQuiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows,
               std::vector<std::pair<ArrowId, ArrowId>> relations);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  const Arrow& arrow(ArrowId a) const { return arrows_[a]; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;

  const std::vector<ArrowId>& arrows_out(VertexId v) const { return out_[v]; }
  const std::vector<ArrowId>& arrows_in(VertexId v) const { return in_[v]; }

  bool in_ideal(ArrowId a, ArrowId b) const;

  /// The unique arrow b with s(b) = t(a) and ab not in I, or kNone.
  ArrowId nonrel_next(ArrowId a) const { return nonrel_next_[a]; }
  /// The unique arrow b with s(b) = t(a) and ab in I, or kNone.
  ArrowId rel_next(ArrowId a) const { return rel_next_[a]; }
  ArrowId nonrel_prev(ArrowId b) const { return nonrel_prev_[b]; }
  ArrowId rel_prev(ArrowId b) const { return rel_prev_[b]; }

  VertexId path_source(const Path& p) const;
  VertexId path_target(const Path& p) const;
  bool path_valid(const Path& p) const;
  std::string format_path(const Path& p) const;

  const std::vector<std::pair<ArrowId, ArrowId>>& relations() const { return relations_; }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Arrow> arrows_;
  std::vector<std::pair<ArrowId, ArrowId>> relations_;
  std::vector<std::vector<ArrowId>> out_, in_;
  std::vector<ArrowId> nonrel_next_, rel_next_, nonrel_prev_, rel_prev_;

  void validate();
};

/// Parses the line-oriented quiver format:
///   vertex <name>
///   arrow <name> : <src> -> <tgt>
///   rel <arrow1> <arrow2>
/// with `#` comments.
GentleQuiver parse_quiver(const std::string& text);

GentleQuiver quiver_from_json(const nlohmann::json& j);
nlohmann::json quiver_to_json(const GentleQuiver& q);

/// pq when composable and avoiding I, nullopt otherwise.
std::optional<Path> compose(const GentleQuiver& q, const Path& p1, const Path& p2);

/// The maximal I-avoiding path starting at v through the slot-th outgoing
/// arrow (declaration order). Returns e_v when v has no such arrow.
Path maximal_path_from(const GentleQuiver& q, VertexId v, int slot);

/// All I-avoiding paths of length <= max_len, ordered by (source, length,
/// arrow sequence). With max_len >= arrow_count() this is a basis of A.
std::vector<Path> enumerate_paths(const GentleQuiver& q, int max_len);

}  // namespace gentlekit
