#pragma once

#include <map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gentlekit/matrix.hpp"
#include "gentlekit/quiver.hpp"
#include "gentlekit/strings.hpp"

namespace gentlekit {

/// Jordan block datum for band modules: size n >= 1 and eigenvalue
/// lambda != 0.
struct JordanDatum {
  int n = 1;
  Rat lambda = 1;
};

/// Finite-dimensional right module as a representation: a space per vertex
/// and a matrix per arrow mapping the space at s(a) into the space at t(a).
/// Basis vectors are rows; mat(a) has shape dims[s(a)] x dims[t(a)].
class Representation {
 public:
  Representation() = default;
  Representation(const GentleQuiver& q, std::map<VertexId, int> dims,
                 std::map<ArrowId, QMatrix> mats);

  int dim(VertexId v) const;
  int total_dim() const;
  const std::map<VertexId, int>& dims() const { return dims_; }
  const QMatrix& mat(ArrowId a) const { return mats_.at(a); }

  /// dim of M / rad M per vertex (cokernels of the incoming arrow maps).
  std::map<VertexId, int> top_dims(const GentleQuiver& q) const;

 private:
  std::map<VertexId, int> dims_;
  std::map<ArrowId, QMatrix> mats_;
};

Representation string_to_module(const GentleQuiver& q, const StringWord& w);
Representation band_to_module(const GentleQuiver& q, const BandWord& b, const JordanDatum& j);

std::map<VertexId, int> dim_vector(const Representation& m);

struct ProjectiveCover {
  std::vector<VertexId> cover;        // one P(v) per top position, in walk order
  std::vector<StringWord> kernel;     // syzygy strings Q_L, interior socles, Q_R
};

/// Projective cover of M(c) and its kernel as a list of strings, computed
/// combinatorially: each interior socle contributes the full projective
/// string at its vertex, each end contributes the uniserial module hanging
/// past the end after one more arrow (when that arrow exists).
ProjectiveCover projective_cover(const GentleQuiver& q, const StringWord& c);

/// dim_k Hom_A(M, N) by solving the intertwining equations exactly.
int hom_dim(const GentleQuiver& q, const Representation& m, const Representation& n);

/// The regular module A as a representation (direct sum of all P(v)).
Representation regular_representation(const GentleQuiver& q);

nlohmann::json representation_to_json(const GentleQuiver& q, const Representation& m);

}  // namespace gentlekit
