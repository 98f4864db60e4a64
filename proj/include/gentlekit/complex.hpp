#pragma once

#include <map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gentlekit/homotopy.hpp"
#include "gentlekit/matrix.hpp"
#include "gentlekit/modules.hpp"

namespace gentlekit {

/// One indecomposable projective summand P(vertex) placed in a degree; for
/// band complexes the summand carries multiplicity (Jordan size).
struct Summand {
  VertexId vertex = kNone;
  int multiplicity = 1;
};

/// Differential entry: the map from summand `src` in degree `deg` to
/// summand `dst` in degree deg+1, given by left multiplication with `path`
/// tensored with the coefficient block (1x1 for string complexes).
struct DiffEntry {
  int deg = 0;
  int src = 0;  // index into components(deg)
  int dst = 0;  // index into components(deg + 1)
  Path path;
  QMatrix coeff;
};

/// Per-degree direct sums of indecomposable projectives with path-labelled
/// differential entries.
class ProjectiveComplex {
 public:
  const std::map<int, std::vector<Summand>>& components() const { return comps_; }
  const std::vector<DiffEntry>& entries() const { return entries_; }

  void add_summand(int deg, VertexId v, int multiplicity = 1);
  void add_entry(DiffEntry e);

  /// Total dimension of the degree-n component (paths times multiplicity).
  int component_dim(const GentleQuiver& q, int deg) const;
  std::map<VertexId, int> component_vertex_dims(int deg) const;

 private:
  std::map<int, std::vector<Summand>> comps_;
  std::vector<DiffEntry> entries_;
};

/// Exact-rational realization: one matrix D^n per degree with vertex-graded
/// path bases of each projective summand.
class MatrixComplex {
 public:
  explicit MatrixComplex(const GentleQuiver& q, const ProjectiveComplex& p);

  /// d compose d must vanish; throws otherwise.
  void check_differential() const;

  int min_degree() const { return min_deg_; }
  int max_degree() const { return max_deg_; }
  int space_dim(int deg) const;
  /// D^deg : space(deg) -> space(deg + 1); basis vectors are rows.
  const QMatrix& differential(int deg) const;
  /// Dimension of the vertex-w graded piece of H^deg.
  std::map<VertexId, int> cohomology_dims(int deg) const;

 private:
  const GentleQuiver& q_;
  int min_deg_ = 0, max_deg_ = -1;
  // per degree: flattened basis (summand, path-in-P(v), copy), vertex-graded
  std::map<int, std::vector<VertexId>> basis_vertex_;
  std::map<int, QMatrix> diff_;

  QMatrix vertex_block(int deg, VertexId v) const;
};

/// Per-degree cohomology dims plus, for the truncation method, the string
/// decomposition; hl is the maximum total dimension over all degrees.
struct CohomologyReport {
  std::map<int, std::map<VertexId, int>> dims;
  std::map<int, std::vector<StringWord>> strings;  // present for the truncation method
  int hl = 0;
};

ProjectiveComplex assemble(const GentleQuiver& q, const HomotopyString& h);
ProjectiveComplex assemble(const GentleQuiver& q, const HomotopyBand& b, const JordanDatum& j);

/// Exact linear-algebra cohomology of an assembled complex. Checks d∘d = 0.
CohomologyReport cohomology_oracle(const GentleQuiver& q, const ProjectiveComplex& p);

int hl(const CohomologyReport& report);
int hl(const GentleQuiver& q, const ProjectiveComplex& p);

/// The deleted projective resolution of M(c) truncated to degrees
/// [-window, 0].
ProjectiveComplex resolve_to_complex(const GentleQuiver& q, const StringWord& c, int window);

nlohmann::json report_to_json(const GentleQuiver& q, const CohomologyReport& r);

}  // namespace gentlekit
