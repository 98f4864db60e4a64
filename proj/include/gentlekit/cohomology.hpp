#pragma once

#include "gentlekit/complex.hpp"
#include "gentlekit/homotopy.hpp"
#include "gentlekit/strings.hpp"

namespace gentlekit {

/// The cohomological curve at one crossing: a truncation of the projective
/// string of the crossing vertex.
struct CohomCurve {
  size_t crossing = 0;
  Truncation tru;
};

/// Per-degree cohomological curves of a string-type homotopy string, one
/// per crossing (trivial truncations included).
std::map<int, std::vector<CohomCurve>> cohomology_curves(const GentleQuiver& q,
                                                         const HomotopyString& h);

/// Cohomology by the truncation method: per-crossing truncations of
/// projective strings glued by supplemental union, reported per degree as a
/// string decomposition with vertex-graded dimensions.
CohomologyReport cohomology_truncation(const GentleQuiver& q, const HomotopyString& h);

}  // namespace gentlekit
