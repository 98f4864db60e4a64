#pragma once

#include "gentlekit/homotopy.hpp"
#include "gentlekit/strings.hpp"

namespace gentlekit {

/// Tail of a projective resolution past one end of the string: the arrows
/// e_0, e_1, ... with e_{t+1} = rel_next(e_t); consecutive tail arrows
/// compose into the ideal. `period_start` is set when the arrows repeat
/// (infinite projective dimension), giving the index of the first repeated
/// step.
struct ResolutionTail {
  std::vector<ArrowId> steps;
  std::optional<int> period_start;
};

ResolutionTail resolution_tail(const GentleQuiver& q, const StringWord& c, bool right_side);

/// The syzygy string hanging at tail step t (0-based): the uniserial module
/// with top t(e_t) descending along the non-relation continuations of e_t.
StringWord tail_syzygy_string(const GentleQuiver& q, const ResolutionTail& tail, int t);

/// The rotation of a string: the homotopy string of the deleted projective
/// resolution of M(c), degrees normalized so the top degree is 0. Infinite
/// tails are stored up to preperiod plus one period and marked with
/// PeriodicTail; window_resolution unrolls them.
HomotopyString rotate(const GentleQuiver& q, const StringWord& c);

/// The resolution homotopy string truncated to degrees >= -window.
HomotopyString window_resolution(const GentleQuiver& q, const StringWord& c, int window);

/// The homotopy band of the projective resolution of the band module
/// B(b, J): same cyclic word with letters regrouped into maximal paths,
/// degrees in {-1, 0}.
HomotopyBand band_resolution(const GentleQuiver& q, const BandWord& b);

}  // namespace gentlekit
