#pragma once

#include <string>

#include "gentlekit/quiver.hpp"

namespace testsupport {

inline gentlekit::GentleQuiver nine_algebra() {
  return gentlekit::parse_quiver(R"(
vertex 1
vertex 2
vertex 3
vertex 4
vertex 5
vertex 6
vertex 7
vertex 8
vertex 9
arrow a1 : 1 -> 2
arrow a2 : 2 -> 3
arrow a3 : 4 -> 3
arrow a4 : 4 -> 5
arrow a5 : 5 -> 6
arrow a6 : 7 -> 6
arrow a7 : 8 -> 7
arrow a8 : 9 -> 8
arrow a9 : 1 -> 9
rel a1 a2
rel a4 a5
rel a9 a8
rel a8 a7
)");
}

inline gentlekit::GentleQuiver kronecker() {
  return gentlekit::parse_quiver(R"(
vertex 1
vertex 2
arrow a : 1 -> 2
arrow b : 1 -> 2
)");
}

inline gentlekit::GentleQuiver cycle3() {
  return gentlekit::parse_quiver(R"(
vertex 1
vertex 2
vertex 3
arrow a : 1 -> 2
arrow b : 2 -> 3
arrow c : 3 -> 1
rel a b
rel b c
rel c a
)");
}

/// The admissible curve of the first worked example: ten crossings, top
/// degree zero.
inline const char* kCTilde =
    "[-1] ~a1 [0] a9 [-1] a8 [-2] a7.a6 [-3] ~a5 [-2] ~a4 [-1] a3 [-2] ~a2 [-1] ~a1 [0]";

}  // namespace testsupport
