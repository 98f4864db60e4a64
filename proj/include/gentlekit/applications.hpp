#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "gentlekit/cohomology.hpp"
#include "gentlekit/complex.hpp"
#include "gentlekit/resolution.hpp"

namespace gentlekit {

/// Census certificate for the cohomological-length gap check: hl values
/// achieved by all canonical homotopy strings/bands of bounded length.
struct HlCertificate {
  std::string algebra;
  int max_len = 0;
  std::map<int, std::string> achieved;  // hl value -> witnessing object
  int max_hl = 0;
  bool gap_free = false;
  int strings_checked = 0;
  int bands_checked = 0;
};

/// Ext^d(M, A) != 0 witness.
struct ExtWitness {
  std::string descriptor;
  int degree = 0;
  int dimension = 0;
  int window = 0;
};

struct HlReduction {
  ProjectiveComplex complex;
  std::optional<HomotopyString> hstring;  // set when the result is a string complex
  CohomologyReport cohomology;
  std::string move;  // which surgery produced it
};

/// All canonical homotopy strings with at most max_letters letters.
std::vector<HomotopyString> enumerate_homotopy_strings(const GentleQuiver& q, int max_letters);
/// All canonical homotopy bands with at most max_letters letters.
std::vector<HomotopyBand> enumerate_homotopy_bands(const GentleQuiver& q, int max_letters);

/// A complex with cohomological length exactly hl(X(h)) - 1, found by the
/// end surgeries on the walk (sub-walks and end-letter shortenings), with a
/// bounded census search as fallback. Requires hl >= 2.
HlReduction reduce_hl(const GentleQuiver& q, const HomotopyString& h);
/// Band-complex variant: winds a string complex past hl(X(b, J)) along the
/// band, then walks it down one step at a time.
HlReduction reduce_hl(const GentleQuiver& q, const BandWord& b, const JordanDatum& j);

/// A string-type homotopy string winding along the band often enough that
/// its cohomological length reaches at least `target`.
HomotopyString band_big_hl(const GentleQuiver& q, const BandWord& b, int target);

HlCertificate no_gaps_census(const GentleQuiver& q, int max_len,
                             const std::string& algebra_name = "algebra");

/// dim_k Ext^d(M, A) for a string module via the windowed projective
/// resolution, or for a band module via its two-term resolution.
int ext_dim(const GentleQuiver& q, const StringWord& c, int d);
int ext_dim(const GentleQuiver& q, const BandWord& b, const JordanDatum& j, int d);

/// The minimal d with Ext^d(M, A) != 0. Searches the full resolution for
/// finite projective dimension and preperiod + 2 periods for infinite; a
/// fully vanishing window is a hard failure.
ExtWitness nakayama_witness(const GentleQuiver& q, const StringWord& c);
ExtWitness nakayama_witness(const GentleQuiver& q, const BandWord& b, const JordanDatum& j);

nlohmann::json certificate_to_json(const HlCertificate& c);

/// Worker cap from GENTLEKIT_THREADS (default: hardware concurrency, at
/// most 8).
int worker_count();

}  // namespace gentlekit
