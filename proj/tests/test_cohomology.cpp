#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gentlekit/applications.hpp"
#include "gentlekit/cohomology.hpp"
#include "gentlekit/random_gentle.hpp"
#include "gentlekit/resolution.hpp"
#include "test_support.hpp"

using namespace gentlekit;

namespace {

std::map<std::string, int> named(const GentleQuiver& q, const std::map<VertexId, int>& dims) {
  std::map<std::string, int> out;
  for (auto& [v, d] : dims) out[q.vertex_name(v)] = d;
  return out;
}

}  // namespace

TEST_CASE("homotopy string parsing rejects bad input") {
  GentleQuiver q = testsupport::nine_algebra();
  // degree annotations must follow the letter directions
  CHECK_THROWS_WITH_AS(parse_homotopy_string(q, "[0] a9 [1]"),
                       doctest::Contains("contradicts"), StringError);
  // consecutive direct letters must compose into the ideal
  CHECK_THROWS_AS(parse_homotopy_string(q, "[0] a7 [-1] a6 [-2]"), StringError);
  CHECK_NOTHROW(parse_homotopy_string(q, "[0] a7.a6 [-1]"));
  CHECK_NOTHROW(parse_homotopy_string(q, "[2] @5"));
  CHECK_THROWS_AS(parse_homotopy_string(q, "[0] a9 [-1] ~a9 [0]"), StringError);
}

TEST_CASE("golden curve: oracle cohomology") {
  GentleQuiver q = testsupport::nine_algebra();
  HomotopyString h = parse_homotopy_string(q, testsupport::kCTilde);
  REQUIRE(h.crossings() == 10);

  CohomologyReport r = cohomology_oracle(q, assemble(q, h));
  CHECK(r.dims.count(-3) == 0);
  CHECK(named(q, r.dims.at(-2)) == std::map<std::string, int>{{"7", 1}, {"6", 1}});
  CHECK(named(q, r.dims.at(-1)) == std::map<std::string, int>{{"3", 2}, {"4", 1}});
  CHECK(named(q, r.dims.at(0)) == std::map<std::string, int>{{"1", 2}, {"9", 1}});
  CHECK(r.hl == 3);
}

TEST_CASE("golden curve: truncation cohomology with string decomposition") {
  GentleQuiver q = testsupport::nine_algebra();
  HomotopyString h = parse_homotopy_string(q, testsupport::kCTilde);
  CohomologyReport r = cohomology_truncation(q, h);

  CHECK(named(q, r.dims.at(-2)) == std::map<std::string, int>{{"7", 1}, {"6", 1}});
  CHECK(named(q, r.dims.at(-1)) == std::map<std::string, int>{{"3", 2}, {"4", 1}});
  CHECK(named(q, r.dims.at(0)) == std::map<std::string, int>{{"1", 2}, {"9", 1}});
  CHECK(r.hl == 3);

  // degree -1 decomposes as the simple 3 plus the string 4 over 3
  std::multiset<StringWord> deg1(r.strings.at(-1).begin(), r.strings.at(-1).end());
  CHECK(deg1 == std::multiset<StringWord>{trivial_string(q, *q.find_vertex("3")),
                                          parse_string(q, "a3")});
  // degree -2 is the string 7 over 6
  std::multiset<StringWord> deg2(r.strings.at(-2).begin(), r.strings.at(-2).end());
  CHECK(deg2 == std::multiset<StringWord>{parse_string(q, "a6")});
  // degree 0 is the simple 1 plus the string 1 over 9
  std::multiset<StringWord> deg0(r.strings.at(0).begin(), r.strings.at(0).end());
  CHECK(deg0 == std::multiset<StringWord>{trivial_string(q, *q.find_vertex("1")),
                                          parse_string(q, "a9")});
}

TEST_CASE("golden curve: cohomological curves per crossing") {
  GentleQuiver q = testsupport::nine_algebra();
  HomotopyString h = parse_homotopy_string(q, testsupport::kCTilde);
  auto curves = cohomology_curves(q, h);

  // crossing 0 at degree -1 contributes the simple 3 as a truncation of the
  // projective string of 2, open toward the curve end
  const auto& deg1 = curves.at(-1);
  REQUIRE(deg1.size() == 4);
  CHECK(deg1[0].crossing == 0);
  auto c0 = completion(q, deg1[0].tru);
  REQUIRE(c0.has_value());
  CHECK(*c0 == trivial_string(q, *q.find_vertex("3")));

  // the crossing at vertex 9 has a trivial cohomological curve
  CHECK(deg1[1].crossing == 2);
  CHECK(deg1[1].tru.trivial());

  // stalks carry the full truncation
  HomotopyString stalk = validate_homotopy_string(q, {}, *q.find_vertex("4"), 0);
  auto scurves = cohomology_curves(q, stalk);
  auto sc = completion(q, scurves.at(0)[0].tru);
  REQUIRE(sc.has_value());
  CHECK(*sc == projective_string(q, *q.find_vertex("4")));
  CHECK(scurves.at(0)[0].tru.r == 0);
}

TEST_CASE("vanishing criterion: oracle zero iff all curves trivial") {
  GentleQuiver q = testsupport::nine_algebra();
  int checked = 0;
  for (const HomotopyString& h : enumerate_homotopy_strings(q, 3)) {
    CohomologyReport oracle = cohomology_oracle(q, assemble(q, h));
    auto curves = cohomology_curves(q, h);
    for (auto& [deg, list] : curves) {
      bool all_trivial = std::all_of(list.begin(), list.end(),
                                     [](const CohomCurve& c) { return c.tru.trivial(); });
      bool oracle_zero = oracle.dims.count(deg) == 0;
      CHECK(all_trivial == oracle_zero);
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("oracle and truncation methods agree exhaustively") {
  for (GentleQuiver q : {testsupport::nine_algebra(), testsupport::kronecker(),
                         testsupport::cycle3()}) {
    for (const HomotopyString& h : enumerate_homotopy_strings(q, 5)) {
      CohomologyReport a = cohomology_oracle(q, assemble(q, h));
      CohomologyReport b = cohomology_truncation(q, h);
      CHECK(a.dims == b.dims);
      CHECK(a.hl == b.hl);
    }
  }
}

TEST_CASE("oracle and truncation methods agree on random longer strings") {
  std::mt19937_64 rng(20240817);
  int done = 0;
  while (done < 120) {
    GentleQuiver q = random_gentle(rng(), 6, 8);
    auto all = enumerate_homotopy_strings(q, 6);
    if (all.empty()) continue;
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    for (int i = 0; i < 5 && done < 120; ++i, ++done) {
      const HomotopyString& h = all[pick(rng)];
      CohomologyReport a = cohomology_oracle(q, assemble(q, h));
      CohomologyReport b = cohomology_truncation(q, h);
      CHECK(a.dims == b.dims);
    }
  }
}

TEST_CASE("round trip: cohomology of a rotation recovers the string") {
  for (GentleQuiver q : {testsupport::nine_algebra(), testsupport::kronecker()}) {
    for (const StringWord& w : enumerate_strings(q, 5)) {
      HomotopyString h = window_resolution(q, w, 8);
      CohomologyReport r = cohomology_truncation(q, h);
      REQUIRE(r.strings.count(0));
      REQUIRE(r.strings.at(0).size() == 1);
      CHECK(r.strings.at(0)[0] == w);
      for (auto& [deg, strs] : r.strings)
        if (deg != 0 && deg > -8) CHECK(strs.empty());
    }
  }
}

TEST_CASE("supplemental union with a glue context") {
  GentleQuiver q = testsupport::nine_algebra();
  HomotopyString h = parse_homotopy_string(q, testsupport::kCTilde);
  std::vector<Truncation> parts;
  auto curves = cohomology_curves(q, h);
  std::map<size_t, Truncation> by_crossing;
  for (auto& [deg, list] : curves)
    for (const CohomCurve& c : list) by_crossing[c.crossing] = c.tru;
  for (size_t i = 0; i < h.crossings(); ++i) parts.push_back(by_crossing.at(i));
  auto strings = supplemental_union(q, parts, &h);
  CHECK(strings.size() == 5);  // 1, 1/9, 3, 4/3, 7/6 across the three degrees
}

TEST_CASE("caller-provided degree shifts are preserved") {
  GentleQuiver q = testsupport::nine_algebra();
  HomotopyString shifted = parse_homotopy_string(q, "[7] a9 [6]");
  CohomologyReport oracle = cohomology_oracle(q, assemble(q, shifted));
  CohomologyReport trunc = cohomology_truncation(q, shifted);
  CHECK(oracle.dims == trunc.dims);
  for (auto& [deg, dims] : oracle.dims) CHECK((deg == 7 || deg == 6));
  CHECK(oracle.dims.count(7) == 1);
}

TEST_CASE("two-crossing complexes have indecomposable cohomology per degree") {
  GentleQuiver q = testsupport::nine_algebra();
  for (const HomotopyString& h : enumerate_homotopy_strings(q, 1)) {
    if (h.crossings() != 2) continue;
    CohomologyReport r = cohomology_truncation(q, h);
    for (auto& [deg, strs] : r.strings) CHECK(strs.size() == 1);
  }
}

TEST_CASE("band complexes are never exact") {
  for (GentleQuiver q : {testsupport::kronecker(), random_gentle(0xfeed, 7, 10, true),
                         random_gentle(0xf00d, 7, 10, true)}) {
    for (const BandWord& b : enumerate_bands(q, 4)) {
      for (const HomotopyBand& hb : {band_resolution(q, b)}) {
        CohomologyReport r = cohomology_oracle(q, assemble(q, hb, JordanDatum{1, 1}));
        CHECK(r.hl > 0);
      }
    }
    for (const HomotopyBand& hb : enumerate_homotopy_bands(q, 4)) {
      for (int n : {1, 2}) {
        CohomologyReport r = cohomology_oracle(q, assemble(q, hb, JordanDatum{n, 1}));
        CHECK(r.hl > 0);
      }
    }
  }
}

TEST_CASE("hl of stalks and the kronecker winding") {
  GentleQuiver q = testsupport::nine_algebra();
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    HomotopyString stalk = validate_homotopy_string(q, {}, v, 0);
    CHECK(hl(q, assemble(q, stalk)) ==
          string_to_module(q, projective_string(q, v)).total_dim());
  }

  GentleQuiver k = testsupport::kronecker();
  BandWord b = parse_band(k, "band[a.~b]");
  for (int lam : {1, 2}) {
    CohomologyReport r = cohomology_oracle(k, assemble(k, band_resolution(k, b),
                                                       JordanDatum{2, lam}));
    CHECK(r.hl == 4);
  }
}
