#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gentlekit/complex.hpp"
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

std::map<int, int> component_dims(const GentleQuiver& q, const ProjectiveComplex& p) {
  std::map<int, int> out;
  for (auto& [deg, summands] : p.components()) {
    (void)summands;
    out[deg] = p.component_dim(q, deg);
  }
  return out;
}

}  // namespace

TEST_CASE("rotating the simple at 1 gives the displayed resolution") {
  GentleQuiver q = testsupport::nine_algebra();
  StringWord s1 = trivial_string(q, *q.find_vertex("1"));
  HomotopyString h = rotate(q, s1);
  CHECK(h.crossings() == 6);
  CHECK_FALSE(h.left_tail.has_value());
  CHECK_FALSE(h.right_tail.has_value());

  ProjectiveComplex p = assemble(q, h);
  CHECK(component_dims(q, p) ==
        std::map<int, int>{{-3, 2}, {-2, 4}, {-1, 4}, {0, 3}});

  CohomologyReport r = cohomology_oracle(q, p);
  CHECK(r.dims.size() == 1);
  CHECK(named(q, r.dims.at(0)) == std::map<std::string, int>{{"1", 1}});
}

TEST_CASE("rotating a projective string gives a stalk") {
  GentleQuiver q = testsupport::nine_algebra();
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    HomotopyString h = rotate(q, projective_string(q, v));
    CHECK(h.crossings() == 1);
    CHECK(h.vertex(0) == v);
    CHECK(h.degree(0) == 0);
  }
}

TEST_CASE("degree steps follow the letter directions") {
  GentleQuiver q = testsupport::nine_algebra();
  for (const StringWord& w : enumerate_strings(q, 4)) {
    HomotopyString h = rotate(q, w);
    int maxdeg = *std::max_element(h.degrees().begin(), h.degrees().end());
    CHECK(maxdeg == 0);
    for (size_t i = 0; i < h.letter_count(); ++i) {
      int step = h.letters()[i].inverse ? 1 : -1;
      CHECK(h.degree(i + 1) == h.degree(i) + step);
    }
  }
}

TEST_CASE("rotation is exact with the module in degree zero") {
  for (GentleQuiver q : {testsupport::nine_algebra(), testsupport::kronecker()}) {
    for (const StringWord& w : enumerate_strings(q, 4)) {
      CohomologyReport r = cohomology_oracle(q, resolve_to_complex(q, w, 6));
      auto expected = dim_vector(string_to_module(q, w));
      REQUIRE(r.dims.count(0));
      CHECK(r.dims.at(0) == expected);
      for (auto& [deg, dims] : r.dims)
        if (deg != 0 && deg > -6) CHECK(dims.empty());
    }
  }
}

TEST_CASE("periodic tail over the relation cycle") {
  GentleQuiver q = testsupport::cycle3();
  StringWord s1 = trivial_string(q, *q.find_vertex("1"));
  HomotopyString h = rotate(q, s1);
  // vertex 1 has a single outgoing arrow, so the resolution has one tail
  REQUIRE(h.left_tail.has_value());
  CHECK_FALSE(h.right_tail.has_value());
  CHECK(h.left_tail->period == 3);  // the cycle length
  CHECK(h.left_tail->preperiod == 0);

  // syzygy strings repeat with the period over three consecutive periods
  ResolutionTail tail = resolution_tail(q, s1, false);
  REQUIRE(tail.period_start.has_value());
  int t0 = *tail.period_start;
  int period = static_cast<int>(tail.steps.size()) - t0;
  CHECK(period == 3);
  for (int t = t0; t < t0 + 2 * period; ++t)
    CHECK(tail_syzygy_string(q, tail, t) == tail_syzygy_string(q, tail, t + period));

  // windows stay exact away from the cut
  CohomologyReport r = cohomology_oracle(q, resolve_to_complex(q, s1, 7));
  REQUIRE(r.dims.count(0));
  for (auto& [deg, dims] : r.dims)
    if (deg != 0 && deg > -7) CHECK(dims.empty());
}

TEST_CASE("pdim of the string 4 over 3 is two") {
  GentleQuiver q = testsupport::nine_algebra();
  HomotopyString h = rotate(q, parse_string(q, "a3"));
  CHECK(h.crossings() == 3);
  int lowest = *std::min_element(h.degrees().begin(), h.degrees().end());
  CHECK(lowest == -2);
}

TEST_CASE("band resolution of the kronecker band") {
  GentleQuiver k = testsupport::kronecker();
  BandWord b = parse_band(k, "band[a.~b]");
  HomotopyBand hb = band_resolution(k, b);
  CHECK(hb.crossings() == 2);
  std::multiset<int> degrees(hb.degrees().begin(), hb.degrees().end());
  CHECK(degrees == std::multiset<int>{-1, 0});

  for (int n : {1, 2}) {
    for (int lam : {1, 2}) {
      ProjectiveComplex p = assemble(k, hb, JordanDatum{n, lam});
      CohomologyReport r = cohomology_oracle(k, p);
      auto expected = dim_vector(band_to_module(k, b, JordanDatum{n, lam}));
      REQUIRE(r.dims.count(0));
      CHECK(r.dims.at(0) == expected);
      CHECK(r.dims.count(-1) == 0);  // projective dimension one
    }
  }
}

TEST_CASE("kronecker band differential carries identity and jordan blocks") {
  GentleQuiver k = testsupport::kronecker();
  BandWord b = parse_band(k, "band[a.~b]");
  Rat lambda = 5;
  MatrixComplex m(k, assemble(k, band_resolution(k, b), JordanDatum{2, lambda}));
  // P(2)^2 in degree -1 (basis e2 x two copies) maps to P(1)^2 in degree 0
  // (basis e1, a, b x two copies): the a-letter acts by the identity block
  // on the a-rows, the b-letter by the Jordan block on the b-rows.
  REQUIRE(m.space_dim(-1) == 2);
  REQUIRE(m.space_dim(0) == 6);
  const QMatrix& d = m.differential(-1);
  // columns come in (path, copy) order: e1x0, e1x1, a x0, a x1, b x0, b x1
  QMatrix expected(2, 6);
  expected.at(0, 2) = 1;                      // a . id
  expected.at(1, 3) = 1;
  expected.at(0, 4) = lambda;                 // b . J_2(lambda)
  expected.at(1, 4) = 1;
  expected.at(1, 5) = lambda;
  CHECK(d == expected);
}

TEST_CASE("band resolutions across random algebras have projective dimension one") {
  std::mt19937_64 rng(0xbadbeef);
  int bands_checked = 0;
  while (bands_checked < 25) {
    GentleQuiver q = random_gentle(rng(), 7, 10, true);
    for (const BandWord& b : enumerate_bands(q, 5)) {
      HomotopyBand hb = band_resolution(q, b);
      std::set<int> degs(hb.degrees().begin(), hb.degrees().end());
      CHECK(degs == std::set<int>{-1, 0});
      for (int n : {1, 3}) {
        JordanDatum j{n, Rat(2, 3)};
        CohomologyReport r = cohomology_oracle(q, assemble(q, hb, j));
        CHECK(r.dims.count(0));
        CHECK(r.dims.at(0) == dim_vector(band_to_module(q, b, j)));
        CHECK(r.dims.size() == 1);
      }
      ++bands_checked;
    }
  }
}

TEST_CASE("window truncation keeps the requested degrees") {
  GentleQuiver q = testsupport::nine_algebra();
  StringWord s1 = trivial_string(q, *q.find_vertex("1"));
  ProjectiveComplex p = resolve_to_complex(q, s1, 2);
  CHECK(p.components().begin()->first == -2);
  CHECK(p.components().rbegin()->first == 0);
}
