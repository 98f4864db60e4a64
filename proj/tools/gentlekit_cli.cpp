// gentlekit: combinatorial calculus for gentle algebras.
//
// Subcommands: validate, resolve, cohomology, hl, reduce-hl, nogaps,
// nakayama, draw, selftest. Exit codes: 0 success, 1 validation error,
// 2 internal mismatch between the two cohomology methods, 3 I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gentlekit/applications.hpp"
#include "gentlekit/cohomology.hpp"
#include "gentlekit/diagram.hpp"
#include "gentlekit/random_gentle.hpp"

using namespace gentlekit;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    if (data.empty() || data.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << data;
}

GentleQuiver load_algebra(const std::string& path) {
  std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return quiver_from_json(nlohmann::json::parse(text));
  return parse_quiver(text);
}

ordered_json dims_json(const GentleQuiver& q, const std::map<VertexId, int>& dims) {
  ordered_json j = ordered_json::object();
  for (auto& [v, d] : dims) j[q.vertex_name(v)] = d;
  return j;
}

ordered_json report_json(const GentleQuiver& q, const CohomologyReport& r) {
  ordered_json j;
  j["degrees"] = ordered_json::array();
  for (auto& [deg, dims] : r.dims) {
    ordered_json jd;
    jd["n"] = deg;
    jd["dims"] = dims_json(q, dims);
    if (r.strings.count(deg)) {
      jd["strings"] = ordered_json::array();
      for (const StringWord& w : r.strings.at(deg)) jd["strings"].push_back(format_string(q, w));
    }
    j["degrees"].push_back(jd);
  }
  j["hl"] = r.hl;
  return j;
}

ordered_json hstring_json(const GentleQuiver& q, const HomotopyString& h) {
  ordered_json j;
  j["letters"] = ordered_json::array();
  for (const auto& l : h.letters()) {
    ordered_json jl;
    jl["path"] = q.format_path(l.path);
    jl["inverse"] = l.inverse;
    j["letters"].push_back(jl);
  }
  j["vertices"] = ordered_json::array();
  for (size_t i = 0; i < h.crossings(); ++i) j["vertices"].push_back(q.vertex_name(h.vertex(i)));
  j["degrees"] = h.degrees();
  return j;
}

ordered_json complex_json(const GentleQuiver& q, const ProjectiveComplex& p) {
  ordered_json j = ordered_json::array();
  for (auto& [deg, summands] : p.components()) {
    ordered_json jd;
    jd["n"] = deg;
    jd["summands"] = ordered_json::array();
    for (const Summand& s : summands) {
      ordered_json js;
      js["vertex"] = q.vertex_name(s.vertex);
      if (s.multiplicity != 1) js["multiplicity"] = s.multiplicity;
      jd["summands"].push_back(js);
    }
    j.push_back(jd);
  }
  return j;
}

/// Worked examples used by `selftest`.
const char* kNineAlgebra = R"(
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
)";

const char* kKronecker = R"(
vertex 1
vertex 2
arrow a : 1 -> 2
arrow b : 1 -> 2
)";

const char* kCTilde =
    "[-1] ~a1 [0] a9 [-1] a8 [-2] a7.a6 [-3] ~a5 [-2] ~a4 [-1] a3 [-2] ~a2 [-1] ~a1 [0]";

int run_selftest() {
  int failures = 0;
  auto check = [&](bool ok, const std::string& name) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
    if (!ok) ++failures;
  };
  GentleQuiver nine = parse_quiver(kNineAlgebra);
  GentleQuiver kron = parse_quiver(kKronecker);

  auto nv = [&](const GentleQuiver& q, std::initializer_list<std::pair<const char*, int>> m) {
    std::map<VertexId, int> out;
    for (auto& [name, d] : m) out[*q.find_vertex(name)] = d;
    return out;
  };

  {
    HomotopyString h = parse_homotopy_string(nine, kCTilde);
    CohomologyReport oracle = cohomology_oracle(nine, assemble(nine, h));
    CohomologyReport trunc = cohomology_truncation(nine, h);
    check(oracle.dims.count(-3) == 0, "worked example 1: H^-3 vanishes");
    check(oracle.dims.at(-2) == nv(nine, {{"7", 1}, {"6", 1}}), "worked example 1: H^-2 dims");
    check(oracle.dims.at(-1) == nv(nine, {{"3", 2}, {"4", 1}}), "worked example 1: H^-1 dims");
    check(oracle.dims.at(0) == nv(nine, {{"1", 2}, {"9", 1}}), "worked example 1: H^0 dims");
    check(oracle.hl == 3, "worked example 1: hl = 3");
    check(trunc.dims == oracle.dims, "worked example 1: truncation method agrees");
    std::multiset<std::string> deg1;
    for (const StringWord& w : trunc.strings.at(-1)) deg1.insert(format_string(nine, w));
    std::multiset<std::string> expected{
        format_string(nine, trivial_string(nine, *nine.find_vertex("3"))),
        format_string(nine, parse_string(nine, "a3"))};
    check(deg1 == expected, "worked example 1: H^-1 string decomposition");
  }
  {
    StringWord s1 = trivial_string(nine, *nine.find_vertex("1"));
    ProjectiveComplex p = resolve_to_complex(nine, s1, 6);
    std::map<int, int> dims;
    for (auto& [deg, summands] : p.components()) dims[deg] = p.component_dim(nine, deg);
    check(dims == std::map<int, int>{{-3, 2}, {-2, 4}, {-1, 4}, {0, 3}},
          "worked example 2: resolution component dims");
    CohomologyReport r = cohomology_oracle(nine, p);
    check(r.dims.size() == 1 && r.dims.count(0) && r.dims.at(0) == nv(nine, {{"1", 1}}),
          "worked example 2: cohomology is the simple in degree zero");
  }
  {
    BandWord b = parse_band(kron, "band[a.~b]");
    bool hl_ok = true;
    for (int lam : {1, 2})
      hl_ok = hl_ok && cohomology_oracle(kron, assemble(kron, band_resolution(kron, b),
                                                        JordanDatum{2, lam}))
                               .hl == 4;
    check(hl_ok, "worked example 3: band hl = 4 for both eigenvalue samples");
    HomotopyString w = band_big_hl(kron, b, 4);
    CohomologyReport rw = cohomology_oracle(kron, assemble(kron, w));
    int h0 = 0;
    for (auto& [v, d] : rw.dims.at(0)) h0 += d;
    check(h0 == 6, "worked example 3: winding reaches dimension six");
    HlReduction r1 = reduce_hl(kron, b, JordanDatum{2, 1});
    check(r1.cohomology.hl == 3, "worked example 3: reduction reaches hl 3");
    HlReduction r2 = reduce_hl(kron, *r1.hstring);
    HlReduction r3 = reduce_hl(kron, *r2.hstring);
    check(r2.cohomology.hl == 2 && r3.cohomology.hl == 1,
          "worked example 3: chain continues 2, 1");
  }
  std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failures == 0 ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial projective resolutions and cohomology for gentle algebras"};
  app.require_subcommand(1);

  std::string algebra_path, string_text, band_text, hstring_text, out_path;
  std::string jordan_text = "1,1";
  int window = 6;
  int max_len = 5;
  uint64_t seed = 1;
  bool all_modules = false;

  auto add_common = [&](CLI::App* cmd, bool needs_algebra = true) {
    if (needs_algebra)
      cmd->add_option("--algebra", algebra_path, "quiver file (text or JSON)")->required();
    cmd->add_option("-o,--output", out_path, "output file (default: stdout)");
  };

  auto* validate = app.add_subcommand("validate", "validate an algebra, string, band or complex");
  add_common(validate);
  validate->add_option("--string", string_text, "string notation");
  validate->add_option("--band", band_text, "band notation");
  validate->add_option("--hstring", hstring_text, "homotopy string notation");

  auto* resolve = app.add_subcommand("resolve", "rotation and windowed projective resolution");
  add_common(resolve);
  resolve->add_option("--string", string_text, "string to resolve")->required();
  resolve->add_option("--window", window, "resolution window depth");

  auto* cohomology =
      app.add_subcommand("cohomology", "cohomology by both methods with a diff");
  add_common(cohomology);
  cohomology->add_option("--hstring", hstring_text, "homotopy string")->required();

  auto* hlcmd = app.add_subcommand("hl", "cohomological length");
  add_common(hlcmd);
  hlcmd->add_option("--hstring", hstring_text, "homotopy string");
  hlcmd->add_option("--band", band_text, "band notation");
  hlcmd->add_option("--jordan", jordan_text, "Jordan datum n,lambda for bands");

  auto* reduce = app.add_subcommand("reduce-hl", "complex with cohomological length one less");
  add_common(reduce);
  reduce->add_option("--complex", hstring_text, "homotopy string")->required();

  auto* nogaps = app.add_subcommand("nogaps", "hl census certificate");
  add_common(nogaps);
  nogaps->add_option("--max-len", max_len, "crossing bound for the census");
  nogaps->add_option("--seed", seed, "seed recorded in the report");

  auto* nakayama = app.add_subcommand("nakayama", "Ext witnesses against the regular module");
  add_common(nakayama);
  nakayama->add_flag("--all", all_modules, "all string modules up to the length bound");
  nakayama->add_option("--string", string_text, "string module descriptor");
  nakayama->add_option("--band", band_text, "band module descriptor");
  nakayama->add_option("--jordan", jordan_text, "Jordan datum n,lambda");
  nakayama->add_option("--max-len", max_len, "string length bound with --all");

  auto* draw = app.add_subcommand("draw", "DOT or SVG zigzag diagram");
  add_common(draw);
  draw->add_option("--string", string_text, "string to draw");
  draw->add_option("--hstring", hstring_text, "homotopy string to draw");

  auto* selftest = app.add_subcommand("selftest", "run the built-in worked examples");
  (void)selftest;

  CLI11_PARSE(app, argc, argv);

  try {
    if (selftest->parsed()) return run_selftest();

    GentleQuiver q = load_algebra(algebra_path);
    ordered_json out;

    if (validate->parsed()) {
      out["algebra"] = "ok";
      out["vertices"] = q.vertex_count();
      out["arrows"] = q.arrow_count();
      if (!string_text.empty()) {
        StringWord w = parse_string(q, string_text);
        out["string"] = format_string(q, w);
        out["dims"] = dims_json(q, string_dim_vector(w));
        out["module"] = representation_to_json(q, string_to_module(q, w));
      }
      if (!band_text.empty()) {
        BandWord b = parse_band(q, band_text);
        out["band"] = format_band(q, b);
      }
      if (!hstring_text.empty()) {
        HomotopyString h = parse_homotopy_string(q, hstring_text);
        out["hstring"] = format_homotopy_string(q, h);
        out["crossings"] = h.crossings();
      }
      write_output(out_path, out.dump(2));
      return kExitOk;
    }

    if (resolve->parsed()) {
      StringWord c = parse_string(q, string_text);
      HomotopyString h = rotate(q, c);
      out["string"] = format_string(q, c);
      out["homotopy_string"] = format_homotopy_string(q, h);
      out["homotopy_string_json"] = hstring_json(q, h);
      if (h.left_tail)
        out["left_tail"] = {{"preperiod", h.left_tail->preperiod},
                            {"period", h.left_tail->period}};
      if (h.right_tail)
        out["right_tail"] = {{"preperiod", h.right_tail->preperiod},
                             {"period", h.right_tail->period}};
      ProjectiveComplex p = resolve_to_complex(q, c, window);
      out["window"] = window;
      out["complex"] = complex_json(q, p);
      out["cohomology"] = report_json(q, cohomology_oracle(q, p));
      write_output(out_path, out.dump(2));
      return kExitOk;
    }

    if (cohomology->parsed()) {
      HomotopyString h = parse_homotopy_string(q, hstring_text);
      CohomologyReport oracle = cohomology_oracle(q, assemble(q, h));
      CohomologyReport trunc = cohomology_truncation(q, h);
      out["hstring"] = format_homotopy_string(q, h);
      out["oracle"] = report_json(q, oracle);
      out["truncation"] = report_json(q, trunc);
      out["curves"] = ordered_json::array();
      for (auto& [deg, list] : cohomology_curves(q, h)) {
        ordered_json jd;
        jd["n"] = deg;
        jd["truncations"] = ordered_json::array();
        for (const CohomCurve& c : list) {
          ordered_json jc;
          jc["crossing"] = c.crossing;
          jc["vertex"] = q.vertex_name(h.vertex(c.crossing));
          if (c.tru.trivial()) {
            jc["trivial"] = true;
          } else {
            jc["r"] = c.tru.r;
            jc["s"] = c.tru.s;
          }
          jd["truncations"].push_back(jc);
        }
        out["curves"].push_back(jd);
      }
      bool agree = oracle.dims == trunc.dims && oracle.hl == trunc.hl;
      out["methods_agree"] = agree;
      write_output(out_path, out.dump(2));
      return agree ? kExitOk : kExitMismatch;
    }

    if (hlcmd->parsed()) {
      if (!hstring_text.empty()) {
        HomotopyString h = parse_homotopy_string(q, hstring_text);
        out["hl"] = hl(q, assemble(q, h));
      } else if (!band_text.empty()) {
        BandWord b = parse_band(q, band_text);
        int n = 1;
        Rat lambda = 1;
        auto comma = jordan_text.find(',');
        if (comma != std::string::npos) {
          n = std::stoi(jordan_text.substr(0, comma));
          lambda = rat_from_string(jordan_text.substr(comma + 1));
        }
        out["hl"] = hl(q, assemble(q, band_resolution(q, b), JordanDatum{n, lambda}));
      } else {
        throw StringError("hl needs --hstring or --band");
      }
      write_output(out_path, out.dump(2));
      return kExitOk;
    }

    if (reduce->parsed()) {
      HomotopyString h = parse_homotopy_string(q, hstring_text);
      CohomologyReport before = cohomology_oracle(q, assemble(q, h));
      HlReduction red = reduce_hl(q, h);
      out["hl_before"] = before.hl;
      out["hl_after"] = red.cohomology.hl;
      out["move"] = red.move;
      if (red.hstring) out["hstring"] = format_homotopy_string(q, *red.hstring);
      out["complex"] = complex_json(q, red.complex);
      out["cohomology"] = report_json(q, red.cohomology);
      write_output(out_path, out.dump(2));
      return kExitOk;
    }

    if (nogaps->parsed()) {
      HlCertificate cert = no_gaps_census(q, max_len, algebra_path);
      out = ordered_json::object();
      out["algebra"] = cert.algebra;
      out["max_len"] = cert.max_len;
      out["seed"] = seed;
      out["achieved"] = ordered_json::object();
      for (auto& [v, w] : cert.achieved) out["achieved"][std::to_string(v)] = w;
      out["max_hl"] = cert.max_hl;
      out["gap_free"] = cert.gap_free;
      out["strings_checked"] = cert.strings_checked;
      out["bands_checked"] = cert.bands_checked;
      write_output(out_path, out.dump(2));
      return cert.gap_free ? kExitOk : kExitMismatch;
    }

    if (nakayama->parsed()) {
      auto witness_json = [&](const ExtWitness& w, const std::string& label) {
        ordered_json jw;
        jw["module"] = label;
        jw["degree"] = w.degree;
        jw["dimension"] = w.dimension;
        jw["window"] = w.window;
        return jw;
      };
      out["witnesses"] = ordered_json::array();
      if (all_modules) {
        for (const StringWord& w : enumerate_strings(q, max_len))
          out["witnesses"].push_back(
              witness_json(nakayama_witness(q, w), format_string(q, w)));
      }
      if (!string_text.empty()) {
        StringWord w = parse_string(q, string_text);
        out["witnesses"].push_back(witness_json(nakayama_witness(q, w), format_string(q, w)));
      }
      if (!band_text.empty()) {
        BandWord b = parse_band(q, band_text);
        int n = 1;
        Rat lambda = 1;
        auto comma = jordan_text.find(',');
        if (comma != std::string::npos) {
          n = std::stoi(jordan_text.substr(0, comma));
          lambda = rat_from_string(jordan_text.substr(comma + 1));
        }
        out["witnesses"].push_back(
            witness_json(nakayama_witness(q, b, JordanDatum{n, lambda}), format_band(q, b)));
      }
      write_output(out_path, out.dump(2));
      return kExitOk;
    }

    if (draw->parsed()) {
      bool svg = out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".svg";
      std::string data;
      if (!string_text.empty()) {
        StringWord w = parse_string(q, string_text);
        data = svg ? string_to_svg(q, w) : string_to_dot(q, w);
      } else if (!hstring_text.empty()) {
        HomotopyString h = parse_homotopy_string(q, hstring_text);
        data = svg ? homotopy_to_svg(q, h) : homotopy_to_dot(q, h);
      } else {
        throw StringError("draw needs --string or --hstring");
      }
      write_output(out_path, data);
      return kExitOk;
    }
  } catch (const IoError& e) {
    ordered_json err{{"error", e.what()}, {"kind", "io"}};
    std::cerr << err.dump(2) << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    ordered_json err{{"error", e.what()}, {"kind", "validation"}};
    std::cerr << err.dump(2) << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
