#include "gentlekit/complex.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "gentlekit/resolution.hpp"

namespace gentlekit {

void ProjectiveComplex::add_summand(int deg, VertexId v, int multiplicity) {
  comps_[deg].push_back(Summand{v, multiplicity});
}

void ProjectiveComplex::add_entry(DiffEntry e) {
  entries_.push_back(std::move(e));
}

int ProjectiveComplex::component_dim(const GentleQuiver& q, int deg) const {
  auto it = comps_.find(deg);
  if (it == comps_.end()) return 0;
  int total = 0;
  for (const Summand& s : it->second) {
    int pdim = 0;
    for (const Path& p : enumerate_paths(q, q.arrow_count()))
      if (q.path_source(p) == s.vertex) ++pdim;
    total += pdim * s.multiplicity;
  }
  return total;
}

std::map<VertexId, int> ProjectiveComplex::component_vertex_dims(int deg) const {
  std::map<VertexId, int> out;
  auto it = comps_.find(deg);
  if (it == comps_.end()) return out;
  for (const Summand& s : it->second) out[s.vertex] += s.multiplicity;
  return out;
}

namespace {

/// Paths starting at v, the basis of P(v), in enumeration order.
std::vector<Path> projective_basis(const GentleQuiver& q, VertexId v) {
  std::vector<Path> out;
  for (const Path& p : enumerate_paths(q, q.arrow_count()))
    if (q.path_source(p) == v) out.push_back(p);
  return out;
}

}  // namespace

MatrixComplex::MatrixComplex(const GentleQuiver& q, const ProjectiveComplex& p) : q_(q) {
  if (p.components().empty()) return;
  min_deg_ = p.components().begin()->first;
  max_deg_ = p.components().rbegin()->first;

  // Flattened basis per degree: for each summand, (path in P(v)) x copies.
  std::map<int, std::vector<std::pair<int, int>>> offsets;  // deg -> (summand -> offset)
  std::map<int, std::vector<std::vector<Path>>> bases;
  for (auto& [deg, summands] : p.components()) {
    int off = 0;
    for (const Summand& s : summands) {
      auto basis = projective_basis(q, s.vertex);
      offsets[deg].push_back({off, static_cast<int>(basis.size())});
      off += static_cast<int>(basis.size()) * s.multiplicity;
      for (const Path& pp : basis)
        for (int k = 0; k < s.multiplicity; ++k) basis_vertex_[deg].push_back(q.path_target(pp));
      bases[deg].push_back(std::move(basis));
    }
  }

  for (int deg = min_deg_; deg < max_deg_; ++deg) {
    size_t rows = basis_vertex_.count(deg) ? basis_vertex_[deg].size() : 0;
    size_t cols = basis_vertex_.count(deg + 1) ? basis_vertex_[deg + 1].size() : 0;
    diff_[deg] = QMatrix(rows, cols);
  }

  for (const DiffEntry& e : p.entries()) {
    if (!diff_.count(e.deg)) continue;
    QMatrix& d = diff_[e.deg];
    const auto& src_summands = p.components().at(e.deg);
    const auto& dst_summands = p.components().at(e.deg + 1);
    const Summand& src = src_summands[static_cast<size_t>(e.src)];
    const Summand& dst = dst_summands[static_cast<size_t>(e.dst)];
    const auto& src_basis = bases[e.deg][static_cast<size_t>(e.src)];
    const auto& dst_basis = bases[e.deg + 1][static_cast<size_t>(e.dst)];
    int src_off = offsets[e.deg][static_cast<size_t>(e.src)].first;
    int dst_off = offsets[e.deg + 1][static_cast<size_t>(e.dst)].first;
    // Left multiplication by e.path sends the basis path r of P(src) to the
    // basis path (e.path · r) of P(dst) when the junction avoids I.
    for (size_t ri = 0; ri < src_basis.size(); ++ri) {
      const Path& r = src_basis[ri];
      Path image;
      image.base = q.path_source(e.path);
      image.arrows = e.path.arrows;
      if (!r.trivial()) {
        if (!image.arrows.empty() && q.in_ideal(image.arrows.back(), r.arrows.front())) continue;
        image.arrows.insert(image.arrows.end(), r.arrows.begin(), r.arrows.end());
      }
      if (!q.path_valid(image)) continue;
      // locate image in dst basis
      int di = -1;
      for (size_t k = 0; k < dst_basis.size(); ++k)
        if (dst_basis[k].arrows == image.arrows) {
          di = static_cast<int>(k);
          break;
        }
      if (di < 0) throw std::runtime_error("differential image path missing from basis");
      for (int a = 0; a < src.multiplicity; ++a)
        for (int b = 0; b < dst.multiplicity; ++b) {
          const Rat& cf = e.coeff.at(static_cast<size_t>(a), static_cast<size_t>(b));
          if (cf != 0)
            d.at(static_cast<size_t>(src_off) + ri * src.multiplicity + a,
                 static_cast<size_t>(dst_off) + static_cast<size_t>(di) * dst.multiplicity + b) =
                cf;
        }
    }
  }
}

void MatrixComplex::check_differential() const {
  for (int deg = min_deg_; deg + 1 < max_deg_; ++deg) {
    auto it1 = diff_.find(deg);
    auto it2 = diff_.find(deg + 1);
    if (it1 == diff_.end() || it2 == diff_.end()) continue;
    if (!(it1->second * it2->second).is_zero())
      throw std::runtime_error("complex differential does not square to zero");
  }
}

int MatrixComplex::space_dim(int deg) const {
  auto it = basis_vertex_.find(deg);
  return it == basis_vertex_.end() ? 0 : static_cast<int>(it->second.size());
}

const QMatrix& MatrixComplex::differential(int deg) const {
  static const QMatrix empty;
  auto it = diff_.find(deg);
  return it == diff_.end() ? empty : it->second;
}

QMatrix MatrixComplex::vertex_block(int deg, VertexId v) const {
  // Rows of D^deg restricted to the vertex-v graded rows and columns; the
  // differential preserves the vertex grading of path bases.
  auto itr = basis_vertex_.find(deg);
  auto itc = basis_vertex_.find(deg + 1);
  std::vector<size_t> rows, cols;
  if (itr != basis_vertex_.end())
    for (size_t i = 0; i < itr->second.size(); ++i)
      if (itr->second[i] == v) rows.push_back(i);
  if (itc != basis_vertex_.end())
    for (size_t i = 0; i < itc->second.size(); ++i)
      if (itc->second[i] == v) cols.push_back(i);
  QMatrix out(rows.size(), cols.size());
  auto itd = diff_.find(deg);
  if (itd != diff_.end())
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j) out.at(i, j) = itd->second.at(rows[i], cols[j]);
  return out;
}

std::map<VertexId, int> MatrixComplex::cohomology_dims(int deg) const {
  std::map<VertexId, int> out;
  auto it = basis_vertex_.find(deg);
  if (it == basis_vertex_.end()) return out;
  for (VertexId v = 0; v < q_.vertex_count(); ++v) {
    size_t n_v = 0;
    for (VertexId bv : it->second)
      if (bv == v) ++n_v;
    if (n_v == 0) continue;
    QMatrix d_out = vertex_block(deg, v);
    QMatrix d_in = vertex_block(deg - 1, v);
    size_t ker = d_out.cols() == 0 ? n_v : n_v - d_out.rank();
    size_t im = d_in.rows() == 0 ? 0 : d_in.rank();
    if (ker > im) out[v] = static_cast<int>(ker - im);
  }
  return out;
}

ProjectiveComplex assemble(const GentleQuiver& q, const HomotopyString& h) {
  (void)q;
  ProjectiveComplex p;
  // crossing index -> summand index within its degree
  std::map<int, int> count;
  std::vector<int> idx(h.crossings());
  for (size_t i = 0; i < h.crossings(); ++i) {
    idx[i] = count[h.degree(i)]++;
    p.add_summand(h.degree(i), h.vertex(i));
  }
  for (size_t i = 0; i < h.letter_count(); ++i) {
    const HomotopyLetter& l = h.letters()[i];
    // A direct letter's path runs v_i -> v_{i+1} and induces
    // P(v_{i+1}) -> P(v_i), raising the degree; inverse letters mirror.
    size_t lo = l.inverse ? i : i + 1;      // lower-degree crossing (source)
    size_t hi = l.inverse ? i + 1 : i;      // higher-degree crossing (target)
    DiffEntry e;
    e.deg = h.degree(lo);
    e.src = idx[lo];
    e.dst = idx[hi];
    e.path = l.path;
    e.coeff = QMatrix::identity(1);
    p.add_entry(std::move(e));
  }
  return p;
}

ProjectiveComplex assemble(const GentleQuiver& q, const HomotopyBand& b, const JordanDatum& j) {
  (void)q;
  if (j.lambda == 0) throw std::runtime_error("band complex: eigenvalue must be nonzero");
  ProjectiveComplex p;
  const size_t n = b.crossings();
  std::map<int, int> count;
  std::vector<int> idx(n);
  for (size_t i = 0; i < n; ++i) {
    idx[i] = count[b.degree(i)]++;
    p.add_summand(b.degree(i), b.vertex(i), j.n);
  }
  for (size_t i = 0; i < n; ++i) {
    const HomotopyLetter& l = b.letters()[i];
    size_t lo = l.inverse ? i : (i + 1) % n;
    size_t hi = l.inverse ? (i + 1) % n : i;
    DiffEntry e;
    e.deg = b.degree(lo);
    e.src = idx[lo];
    e.dst = idx[hi];
    e.path = l.path;
    e.coeff = (i == b.distinguished_letter()) ? QMatrix::jordan(static_cast<size_t>(j.n), j.lambda)
                                              : QMatrix::identity(static_cast<size_t>(j.n));
    p.add_entry(std::move(e));
  }
  return p;
}

CohomologyReport cohomology_oracle(const GentleQuiver& q, const ProjectiveComplex& p) {
  MatrixComplex m(q, p);
  m.check_differential();
  CohomologyReport r;
  for (int deg = m.min_degree(); deg <= m.max_degree(); ++deg) {
    auto dims = m.cohomology_dims(deg);
    if (!dims.empty()) r.dims[deg] = dims;
  }
  r.hl = hl(r);
  return r;
}

int hl(const CohomologyReport& report) {
  int best = 0;
  for (auto& [deg, dims] : report.dims) {
    int total = 0;
    for (auto& [v, d] : dims) total += d;
    best = std::max(best, total);
  }
  return best;
}

int hl(const GentleQuiver& q, const ProjectiveComplex& p) {
  return cohomology_oracle(q, p).hl;
}

ProjectiveComplex resolve_to_complex(const GentleQuiver& q, const StringWord& c, int window) {
  return assemble(q, window_resolution(q, c, window));
}

nlohmann::json report_to_json(const GentleQuiver& q, const CohomologyReport& r) {
  nlohmann::json j;
  j["degrees"] = nlohmann::json::array();
  for (auto& [deg, dims] : r.dims) {
    nlohmann::json jd;
    jd["n"] = deg;
    jd["dims"] = nlohmann::json::object();
    for (auto& [v, d] : dims) jd["dims"][q.vertex_name(v)] = d;
    if (r.strings.count(deg)) {
      jd["strings"] = nlohmann::json::array();
      for (const StringWord& w : r.strings.at(deg)) jd["strings"].push_back(format_string(q, w));
    }
    j["degrees"].push_back(jd);
  }
  j["hl"] = r.hl;
  return j;
}

}  // namespace gentlekit
