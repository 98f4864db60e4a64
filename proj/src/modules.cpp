#include "gentlekit/modules.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace gentlekit {

Representation::Representation(const GentleQuiver& q, std::map<VertexId, int> dims,
                               std::map<ArrowId, QMatrix> mats)
    : dims_(std::move(dims)), mats_(std::move(mats)) {
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    auto it = mats_.find(a);
    size_t rows = static_cast<size_t>(dim(q.arrow(a).source));
    size_t cols = static_cast<size_t>(dim(q.arrow(a).target));
    if (it == mats_.end()) {
      mats_[a] = QMatrix(rows, cols);
    } else if (it->second.rows() != rows || it->second.cols() != cols) {
      throw std::runtime_error("representation: matrix shape mismatch for arrow " +
                               q.arrow(a).name);
    }
  }
  // Relation matrices must vanish.
  for (auto [a, b] : q.relations()) {
    if (!(mats_.at(a) * mats_.at(b)).is_zero())
      throw std::runtime_error("representation: relation " + q.arrow(a).name + " " +
                               q.arrow(b).name + " does not act by zero");
  }
}

int Representation::dim(VertexId v) const {
  auto it = dims_.find(v);
  return it == dims_.end() ? 0 : it->second;
}

int Representation::total_dim() const {
  int t = 0;
  for (auto& [v, d] : dims_) t += d;
  return t;
}

std::map<VertexId, int> Representation::top_dims(const GentleQuiver& q) const {
  std::map<VertexId, int> out;
  for (auto& [v, d] : dims_) {
    if (d == 0) continue;
    // rad M at v is the sum of the images of the arrows into v.
    QMatrix stacked(0, static_cast<size_t>(d));
    for (ArrowId a : q.arrows_in(v)) stacked = QMatrix::vstack(stacked, mats_.at(a));
    int r = stacked.rows() == 0 ? 0 : static_cast<int>(stacked.rank());
    if (d - r > 0) out[v] = d - r;
  }
  return out;
}

Representation string_to_module(const GentleQuiver& q, const StringWord& w) {
  std::map<VertexId, int> dims;
  std::vector<int> index_at(w.positions());
  for (size_t i = 0; i < w.positions(); ++i) index_at[i] = dims[w.vertex(i)]++;

  std::map<ArrowId, QMatrix> mats;
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    mats[a] = QMatrix(static_cast<size_t>(dims.count(q.arrow(a).source) ? dims[q.arrow(a).source] : 0),
                      static_cast<size_t>(dims.count(q.arrow(a).target) ? dims[q.arrow(a).target] : 0));
  for (size_t i = 0; i < w.length(); ++i) {
    const Letter& l = w.letters()[i];
    // A direct letter maps position i onto i+1, an inverse letter maps i+1
    // onto i.
    size_t from = l.inverse ? i + 1 : i;
    size_t to = l.inverse ? i : i + 1;
    mats[l.arrow].at(static_cast<size_t>(index_at[from]), static_cast<size_t>(index_at[to])) = 1;
  }
  return Representation(q, std::move(dims), std::move(mats));
}

Representation band_to_module(const GentleQuiver& q, const BandWord& b, const JordanDatum& j) {
  if (j.n < 1) throw std::runtime_error("band module: Jordan size must be >= 1");
  if (j.lambda == 0) throw std::runtime_error("band module: eigenvalue must be nonzero");
  const size_t L = b.length();
  const size_t n = static_cast<size_t>(j.n);

  std::map<VertexId, int> dims;
  std::vector<int> base_at(L);
  for (size_t i = 0; i < L; ++i) {
    base_at[i] = dims[b.vertex(i)];
    dims[b.vertex(i)] += static_cast<int>(n);
  }
  std::map<ArrowId, QMatrix> mats;
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    mats[a] = QMatrix(static_cast<size_t>(dims.count(q.arrow(a).source) ? dims[q.arrow(a).source] : 0),
                      static_cast<size_t>(dims.count(q.arrow(a).target) ? dims[q.arrow(a).target] : 0));

  size_t distinguished = L;
  for (size_t i = 0; i < L; ++i)
    if (!b.letters()[i].inverse) {
      distinguished = i;
      break;
    }

  for (size_t i = 0; i < L; ++i) {
    const Letter& l = b.letters()[i];
    size_t from_pos = l.inverse ? (i + 1) % L : i;
    size_t to_pos = l.inverse ? i : (i + 1) % L;
    QMatrix block = (i == distinguished) ? QMatrix::jordan(n, j.lambda) : QMatrix::identity(n);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c)
        if (block.at(r, c) != 0)
          mats[l.arrow].at(static_cast<size_t>(base_at[from_pos]) + r,
                           static_cast<size_t>(base_at[to_pos]) + c) = block.at(r, c);
  }
  return Representation(q, std::move(dims), std::move(mats));
}

std::map<VertexId, int> dim_vector(const Representation& m) {
  std::map<VertexId, int> out;
  for (auto& [v, d] : m.dims())
    if (d > 0) out[v] = d;
  return out;
}

namespace {

/// The uniserial string hanging below arrow e: top at t(e), descending along
/// the non-relation continuations of e.
StringWord hang_string(const GentleQuiver& q, ArrowId e) {
  std::vector<Letter> letters;
  ArrowId g = q.nonrel_next(e);
  while (g != kNone) {
    letters.push_back(Letter{g, false});
    g = q.nonrel_next(g);
  }
  return validate_string(q, letters, q.arrow(e).target);
}

}  // namespace

ProjectiveCover projective_cover(const GentleQuiver& q, const StringWord& c) {
  ProjectiveCover out;
  for (size_t t : top_positions(c)) out.cover.push_back(c.vertex(t));

  const size_t m = c.length();

  // Left end.
  std::optional<ArrowId> left_gen;
  if (m == 0) {
    const auto& outs = q.arrows_out(c.vertex(0));
    if (!outs.empty()) left_gen = outs[0];
  } else if (!c.letters().front().inverse) {
    // top end: the branch of P(v) away from the string
    ArrowId along = c.letters().front().arrow;
    for (ArrowId a : q.arrows_out(c.vertex(0)))
      if (a != along) left_gen = a;
  } else {
    // socle end: the string's covering branch continues past the end
    ArrowId into = c.letters().front().arrow;
    if (q.nonrel_next(into) != kNone) left_gen = q.nonrel_next(into);
  }
  if (left_gen) out.kernel.push_back(hang_string(q, *left_gen));

  for (size_t s : soc_positions(c))
    if (s > 0 && s < m) out.kernel.push_back(projective_string(q, c.vertex(s)));

  // Right end.
  std::optional<ArrowId> right_gen;
  if (m == 0) {
    const auto& outs = q.arrows_out(c.vertex(0));
    if (outs.size() > 1) right_gen = outs[1];
  } else if (c.letters().back().inverse) {
    ArrowId along = c.letters().back().arrow;
    for (ArrowId a : q.arrows_out(c.vertex(m)))
      if (a != along) right_gen = a;
  } else {
    ArrowId into = c.letters().back().arrow;
    if (q.nonrel_next(into) != kNone) right_gen = q.nonrel_next(into);
  }
  if (right_gen) out.kernel.push_back(hang_string(q, *right_gen));

  return out;
}

int hom_dim(const GentleQuiver& q, const Representation& m, const Representation& n) {
  // Unknowns: entries of F_v (dim_m(v) x dim_n(v)); equations per arrow a:
  // mat_m(a) F_{t(a)} = F_{s(a)} mat_n(a).
  std::map<VertexId, int> offset;
  int total = 0;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    offset[v] = total;
    total += m.dim(v) * n.dim(v);
  }
  if (total == 0) return 0;

  std::vector<std::vector<Rat>> rows;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    VertexId s = q.arrow(a).source, t = q.arrow(a).target;
    const QMatrix& ma = m.mat(a);
    const QMatrix& na = n.mat(a);
    for (int i = 0; i < m.dim(s); ++i)
      for (int jj = 0; jj < n.dim(t); ++jj) {
        std::vector<Rat> row(static_cast<size_t>(total));
        // sum_k ma(i,k) F_t(k,jj) - sum_l F_s(i,l) na(l,jj) = 0
        for (int k = 0; k < m.dim(t); ++k)
          if (ma.at(i, k) != 0) row[offset[t] + k * n.dim(t) + jj] += ma.at(i, k);
        for (int l = 0; l < n.dim(s); ++l)
          if (na.at(l, jj) != 0) row[offset[s] + i * n.dim(s) + l] -= na.at(l, jj);
        bool nonzero = std::any_of(row.begin(), row.end(), [](const Rat& r) { return r != 0; });
        if (nonzero) rows.push_back(std::move(row));
      }
  }
  QMatrix sys(rows.size(), static_cast<size_t>(total));
  for (size_t i = 0; i < rows.size(); ++i)
    for (int jj = 0; jj < total; ++jj) sys.at(i, static_cast<size_t>(jj)) = rows[i][jj];
  return total - static_cast<int>(sys.rank());
}

Representation regular_representation(const GentleQuiver& q) {
  auto paths = enumerate_paths(q, q.arrow_count());
  // Basis of A at vertex w: paths ending at w, in enumeration order.
  std::map<VertexId, std::vector<Path>> basis;
  for (const Path& p : paths) basis[q.path_target(p)].push_back(p);
  std::map<VertexId, int> dims;
  for (auto& [v, b] : basis) dims[v] = static_cast<int>(b.size());

  auto index_of = [&](const Path& p) -> int {
    const auto& b = basis.at(q.path_target(p));
    for (size_t i = 0; i < b.size(); ++i)
      if (b[i].arrows == p.arrows && q.path_source(b[i]) == q.path_source(p))
        return static_cast<int>(i);
    throw std::runtime_error("regular representation: path not in basis");
  };

  std::map<ArrowId, QMatrix> mats;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    VertexId s = q.arrow(a).source, t = q.arrow(a).target;
    QMatrix mat(static_cast<size_t>(dims.count(s) ? dims[s] : 0),
                static_cast<size_t>(dims.count(t) ? dims[t] : 0));
    if (basis.count(s)) {
      const auto& bs = basis[s];
      for (size_t i = 0; i < bs.size(); ++i) {
        const Path& p = bs[i];
        if (!p.trivial() && q.in_ideal(p.arrows.back(), a)) continue;
        Path pa = p;
        pa.arrows.push_back(a);
        pa.base = q.path_source(p);
        mat.at(i, static_cast<size_t>(index_of(pa))) = 1;
      }
    }
    mats[a] = std::move(mat);
  }
  return Representation(q, std::move(dims), std::move(mats));
}

nlohmann::json representation_to_json(const GentleQuiver& q, const Representation& m) {
  nlohmann::json j;
  j["dims"] = nlohmann::json::object();
  for (auto& [v, d] : m.dims())
    if (d > 0) j["dims"][q.vertex_name(v)] = d;
  j["mats"] = nlohmann::json::object();
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const QMatrix& mat = m.mat(a);
    if (mat.rows() == 0 || mat.cols() == 0) continue;
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < mat.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (size_t k = 0; k < mat.cols(); ++k) row.push_back(rat_to_string(mat.at(i, k)));
      rows.push_back(row);
    }
    j["mats"][q.arrow(a).name] = rows;
  }
  return j;
}

}  // namespace gentlekit
