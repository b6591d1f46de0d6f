#include "queerhom/lie.hpp"

#include <sstream>
#include <stdexcept>

namespace qh {

namespace {

constexpr std::size_t kMaxIssues = 100;

Scalar sign(const FieldSpec& f, unsigned exponent) { return Scalar::from_int(f, (exponent & 1) ? -1 : 1); }

const char* kind_name(LieIssue::Kind k) {
  switch (k) {
    case LieIssue::Kind::grading: return "grading";
    case LieIssue::Kind::antisymmetry: return "antisymmetry";
    case LieIssue::Kind::jacobi: return "jacobi";
  }
  return "?";
}

// Append c * v to acc with every index passed through remap.
template <class Remap>
void append_scaled(std::vector<SparseVector::Entry>& acc, const SparseVector& v, const Scalar& c, Remap remap) {
  for (const auto& [k, x] : v) acc.emplace_back(remap(k), c * x);
}

SparseVector rho(const SparseVector& v, const SuperAlgebra& r) {
  std::vector<SparseVector::Entry> e;
  for (const auto& [k, c] : v) e.emplace_back(k, r.parity(k) ? -c : c);
  return SparseVector(std::move(e));
}

MatrixElement matrix_product(const MatrixElement& x, const MatrixElement& y, const SuperAlgebra& r) {
  MatrixElement out = MatrixElement::zero(x.m, x.n);
  const unsigned size = x.m + x.n;
  for (unsigned i = 0; i < size; ++i)
    for (unsigned j = 0; j < size; ++j) {
      const auto& a = x.at(i, j);
      if (a.empty()) continue;
      for (unsigned l = 0; l < size; ++l) {
        const auto& b = y.at(j, l);
        if (!b.empty()) out.at(i, l) += r.mul(a, b);
      }
    }
  return out;
}

MatrixElement matrix_supercommutator(const MatrixElement& x, unsigned px, const MatrixElement& y, unsigned py,
                                     const SuperAlgebra& r) {
  MatrixElement xy = matrix_product(x, y, r);
  MatrixElement yx = matrix_product(y, x, r);
  Scalar s = -sign(r.field(), px * py);
  for (std::size_t k = 0; k < xy.entries.size(); ++k) xy.entries[k].add_scaled(yx.entries[k], s);
  return xy;
}

}  // namespace

std::string LieValidationReport::summary(std::size_t limit) const {
  std::ostringstream os;
  std::size_t shown = 0;
  for (const auto& is : issues) {
    if (shown++ == limit) {
      os << "... (" << issues.size() - limit << " more)\n";
      break;
    }
    os << kind_name(is.kind) << " violation at (" << is.i << "," << is.j << "," << is.k << "): " << is.detail << "\n";
  }
  return os.str();
}

LieSuperAlgebra::LieSuperAlgebra(std::string name, FieldSpec field, GradedSpace space, std::vector<SparseVector> table)
    : name_(std::move(name)),
      field_(field),
      space_(std::make_shared<const GradedSpace>(std::move(space))),
      table_(std::move(table)) {
  if (table_.size() != dim() * dim()) throw std::invalid_argument("bracket table has the wrong size");
}

SparseVector LieSuperAlgebra::bracket(const SparseVector& x, const SparseVector& y) const {
  std::vector<SparseVector::Entry> acc;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      const auto& t = bracket(i, j);
      if (!t.empty()) append_scaled(acc, t, a * b, [](std::size_t k) { return k; });
    }
  return SparseVector(std::move(acc));
}

SparseVector LieSuperAlgebra::bracket(std::size_t i, const SparseVector& y) const {
  std::vector<SparseVector::Entry> acc;
  for (const auto& [j, b] : y) {
    const auto& t = bracket(i, j);
    if (!t.empty()) append_scaled(acc, t, b, [](std::size_t k) { return k; });
  }
  return SparseVector(std::move(acc));
}

LieValidationReport LieSuperAlgebra::validate() const {
  LieValidationReport rep;
  const std::size_t n = dim();
  auto add = [&](LieIssue is) {
    if (rep.issues.size() < kMaxIssues) rep.issues.push_back(std::move(is));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : bracket(i, j))
        if (k >= n || parity(k) != ((parity(i) + parity(j)) & 1))
          add({LieIssue::Kind::grading, i, j, k, "bracket component of the wrong parity"});
  if (!rep.ok()) return rep;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      SparseVector sum = bracket(i, j);
      sum.add_scaled(bracket(j, i), sign(field_, parity(i) * parity(j)));
      if (!sum.empty())
        add({LieIssue::Kind::antisymmetry, i, j, 0,
             "[" + space_->label(i) + "," + space_->label(j) + "] + (-1)^{|x||y|}[y,x] = " +
                 sum.to_string(space_.get())});
    }
  if (!rep.ok()) return rep;

  // With antisymmetry in place the Jacobiator is graded-alternating, so
  // non-decreasing triples suffice.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        const unsigned pi = parity(i), pj = parity(j), pk = parity(k);
        SparseVector sum = bracket(i, bracket(j, k)).scaled(sign(field_, pi * pk));
        sum.add_scaled(bracket(j, bracket(k, i)), sign(field_, pj * pi));
        sum.add_scaled(bracket(k, bracket(i, j)), sign(field_, pk * pj));
        if (!sum.empty())
          add({LieIssue::Kind::jacobi, i, j, k,
               space_->label(i) + ", " + space_->label(j) + ", " + space_->label(k) + " give " +
                   sum.to_string(space_.get())});
      }
  return rep;
}

bool LieSuperAlgebra::is_abelian() const {
  for (const auto& t : table_)
    if (!t.empty()) return false;
  return true;
}

bool LieSuperAlgebra::same_structure(const LieSuperAlgebra& other) const {
  if (dim() != other.dim() || field_ != other.field_) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (parity(i) != other.parity(i)) return false;
  return table_ == other.table_;
}

SubLieAlgebra induced_subalgebra(const LieSuperAlgebra& g, const Subspace& s, std::string name) {
  const auto& rows = s.basis();
  const std::size_t d = rows.size();
  std::vector<std::string> labels;
  std::vector<std::uint8_t> parities;
  for (std::size_t a = 0; a < d; ++a) {
    auto p = rows[a].parity(g.space());
    if (!p) throw std::logic_error("induced_subalgebra: echelon row " + std::to_string(a) + " is inhomogeneous");
    parities.push_back(static_cast<std::uint8_t>(*p));
    const auto& piv = g.space().label(rows[a].leading());
    labels.push_back(rows[a].nnz() == 1 && rows[a].leading_value().is_one() ? piv : "<" + piv + ">");
  }
  std::vector<SparseVector> table(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      SparseVector br = g.bracket(rows[a], rows[b]);
      if (br.empty()) continue;
      auto coords = s.coordinates(br);
      if (!coords)
        throw std::logic_error("induced_subalgebra: [" + labels[a] + ", " + labels[b] + "] = " +
                               br.to_string(&g.space()) + " leaves the subspace");
      std::vector<SparseVector::Entry> e;
      for (std::size_t c = 0; c < d; ++c)
        if (!(*coords)[c].is_zero()) e.emplace_back(c, (*coords)[c]);
      table[a * d + b] = SparseVector(std::move(e));
    }
  LieSuperAlgebra alg(std::move(name), g.field(), GradedSpace(std::move(labels), std::move(parities)),
                      std::move(table));
  return {s, std::move(alg)};
}

LieSuperAlgebra lie_from_assoc(const SuperAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<SparseVector> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = a.basis_commutator(i, j);
  return LieSuperAlgebra(a.name(), a.field(), a.space(), std::move(table));
}

// ------------------------------------------------------------------ matrices

MatrixElement MatrixElement::zero(unsigned m, unsigned n) {
  MatrixElement x;
  x.m = m;
  x.n = n;
  x.entries.resize(std::size_t{m + n} * (m + n));
  return x;
}

SparseVector MatrixElement::to_gl(std::size_t dim_r) const {
  GlBasis gb{m, n, dim_r};
  std::vector<SparseVector::Entry> e;
  for (unsigned i = 0; i < m + n; ++i)
    for (unsigned j = 0; j < m + n; ++j)
      for (const auto& [r, c] : at(i, j)) e.emplace_back(gb.index(i, j, r), c);
  return SparseVector(std::move(e));
}

MatrixElement MatrixElement::from_gl(const SparseVector& v, unsigned m, unsigned n, std::size_t dim_r) {
  MatrixElement x = zero(m, n);
  std::vector<std::vector<SparseVector::Entry>> e(x.entries.size());
  for (const auto& [k, c] : v) e[k / dim_r].emplace_back(k % dim_r, c);
  for (std::size_t k = 0; k < e.size(); ++k) x.entries[k] = SparseVector(std::move(e[k]));
  return x;
}

QueerElement QueerElement::from_q(const SparseVector& v, unsigned n, std::size_t dim_r) {
  QueerElement q{n, std::vector<SparseVector>(std::size_t{n} * n), std::vector<SparseVector>(std::size_t{n} * n)};
  const std::size_t half = std::size_t{n} * n * dim_r;
  std::vector<std::vector<SparseVector::Entry>> a(q.a.size()), b(q.b.size());
  for (const auto& [k, c] : v) {
    if (k < half)
      a[k / dim_r].emplace_back(k % dim_r, c);
    else
      b[(k - half) / dim_r].emplace_back((k - half) % dim_r, c);
  }
  for (std::size_t k = 0; k < a.size(); ++k) {
    q.a[k] = SparseVector(std::move(a[k]));
    q.b[k] = SparseVector(std::move(b[k]));
  }
  return q;
}

SparseVector QueerElement::to_q(std::size_t dim_r) const {
  QueerBasis qb{n, dim_r};
  std::vector<SparseVector::Entry> e;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      for (const auto& [r, c] : a[i * n + j]) e.emplace_back(qb.u(i, j, r), c);
      for (const auto& [r, c] : b[i * n + j]) e.emplace_back(qb.w(i, j, r), c);
    }
  return SparseVector(std::move(e));
}

MatrixElement QueerElement::to_matrix(const SuperAlgebra& r) const {
  MatrixElement x = MatrixElement::zero(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      x.at(i, j) = a[i * n + j];
      x.at(i, n + j) = b[i * n + j];
      x.at(n + i, j) = rho(b[i * n + j], r);
      x.at(n + i, n + j) = rho(a[i * n + j], r);
    }
  return x;
}

QueerElement QueerElement::from_matrix(const MatrixElement& x, const SuperAlgebra& r) {
  if (x.m != x.n) throw std::logic_error("queer element needs an (n|n) matrix");
  const unsigned n = x.n;
  QueerElement q{n, {}, {}};
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      q.a.push_back(x.at(i, j));
      q.b.push_back(x.at(i, n + j));
      if (!(x.at(n + i, j) == rho(x.at(i, n + j), r)) || !(x.at(n + i, n + j) == rho(x.at(i, j), r)))
        throw std::logic_error("matrix is not of queer block shape at entry (" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + ")");
    }
  return q;
}

GradedSpace gl_space(unsigned m, unsigned n, const SuperAlgebra& r) {
  GlBasis gb{m, n, r.dim()};
  std::vector<std::string> labels(gb.dim());
  std::vector<std::uint8_t> parities(gb.dim());
  for (unsigned i = 0; i < gb.size(); ++i)
    for (unsigned j = 0; j < gb.size(); ++j)
      for (std::size_t a = 0; a < r.dim(); ++a) {
        auto k = gb.index(i, j, a);
        labels[k] = "e[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "](" + r.space().label(a) + ")";
        parities[k] = static_cast<std::uint8_t>((gb.block(i) + gb.block(j) + r.parity(a)) & 1);
      }
  return GradedSpace(std::move(labels), std::move(parities));
}

GradedSpace queer_space(unsigned n, const SuperAlgebra& r) {
  QueerBasis qb{n, r.dim()};
  std::vector<std::string> labels(qb.dim());
  std::vector<std::uint8_t> parities(qb.dim());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (std::size_t a = 0; a < r.dim(); ++a) {
        std::string tail = "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "](" + r.space().label(a) + ")";
        labels[qb.u(i, j, a)] = "u" + tail;
        labels[qb.w(i, j, a)] = "w" + tail;
        parities[qb.u(i, j, a)] = static_cast<std::uint8_t>(r.parity(a));
        parities[qb.w(i, j, a)] = static_cast<std::uint8_t>(r.parity(a) ^ 1);
      }
  return GradedSpace(std::move(labels), std::move(parities));
}

LieSuperAlgebra build_gl(unsigned m, unsigned n, const SuperAlgebra& r) {
  if (m + n < 1) throw std::invalid_argument("build_gl: need m + n >= 1");
  const auto& f = r.field();
  GlBasis gb{m, n, r.dim()};
  GradedSpace space = gl_space(m, n, r);
  const std::size_t dim = gb.dim(), d = r.dim(), size = gb.size();
  std::vector<SparseVector> table(dim * dim);
  for (unsigned i = 0; i < size; ++i)
    for (unsigned j = 0; j < size; ++j)
      for (std::size_t a = 0; a < d; ++a) {
        const std::size_t x = gb.index(i, j, a);
        for (unsigned k = 0; k < size; ++k)
          for (unsigned l = 0; l < size; ++l)
            for (std::size_t b = 0; b < d; ++b) {
              if (j != k && l != i) continue;
              const std::size_t y = gb.index(k, l, b);
              std::vector<SparseVector::Entry> acc;
              if (j == k)
                append_scaled(acc, r.product(a, b), Scalar::one(f), [&](std::size_t c) { return gb.index(i, l, c); });
              if (l == i)
                append_scaled(acc, r.product(b, a), -sign(f, space.parity(x) * space.parity(y)),
                              [&](std::size_t c) { return gb.index(k, j, c); });
              table[x * dim + y] = SparseVector(std::move(acc));
            }
      }
  std::string name = "gl_{" + std::to_string(m) + "|" + std::to_string(n) + "}(" + r.name() + ")";
  return LieSuperAlgebra(std::move(name), f, std::move(space), std::move(table));
}

LieSuperAlgebra build_q(unsigned n, const SuperAlgebra& r) {
  if (n < 1) throw std::invalid_argument("build_q: need n >= 1");
  const auto& f = r.field();
  const std::size_t d = r.dim();
  QueerBasis qb{n, d};
  GradedSpace space = queer_space(n, r);
  const std::size_t dim = qb.dim();
  std::vector<MatrixElement> mats;
  mats.reserve(dim);
  for (std::size_t t = 0; t < dim; ++t) mats.push_back(QueerElement::from_q(SparseVector::unit(t, f), n, d).to_matrix(r));
  std::vector<SparseVector> table(dim * dim);
  for (std::size_t s = 0; s < dim; ++s)
    for (std::size_t t = 0; t < dim; ++t) {
      MatrixElement c = matrix_supercommutator(mats[s], space.parity(s), mats[t], space.parity(t), r);
      table[s * dim + t] = QueerElement::from_matrix(c, r).to_q(d);
    }
  return LieSuperAlgebra("q_" + std::to_string(n) + "(" + r.name() + ")", f, std::move(space), std::move(table));
}

LieSuperAlgebra build_q_from_formulas(unsigned n, const SuperAlgebra& r) {
  if (n < 1) throw std::invalid_argument("build_q_from_formulas: need n >= 1");
  const auto& f = r.field();
  const std::size_t d = r.dim();
  QueerBasis qb{n, d};
  GradedSpace space = queer_space(n, r);
  const std::size_t dim = qb.dim();
  std::vector<SparseVector> table(dim * dim);
  const Scalar one = Scalar::one(f);

  // [u_ij(a), X_kl(b)] for X in {u, w}, and [w_ij(a), w_kl(b)]
  auto uu_or_uw = [&](bool w, unsigned i, unsigned j, std::size_t a, unsigned k, unsigned l, std::size_t b) {
    auto idx = [&](unsigned p, unsigned q, std::size_t c) { return w ? qb.w(p, q, c) : qb.u(p, q, c); };
    std::vector<SparseVector::Entry> acc;
    if (j == k) append_scaled(acc, r.product(a, b), one, [&](std::size_t c) { return idx(i, l, c); });
    if (i == l)
      append_scaled(acc, r.product(b, a), -sign(f, r.parity(a) * r.parity(b)), [&](std::size_t c) { return idx(k, j, c); });
    return SparseVector(std::move(acc));
  };
  auto ww = [&](unsigned i, unsigned j, std::size_t a, unsigned k, unsigned l, std::size_t b) {
    const Scalar outer = sign(f, r.parity(b));
    std::vector<SparseVector::Entry> acc;
    if (j == k) append_scaled(acc, r.product(a, b), outer, [&](std::size_t c) { return qb.u(i, l, c); });
    if (i == l)
      append_scaled(acc, r.product(b, a), outer * sign(f, r.parity(a) * r.parity(b)),
                    [&](std::size_t c) { return qb.u(k, j, c); });
    return SparseVector(std::move(acc));
  };

  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (std::size_t a = 0; a < d; ++a)
        for (unsigned k = 0; k < n; ++k)
          for (unsigned l = 0; l < n; ++l)
            for (std::size_t b = 0; b < d; ++b) {
              const std::size_t ua = qb.u(i, j, a), wa = qb.w(i, j, a), ub = qb.u(k, l, b), wb = qb.w(k, l, b);
              table[ua * dim + ub] = uu_or_uw(false, i, j, a, k, l, b);
              table[ua * dim + wb] = uu_or_uw(true, i, j, a, k, l, b);
              table[wa * dim + wb] = ww(i, j, a, k, l, b);
            }
  // [w, u] by super-antisymmetry from [u, w]
  for (std::size_t x = 0; x < dim / 2; ++x)
    for (std::size_t y = dim / 2; y < dim; ++y)
      table[y * dim + x] = table[x * dim + y].scaled(-sign(f, space.parity(x) * space.parity(y)));
  return LieSuperAlgebra("q_" + std::to_string(n) + "(" + r.name() + ")", f, std::move(space), std::move(table));
}

Subspace derived_subalgebra(const LieSuperAlgebra& g) {
  std::vector<SparseVector> gens;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j)
      if (!g.bracket(i, j).empty()) gens.push_back(g.bracket(i, j));
  return Subspace::span(g.space_ptr(), g.field(), std::move(gens));
}

bool is_perfect(const LieSuperAlgebra& g) { return derived_subalgebra(g).dim() == g.dim(); }

Subspace center(const LieSuperAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> trip;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [k, c] : g.bracket(j, i)) trip.emplace_back(i * n + k, j, c);
  return kernel(SparseMatrix::from_triplets(n * n, n, g.field(), trip), g.space_ptr());
}

LieSuperAlgebra quotient_lie(const LieSuperAlgebra& g, const Subspace& ideal, std::string name) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (const auto& v : ideal.basis())
      if (!ideal.contains(g.bracket(i, v)))
        throw std::invalid_argument("quotient_lie: [" + g.space().label(i) + ", " + v.to_string(&g.space()) +
                                    "] leaves the ideal");
  QuotientSpace q(ideal);
  const auto& sec = q.section_coords();
  const std::size_t d = sec.size();
  std::vector<SparseVector> table(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) table[a * d + b] = q.project(g.bracket(sec[a], sec[b]));
  if (name.empty()) name = g.name() + "/I";
  return LieSuperAlgebra(std::move(name), g.field(), q.space(), std::move(table));
}

Subspace build_sq_by_characterization(unsigned n, const SuperAlgebra& r) {
  const auto& f = r.field();
  QueerBasis qb{n, r.dim()};
  auto space = std::make_shared<const GradedSpace>(queer_space(n, r));
  std::vector<SparseVector> gens;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (std::size_t a = 0; a < r.dim(); ++a) {
        gens.push_back(SparseVector::unit(qb.u(i, j, a), f));
        if (i != j) gens.push_back(SparseVector::unit(qb.w(i, j, a), f));
        else if (i > 0)
          gens.push_back(SparseVector::unit(qb.w(i, i, a), f) - SparseVector::unit(qb.w(0, 0, a), f));
      }
  const Subspace rr = commutator_subspace(r);
  for (const auto& c : rr.basis()) {
    std::vector<SparseVector::Entry> e;
    for (const auto& [a, x] : c) e.emplace_back(qb.w(0, 0, a), x);
    gens.emplace_back(std::move(e));
  }
  return Subspace::span(space, f, std::move(gens));
}

SubLieAlgebra build_sq(unsigned n, const SuperAlgebra& r) {
  LieSuperAlgebra q = build_q(n, r);
  return induced_subalgebra(q, derived_subalgebra(q), "sq_" + std::to_string(n) + "(" + r.name() + ")");
}

Subspace build_sl(unsigned n, const SuperAlgebra& s) {
  const auto& f = s.field();
  GlBasis gb{n, 0, s.dim()};
  auto space = std::make_shared<const GradedSpace>(gl_space(n, 0, s));
  std::vector<SparseVector> gens;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (std::size_t a = 0; a < s.dim(); ++a) {
        if (i != j) gens.push_back(SparseVector::unit(gb.index(i, j, a), f));
        else if (i > 0)
          gens.push_back(SparseVector::unit(gb.index(i, i, a), f) - SparseVector::unit(gb.index(0, 0, a), f));
      }
  const Subspace ss = commutator_subspace(s);
  for (const auto& c : ss.basis()) {
    std::vector<SparseVector::Entry> e;
    for (const auto& [a, x] : c) e.emplace_back(gb.index(0, 0, a), x);
    gens.emplace_back(std::move(e));
  }
  return Subspace::span(space, f, std::move(gens));
}

Subspace scalar_matrices_q(unsigned n, const SuperAlgebra& r) {
  const auto& f = r.field();
  QueerBasis qb{n, r.dim()};
  auto space = std::make_shared<const GradedSpace>(queer_space(n, r));
  std::vector<SparseVector> gens;
  for (std::size_t a = 0; a < r.dim(); ++a) {
    std::vector<SparseVector::Entry> e;
    for (unsigned i = 0; i < n; ++i) e.emplace_back(qb.u(i, i, a), Scalar::one(f));
    gens.emplace_back(std::move(e));
  }
  return Subspace::span(space, f, std::move(gens));
}

LieSuperAlgebra lie_tensor(const LieSuperAlgebra& g, const SuperAlgebra& r) {
  if (g.field() != r.field()) throw std::invalid_argument("lie_tensor: different fields");
  if (!r.is_super_commutative()) throw std::invalid_argument("lie_tensor: " + r.name() + " is not super-commutative");
  const auto& f = g.field();
  const std::size_t dg = g.dim(), dr = r.dim(), dim = dg * dr;
  std::vector<std::string> labels;
  std::vector<std::uint8_t> parities;
  for (std::size_t x = 0; x < dg; ++x)
    for (std::size_t a = 0; a < dr; ++a) {
      labels.push_back(g.space().label(x) + "(x)" + r.space().label(a));
      parities.push_back(static_cast<std::uint8_t>((g.parity(x) + r.parity(a)) & 1));
    }
  std::vector<SparseVector> table(dim * dim);
  for (std::size_t x = 0; x < dg; ++x)
    for (std::size_t y = 0; y < dg; ++y) {
      const auto& xy = g.bracket(x, y);
      if (xy.empty()) continue;
      for (std::size_t a = 0; a < dr; ++a)
        for (std::size_t b = 0; b < dr; ++b) {
          const auto& ab = r.product(a, b);
          if (ab.empty()) continue;
          Scalar s = sign(f, r.parity(a) * g.parity(y));
          std::vector<SparseVector::Entry> e;
          for (const auto& [z, c1] : xy)
            for (const auto& [t, c2] : ab) e.emplace_back(z * dr + t, s * c1 * c2);
          table[(x * dr + a) * dim + (y * dr + b)] = SparseVector(std::move(e));
        }
    }
  return LieSuperAlgebra(g.name() + "(x)" + r.name(), f, GradedSpace(std::move(labels), std::move(parities)),
                         std::move(table));
}

// ------------------------------------------------------------ homomorphisms

VerifiedHomomorphism::VerifiedHomomorphism(std::shared_ptr<const LieSuperAlgebra> source,
                                           std::shared_ptr<const LieSuperAlgebra> target,
                                           std::vector<SparseVector> columns)
    : source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
  const auto& src = *source_;
  const auto& tgt = *target_;
  if (src.field() != tgt.field()) throw std::invalid_argument("homomorphism between algebras over different fields");
  if (columns_.size() != src.dim()) throw std::invalid_argument("homomorphism needs one column per source basis vector");
  matrix_ = SparseMatrix::from_columns(tgt.dim(), src.field(), columns_);

  for (std::size_t k = 0; k < columns_.size(); ++k) {
    if (columns_[k].empty()) continue;
    auto p = columns_[k].parity(tgt.space());
    if (!p || *p != src.parity(k)) {
      parity_preserving_ = false;
      if (failures_.size() < 10)
        failures_.push_back({k, k, "image of " + src.space().label(k) + " has the wrong parity"});
    }
  }
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = 0; j < src.dim(); ++j) {
      ++pairs_checked_;
      SparseVector lhs = apply(src.bracket(i, j));
      SparseVector rhs = tgt.bracket(columns_[i], columns_[j]);
      if (!(lhs == rhs)) {
        bracket_preserving_ = false;
        if (failures_.size() < 10)
          failures_.push_back({i, j,
                               "f([" + src.space().label(i) + ", " + src.space().label(j) +
                                   "]) = " + lhs.to_string(&tgt.space()) + " but [f x, f y] = " +
                                   rhs.to_string(&tgt.space())});
      }
    }
  rank_ = qh::rank(matrix_);
  injective_ = rank_ == src.dim();
  surjective_ = rank_ == tgt.dim();
}

SparseVector VerifiedHomomorphism::apply(const SparseVector& v) const {
  std::vector<SparseVector::Entry> acc;
  for (const auto& [k, c] : v) append_scaled(acc, columns_[k], c, [](std::size_t t) { return t; });
  return SparseVector(std::move(acc));
}

Subspace VerifiedHomomorphism::image(const Subspace& s) const {
  std::vector<SparseVector> gens;
  for (const auto& v : s.basis()) gens.push_back(apply(v));
  return Subspace::span(target_->space_ptr(), target_->field(), std::move(gens));
}

VerifiedHomomorphism iso_q_to_gl(unsigned n, const SuperAlgebra& r) {
  const auto& f = r.field();
  SuperAlgebra s = tensor(r, q1(f));
  auto source = std::make_shared<const LieSuperAlgebra>(build_q(n, r));
  auto target = std::make_shared<const LieSuperAlgebra>(build_gl(n, 0, s));
  QueerBasis qb{n, r.dim()};
  GlBasis gb{n, 0, s.dim()};
  std::vector<SparseVector> cols(qb.dim());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (std::size_t a = 0; a < r.dim(); ++a) {
        cols[qb.u(i, j, a)] = SparseVector::unit(gb.index(i, j, 2 * a), f);
        cols[qb.w(i, j, a)] = SparseVector::unit(gb.index(i, j, 2 * a + 1), f);
      }
  return VerifiedHomomorphism(std::move(source), std::move(target), std::move(cols));
}

VerifiedHomomorphism iso_qQ1_to_glnn(unsigned n, const SuperAlgebra& r) {
  const auto& f = r.field();
  if (!f.has_sqrt_minus_one())
    throw std::invalid_argument("iso_qQ1_to_glnn: field " + f.name() + " has no square root of -1");
  const Scalar i_unit = Scalar::sqrt_minus_one(f), one = Scalar::one(f);
  SuperAlgebra s = tensor(r, q1(f));
  auto source = std::make_shared<const LieSuperAlgebra>(build_q(n, s));
  auto target = std::make_shared<const LieSuperAlgebra>(build_gl(n, n, r));
  QueerBasis qb{n, s.dim()};
  GlBasis gb{n, n, r.dim()};
  std::vector<SparseVector> cols(qb.dim());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (std::size_t a = 0; a < r.dim(); ++a) {
        const Scalar sg = sign(f, r.parity(a));
        auto e = [&](unsigned p, unsigned q) { return gb.index(p, q, a); };
        cols[qb.u(i, j, 2 * a)] = SparseVector({{e(i, j), one}, {e(n + i, n + j), sg}});
        cols[qb.u(i, j, 2 * a + 1)] = SparseVector({{e(i, n + j), one}, {e(n + i, j), sg}});
        cols[qb.w(i, j, 2 * a)] = SparseVector({{e(i, n + j), -i_unit}, {e(n + i, j), i_unit * sg}});
        cols[qb.w(i, j, 2 * a + 1)] = SparseVector({{e(i, j), i_unit}, {e(n + i, n + j), -i_unit * sg}});
      }
  return VerifiedHomomorphism(std::move(source), std::move(target), std::move(cols));
}

VerifiedHomomorphism loop_relabeling(unsigned n, const SuperAlgebra& r, bool koszul_sign) {
  const auto& f = r.field();
  auto source = std::make_shared<const LieSuperAlgebra>(lie_tensor(build_q(n, base_field(f)), r));
  auto target = std::make_shared<const LieSuperAlgebra>(build_q(n, r));
  QueerBasis qk{n, 1}, qr{n, r.dim()};
  const std::size_t dr = r.dim();
  std::vector<SparseVector> cols(source->dim());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (std::size_t a = 0; a < dr; ++a) {
        const Scalar s = koszul_sign ? sign(f, r.parity(a)) : Scalar::one(f);
        cols[qk.u(i, j, 0) * dr + a] = SparseVector::unit(qr.u(i, j, a), f);
        cols[qk.w(i, j, 0) * dr + a] = SparseVector({{qr.w(i, j, a), s}});
      }
  return VerifiedHomomorphism(std::move(source), std::move(target), std::move(cols));
}

}  // namespace qh
