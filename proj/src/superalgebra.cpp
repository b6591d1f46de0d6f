#include "queerhom/superalgebra.hpp"

#include <sstream>
#include <stdexcept>

namespace qh {

namespace {

const char* kind_name(ValidationIssue::Kind k) {
  switch (k) {
    case ValidationIssue::Kind::grading: return "grading";
    case ValidationIssue::Kind::associativity: return "associativity";
    case ValidationIssue::Kind::unit: return "unit";
  }
  return "?";
}

Scalar sign(const FieldSpec& f, unsigned exponent) {
  return Scalar::from_int(f, (exponent & 1) ? -1 : 1);
}

}  // namespace

std::string ValidationReport::summary(std::size_t limit) const {
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

SuperAlgebra::SuperAlgebra(std::string name, FieldSpec field, GradedSpace space, std::vector<SparseVector> products,
                           SparseVector unit)
    : name_(std::move(name)),
      field_(field),
      space_(std::make_shared<const GradedSpace>(std::move(space))),
      products_(std::move(products)),
      unit_(std::move(unit)) {
  if (products_.size() != dim() * dim()) throw std::invalid_argument("structure constant table has the wrong size");
}

SuperAlgebra SuperAlgebra::make_validated(std::string name, FieldSpec field, GradedSpace space,
                                          std::vector<SparseVector> products, SparseVector unit) {
  SuperAlgebra a(std::move(name), field, std::move(space), std::move(products), std::move(unit));
  auto report = a.validate();
  if (!report.ok()) throw std::invalid_argument("algebra '" + a.name() + "' is invalid:\n" + report.summary());
  return a;
}

SparseVector SuperAlgebra::mul(const SparseVector& x, const SparseVector& y) const {
  SparseVector out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) out.add_scaled(product(i, j), a * b);
  return out;
}

SparseVector SuperAlgebra::basis_commutator(std::size_t i, std::size_t j) const {
  SparseVector out = product(i, j);
  out.add_scaled(product(j, i), -sign(field_, parity(i) * parity(j)));
  return out;
}

ValidationReport SuperAlgebra::validate() const {
  ValidationReport rep;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : product(i, j)) {
        if (k >= n) {
          rep.issues.push_back({ValidationIssue::Kind::grading, i, j, k, "product index out of range"});
        } else if (parity(k) != ((parity(i) + parity(j)) & 1)) {
          rep.issues.push_back({ValidationIssue::Kind::grading, i, j, k,
                                space_->label(i) + "*" + space_->label(j) + " has a component along " +
                                    space_->label(k) + " of the wrong parity"});
        }
        if (c.field() != field_)
          rep.issues.push_back({ValidationIssue::Kind::grading, i, j, k, "structure constant from another field"});
      }
  if (!rep.ok()) return rep;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        SparseVector left = mul(product(i, j), SparseVector::unit(k, field_));
        SparseVector right = mul(SparseVector::unit(i, field_), product(j, k));
        if (!(left == right))
          rep.issues.push_back({ValidationIssue::Kind::associativity, i, j, k,
                                "(e_i e_j) e_k = " + left.to_string(space_.get()) +
                                    " but e_i (e_j e_k) = " + right.to_string(space_.get())});
      }

  auto up = unit_.parity(*space_);
  if (unit_.empty() || !up || *up != 0) {
    rep.issues.push_back({ValidationIssue::Kind::unit, 0, 0, 0, "unit must be a nonzero even vector"});
    return rep;
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto e = SparseVector::unit(i, field_);
    if (!(mul(unit_, e) == e)) rep.issues.push_back({ValidationIssue::Kind::unit, i, 0, 0, "1*e_i != e_i"});
    if (!(mul(e, unit_) == e)) rep.issues.push_back({ValidationIssue::Kind::unit, i, 0, 0, "e_i*1 != e_i"});
  }
  return rep;
}

bool SuperAlgebra::is_super_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i; j < dim(); ++j)
      if (!basis_commutator(i, j).empty()) return false;
  return true;
}

// ----------------------------------------------------------- AlgebraElement

AlgebraElement::AlgebraElement(std::shared_ptr<const SuperAlgebra> parent, SparseVector coords)
    : parent_(std::move(parent)), coords_(std::move(coords)) {
  for (const auto& [i, x] : coords_)
    if (i >= parent_->dim()) throw std::invalid_argument("coordinate beyond the algebra dimension");
}

AlgebraElement AlgebraElement::basis(std::shared_ptr<const SuperAlgebra> parent, std::size_t i) {
  auto f = parent->field();
  return {std::move(parent), SparseVector::unit(i, f)};
}

AlgebraElement AlgebraElement::one(std::shared_ptr<const SuperAlgebra> parent) {
  SparseVector u = parent->unit();
  return {std::move(parent), std::move(u)};
}

unsigned AlgebraElement::parity() const {
  if (coords_.empty()) return 0;
  auto p = coords_.parity(parent_->space());
  if (!p) throw std::invalid_argument("element is not parity-homogeneous");
  return *p;
}

static void same_parent(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.parent_ptr() != b.parent_ptr() && a.parent_ptr()->name() != b.parent_ptr()->name())
    throw std::invalid_argument("elements belong to different algebras");
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  same_parent(a, b);
  return {a.parent_, a.coords_ + b.coords_};
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  same_parent(a, b);
  return {a.parent_, a.coords_ - b.coords_};
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.parent_->name() == b.parent_->name() && a.coords_ == b.coords_;
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
  same_parent(x, y);
  return {x.parent_ptr(), x.parent().mul(x.coords(), y.coords())};
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) {
  same_parent(x, y);
  unsigned e = x.parity() * y.parity();
  SparseVector out = x.parent().mul(x.coords(), y.coords());
  out.add_scaled(x.parent().mul(y.coords(), x.coords()), -sign(x.parent().field(), e));
  return {x.parent_ptr(), std::move(out)};
}

AlgebraElement anticommutator(const AlgebraElement& x, const AlgebraElement& y) {
  same_parent(x, y);
  return {x.parent_ptr(), x.parent().mul(x.coords(), y.coords()) + x.parent().mul(y.coords(), x.coords())};
}

// ------------------------------------------------------------------ tensor

SuperAlgebra tensor(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (a.field() != b.field()) throw std::invalid_argument("tensor: algebras over different fields");
  const auto& f = a.field();
  const std::size_t da = a.dim(), db = b.dim(), n = da * db;
  std::vector<std::string> labels;
  std::vector<std::uint8_t> parities;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      labels.push_back(a.space().label(i) + "(x)" + b.space().label(j));
      parities.push_back(static_cast<std::uint8_t>((a.parity(i) + b.parity(j)) & 1));
    }
  std::vector<SparseVector> products(n * n);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < db; ++l) {
          const auto& ak = a.product(i, k);
          const auto& bl = b.product(j, l);
          if (ak.empty() || bl.empty()) continue;
          Scalar s = sign(f, a.parity(k) * b.parity(j));
          std::vector<SparseVector::Entry> e;
          for (const auto& [s1, c1] : ak)
            for (const auto& [t1, c2] : bl) e.emplace_back(s1 * db + t1, s * c1 * c2);
          products[(i * db + j) * n + (k * db + l)] = SparseVector(std::move(e));
        }
  std::vector<SparseVector::Entry> unit;
  for (const auto& [s1, c1] : a.unit())
    for (const auto& [t1, c2] : b.unit()) unit.emplace_back(s1 * db + t1, c1 * c2);
  return SuperAlgebra(a.name() + "(x)" + b.name(), f, GradedSpace(std::move(labels), std::move(parities)),
                      std::move(products), SparseVector(std::move(unit)));
}

Subspace commutator_subspace(const SuperAlgebra& a) {
  std::vector<SparseVector> gens;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) gens.push_back(a.basis_commutator(i, j));
  return Subspace::span(a.space_ptr(), a.field(), std::move(gens));
}

Subspace two_sided_ideal(const SuperAlgebra& a, const std::vector<SparseVector>& generators) {
  Subspace current = Subspace::span(a.space_ptr(), a.field(), generators);
  for (;;) {
    std::vector<SparseVector> gens = current.basis();
    for (const auto& v : current.basis())
      for (std::size_t i = 0; i < a.dim(); ++i) {
        auto e = SparseVector::unit(i, a.field());
        gens.push_back(a.mul(e, v));
        gens.push_back(a.mul(v, e));
      }
    Subspace next = Subspace::span(a.space_ptr(), a.field(), std::move(gens));
    if (next.dim() == current.dim()) return next;
    current = std::move(next);
  }
}

GradedDim an_vanishing_check(const SuperAlgebra& r, unsigned n) {
  if (n != 2 && n != 3) throw std::invalid_argument("an_vanishing_check: n must be 2 or 3");
  if (!r.field().coprime_to(n))
    throw std::invalid_argument("an_vanishing_check: characteristic divides " + std::to_string(n));
  SuperAlgebra s = tensor(r, q1(r.field()));
  std::vector<SparseVector> gens{s.unit().scaled(Scalar::from_int(s.field(), n))};
  const Subspace ss = commutator_subspace(s);
  for (const auto& v : ss.basis()) gens.push_back(v);
  Subspace ideal = two_sided_ideal(s, gens);
  return s.space().graded_dim() - ideal.graded_dim();
}

}  // namespace qh
