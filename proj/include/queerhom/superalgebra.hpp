#pragma once

// Finite-dimensional unital associative superalgebras given by structure
// constants e_i * e_j = sum_k c[i][j][k] e_k over a parity-homogeneous basis.

#include <memory>
#include <string>
#include <vector>

#include "queerhom/linalg.hpp"

namespace qh {

struct ValidationIssue {
  enum class Kind { grading, associativity, unit };
  Kind kind;
  std::size_t i = 0, j = 0, k = 0;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string summary(std::size_t limit = 20) const;
};

class SuperAlgebra {
 public:
  SuperAlgebra() = default;
  /// `products` is indexed by i * dim + j; an empty vector is a zero product.
  /// No validation happens here; call validate() or use make_validated().
  SuperAlgebra(std::string name, FieldSpec field, GradedSpace space, std::vector<SparseVector> products,
               SparseVector unit);
  /// Throws std::invalid_argument with the first violations when validate() fails.
  static SuperAlgebra make_validated(std::string name, FieldSpec field, GradedSpace space,
                                     std::vector<SparseVector> products, SparseVector unit);

  const std::string& name() const { return name_; }
  const FieldSpec& field() const { return field_; }
  const GradedSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  std::size_t dim() const { return space_->dim(); }
  unsigned parity(std::size_t i) const { return space_->parity(i); }
  const SparseVector& unit() const { return unit_; }

  const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  SparseVector mul(const SparseVector& x, const SparseVector& y) const;
  /// Super-commutator of basis elements e_i e_j - (-1)^{|i||j|} e_j e_i.
  SparseVector basis_commutator(std::size_t i, std::size_t j) const;

  ValidationReport validate() const;
  bool is_super_commutative() const;

 private:
  std::string name_;
  FieldSpec field_;
  SpacePtr space_;
  std::vector<SparseVector> products_;
  SparseVector unit_;
};

/// An element together with its parent algebra.
class AlgebraElement {
 public:
  AlgebraElement(std::shared_ptr<const SuperAlgebra> parent, SparseVector coords);
  static AlgebraElement basis(std::shared_ptr<const SuperAlgebra> parent, std::size_t i);
  static AlgebraElement one(std::shared_ptr<const SuperAlgebra> parent);

  const SuperAlgebra& parent() const { return *parent_; }
  const std::shared_ptr<const SuperAlgebra>& parent_ptr() const { return parent_; }
  const SparseVector& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  /// Parity of a nonzero homogeneous element; zero counts as even.
  /// Throws std::invalid_argument for inhomogeneous elements.
  unsigned parity() const;

  AlgebraElement scaled(const Scalar& c) const { return {parent_, coords_.scaled(c)}; }
  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  std::shared_ptr<const SuperAlgebra> parent_;
  SparseVector coords_;
};

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);
/// xy - (-1)^{|x||y|} yx for homogeneous x, y.
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);
/// xy + yx.
AlgebraElement anticommutator(const AlgebraElement& x, const AlgebraElement& y);

/// Graded tensor product with (a1 (x) b1)(a2 (x) b2) = (-1)^{|a2||b1|} a1a2 (x) b1b2.
/// Basis index of (i, j) is i * dim(B) + j.
SuperAlgebra tensor(const SuperAlgebra& a, const SuperAlgebra& b);

/// Span of all super-commutators of basis pairs, i.e. [A, A].
Subspace commutator_subspace(const SuperAlgebra& a);

/// Smallest subspace containing the generators and closed under left and
/// right multiplication by the algebra.
Subspace two_sided_ideal(const SuperAlgebra& a, const std::vector<SparseVector>& generators);

/// Graded dimension of (R (x) Q1) / J, where J is the two-sided ideal
/// generated by n * 1 and [S, S] for S = R (x) Q1.
GradedDim an_vanishing_check(const SuperAlgebra& r, unsigned n);

// ---------------------------------------------------------------- builtins

enum class BuiltinFamily {
  base_field,
  q1,
  grassmann,
  truncated_poly,
  monogenic,
  group_algebra,
  matrix,
  square_zero_plane
};

struct BuiltinSpec {
  BuiltinFamily family = BuiltinFamily::base_field;
  unsigned param = 0;               // k for grassmann/matrix, m for truncated_poly/group_algebra
  std::vector<long> coefficients;   // monogenic: f from leading to constant term
  /// Accepts e.g. "q1", "grassmann(2)", "grassmann:2", "monogenic(1,0,-2)".
  static BuiltinSpec parse(std::string_view tag);
  std::string tag() const;
};

SuperAlgebra build_builtin(const BuiltinSpec& spec, const FieldSpec& field);
SuperAlgebra build_builtin(std::string_view tag, const FieldSpec& field);

SuperAlgebra base_field(const FieldSpec& field);
SuperAlgebra q1(const FieldSpec& field);
SuperAlgebra grassmann(unsigned generators, const FieldSpec& field);
SuperAlgebra truncated_poly(unsigned m, const FieldSpec& field);
/// k[x]/(f); coefficients run from the leading one (which must be 1) down to the constant.
SuperAlgebra monogenic(const std::vector<long>& coefficients, const FieldSpec& field);
SuperAlgebra group_algebra(unsigned m, const FieldSpec& field);
SuperAlgebra matrix_algebra(unsigned k, const FieldSpec& field);
SuperAlgebra square_zero_plane(const FieldSpec& field);

}  // namespace qh
