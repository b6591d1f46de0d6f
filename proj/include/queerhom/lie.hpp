#pragma once

// Lie superalgebras from structure constants, and the matrix families
// gl_{m|n}(R), q_n(R), sq_n(R), sl_n(S) over a coordinate superalgebra R.
//
// Matrix conventions: M_{m|n}(R) multiplies like ordinary matrices with
// entries in R, and e_ij(a) has parity |i| + |j| + |a| where |i| = 1 iff i
// lies in the second block.  rho(a) = (-1)^{|a|} a.

#include <memory>
#include <string>
#include <vector>

#include "queerhom/linalg.hpp"
#include "queerhom/superalgebra.hpp"

namespace qh {

struct LieIssue {
  enum class Kind { grading, antisymmetry, jacobi };
  Kind kind;
  std::size_t i = 0, j = 0, k = 0;
  std::string detail;
};

struct LieValidationReport {
  std::vector<LieIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string summary(std::size_t limit = 20) const;
};

class LieSuperAlgebra {
 public:
  LieSuperAlgebra() = default;
  /// `table` is indexed by i * dim + j; empty entries are zero brackets.
  LieSuperAlgebra(std::string name, FieldSpec field, GradedSpace space, std::vector<SparseVector> table);

  const std::string& name() const { return name_; }
  const FieldSpec& field() const { return field_; }
  const GradedSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  std::size_t dim() const { return space_->dim(); }
  unsigned parity(std::size_t i) const { return space_->parity(i); }
  GradedDim graded_dim() const { return space_->graded_dim(); }

  const SparseVector& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  SparseVector bracket(const SparseVector& x, const SparseVector& y) const;
  /// [e_i, y] for a basis element e_i and an arbitrary y.
  SparseVector bracket(std::size_t i, const SparseVector& y) const;

  /// Grading, super-antisymmetry on all pairs and super Jacobi on all triples.
  LieValidationReport validate() const;
  bool is_abelian() const;

  /// Identical dimension, parities and structure constants.
  bool same_structure(const LieSuperAlgebra& other) const;

 private:
  std::string name_;
  FieldSpec field_;
  SpacePtr space_;
  std::vector<SparseVector> table_;
};

/// A Lie subalgebra presented on the canonical echelon basis of a subspace.
struct SubLieAlgebra {
  Subspace subspace;
  LieSuperAlgebra algebra;
};

/// Throws std::logic_error naming the offending pair if `s` is not closed
/// under the bracket or has an inhomogeneous echelon row.
SubLieAlgebra induced_subalgebra(const LieSuperAlgebra& g, const Subspace& s, std::string name);

LieSuperAlgebra lie_from_assoc(const SuperAlgebra& a);

// -------------------------------------------------------------- matrices

/// Index of e_ij(r) in gl_{m|n}(R); i, j are 0-based over m + n rows.
struct GlBasis {
  unsigned m = 0, n = 0;
  std::size_t dim_r = 0;
  unsigned size() const { return m + n; }
  unsigned block(unsigned i) const { return i < m ? 0 : 1; }
  std::size_t index(unsigned i, unsigned j, std::size_t r) const { return (std::size_t{i} * size() + j) * dim_r + r; }
  std::size_t dim() const { return std::size_t{size()} * size() * dim_r; }
};

/// u_ij(r) occupies the first n^2 dim(R) indices, w_ij(r) the rest.
struct QueerBasis {
  unsigned n = 0;
  std::size_t dim_r = 0;
  std::size_t u(unsigned i, unsigned j, std::size_t r) const { return (std::size_t{i} * n + j) * dim_r + r; }
  std::size_t w(unsigned i, unsigned j, std::size_t r) const { return std::size_t{n} * n * dim_r + u(i, j, r); }
  std::size_t dim() const { return 2 * std::size_t{n} * n * dim_r; }
};

/// An (m|n) block matrix with entries in R, stored as coordinate vectors.
struct MatrixElement {
  unsigned m = 0, n = 0;
  std::vector<SparseVector> entries;  // row-major, (m+n)^2 entries

  static MatrixElement zero(unsigned m, unsigned n);
  SparseVector& at(unsigned i, unsigned j) { return entries[std::size_t{i} * (m + n) + j]; }
  const SparseVector& at(unsigned i, unsigned j) const { return entries[std::size_t{i} * (m + n) + j]; }
  SparseVector to_gl(std::size_t dim_r) const;
  static MatrixElement from_gl(const SparseVector& v, unsigned m, unsigned n, std::size_t dim_r);
};

/// The block matrix (A, B; rho(B), rho(A)) of q_n(R).
struct QueerElement {
  unsigned n = 0;
  std::vector<SparseVector> a, b;  // n x n, row-major

  static QueerElement from_q(const SparseVector& v, unsigned n, std::size_t dim_r);
  SparseVector to_q(std::size_t dim_r) const;
  MatrixElement to_matrix(const SuperAlgebra& r) const;
  /// Throws std::logic_error if m is not of queer block shape.
  static QueerElement from_matrix(const MatrixElement& m, const SuperAlgebra& r);
};

GradedSpace gl_space(unsigned m, unsigned n, const SuperAlgebra& r);
GradedSpace queer_space(unsigned n, const SuperAlgebra& r);

LieSuperAlgebra build_gl(unsigned m, unsigned n, const SuperAlgebra& r);
/// q_n(R) realized inside gl_{n|n}(R) on the u/w basis.
LieSuperAlgebra build_q(unsigned n, const SuperAlgebra& r);
/// q_n(R) from the closed bracket formulas for u_ij(a), w_ij(b).
LieSuperAlgebra build_q_from_formulas(unsigned n, const SuperAlgebra& r);

/// Span of all brackets [e_i, e_j].
Subspace derived_subalgebra(const LieSuperAlgebra& g);
bool is_perfect(const LieSuperAlgebra& g);
/// {x : [x, g] = 0}.
Subspace center(const LieSuperAlgebra& g);
/// g / ideal with the induced bracket, on the non-pivot coordinates.
/// Throws std::invalid_argument if [g, ideal] is not inside ideal.
LieSuperAlgebra quotient_lie(const LieSuperAlgebra& g, const Subspace& ideal, std::string name = {});

/// Subspace of q_n(R) with A arbitrary and Tr(B) in [R, R].
Subspace build_sq_by_characterization(unsigned n, const SuperAlgebra& r);
/// sq_n(R) = [q_n(R), q_n(R)] with its induced bracket.
SubLieAlgebra build_sq(unsigned n, const SuperAlgebra& r);
/// Subspace {X : Tr(X) in [S, S]} of gl_n(S) = gl_{n|0}(S).
Subspace build_sl(unsigned n, const SuperAlgebra& s);
/// R * I_{n|n} inside q_n(R), i.e. the span of sum_i u_ii(r).
Subspace scalar_matrices_q(unsigned n, const SuperAlgebra& r);

/// g (x) R with [x (x) a, y (x) b] = (-1)^{|a||y|} [x, y] (x) ab.
/// Throws std::invalid_argument if R is not super-commutative.
LieSuperAlgebra lie_tensor(const LieSuperAlgebra& g, const SuperAlgebra& r);

// ---------------------------------------------------------- homomorphisms

struct HomFailure {
  std::size_t i = 0, j = 0;
  std::string detail;
};

/// A linear map between Lie superalgebras whose properties are computed,
/// never assumed.
class VerifiedHomomorphism {
 public:
  /// columns[k] is the image of source basis vector k.
  VerifiedHomomorphism(std::shared_ptr<const LieSuperAlgebra> source, std::shared_ptr<const LieSuperAlgebra> target,
                       std::vector<SparseVector> columns);

  const LieSuperAlgebra& source() const { return *source_; }
  const LieSuperAlgebra& target() const { return *target_; }
  const SparseMatrix& matrix() const { return matrix_; }
  bool parity_preserving() const { return parity_preserving_; }
  bool bracket_preserving() const { return bracket_preserving_; }
  bool injective() const { return injective_; }
  bool surjective() const { return surjective_; }
  bool is_isomorphism() const { return parity_preserving_ && bracket_preserving_ && injective_ && surjective_; }
  std::size_t rank() const { return rank_; }
  std::size_t pairs_checked() const { return pairs_checked_; }
  const std::vector<HomFailure>& failures() const { return failures_; }

  SparseVector apply(const SparseVector& v) const;
  Subspace image(const Subspace& s) const;

 private:
  std::shared_ptr<const LieSuperAlgebra> source_, target_;
  std::vector<SparseVector> columns_;
  SparseMatrix matrix_;
  bool parity_preserving_ = true, bracket_preserving_ = true, injective_ = false, surjective_ = false;
  std::size_t rank_ = 0, pairs_checked_ = 0;
  std::vector<HomFailure> failures_;
};

/// u_ij(a) -> e_ij(a (x) 1), w_ij(a) -> e_ij(a (x) nu), from q_n(R) to gl_n(R (x) Q1).
VerifiedHomomorphism iso_q_to_gl(unsigned n, const SuperAlgebra& r);
/// q_n(R (x) Q1) -> gl_{n|n}(R); needs a square root of -1 in the field.
VerifiedHomomorphism iso_qQ1_to_glnn(unsigned n, const SuperAlgebra& r);
/// x (x) a -> (-1)^{|x||a|} x(a) from q_n(k) (x) R to q_n(R).
VerifiedHomomorphism loop_relabeling(unsigned n, const SuperAlgebra& r, bool koszul_sign = true);

}  // namespace qh
