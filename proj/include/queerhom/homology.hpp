#pragma once

// Cyclic homology HC_1 from the pair-space presentation, the odd maps
// phi/psi between HC_1(R (x) Q1) and HC_1(R), Chevalley-Eilenberg H_2, and
// the Kahler differential oracle for commutative coordinate algebras.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "queerhom/lie.hpp"

namespace qh {

// ---------------------------------------------------------------- HC_1

/// <R,R> = (R (x) R) / I_R; the class of a (x) b is lambda(a, b), of parity |a| + |b|.
class PairSpace {
 public:
  PairSpace() = default;
  explicit PairSpace(const SuperAlgebra& r);

  const SuperAlgebra& algebra() const { return *r_; }
  const SpacePtr& ambient() const { return ambient_; }
  std::size_t pair_index(std::size_t a, std::size_t b) const { return a * r_->dim() + b; }
  const Subspace& relations() const { return quotient_.subspace(); }
  const QuotientSpace& quotient() const { return quotient_; }
  GradedDim graded_dim() const { return quotient_.graded_dim(); }

  /// x (x) y in the ambient R (x) R.
  SparseVector pair(const SparseVector& x, const SparseVector& y) const;
  /// lambda(x, y) in quotient coordinates.
  SparseVector lambda(const SparseVector& x, const SparseVector& y) const { return quotient_.project(pair(x, y)); }
  SparseVector lambda(std::size_t a, std::size_t b) const;

 private:
  std::shared_ptr<const SuperAlgebra> r_;
  SpacePtr ambient_;
  QuotientSpace quotient_;
};

struct HC1Result {
  PairSpace pairs;
  /// lambda(a, b) -> [a, b] on quotient coordinates, rows indexed by R.
  SparseMatrix commutator_map;
  /// HC_1(R) inside <R,R>, in quotient coordinates.
  Subspace cycles;
  GradedDim graded_dim() const { return cycles.graded_dim(); }
};

/// Throws std::logic_error if the commutator map does not vanish on I_R.
HC1Result hc1(const SuperAlgebra& r);

struct RelationRow {
  std::string relation;  // odd-swap, even-odd-factor, even-commutator, even-anticommutator, unit-pair
  std::size_t a = 0, b = 0;
  std::string instance;
  std::string residue;  // canonical form of lhs - rhs in <S,S>
  bool holds = false;
};

struct RelationReport {
  std::string algebra;
  std::vector<RelationRow> rows;
  bool ok() const;
  std::map<std::string, std::size_t> counts() const;
  std::size_t failures() const;
};

/// Every instance of the four h-relations, and h(a(x)1, 1(x)nu) = 0, over the
/// basis of R inside <S,S> for S = R (x) Q1.
RelationReport check_h_relations(const SuperAlgebra& r);

/// The odd maps phi: HC_1(R (x) Q1) -> HC_1(R) and psi: HC_1(R) -> HC_1(R (x) Q1),
/// with every claimed property recomputed.
struct PhiPsiResult {
  HC1Result hc1_r;
  HC1Result hc1_s;
  SparseMatrix psi;  // <S,S> coords x <R,R> coords
  SparseMatrix phi;  // <R,R> coords x <S,S> coords
  Subspace psi_image;  // psi(HC_1(R)) inside <S,S>
  bool psi_well_defined = false;
  bool phi_well_defined = false;
  bool psi_lands_in_hc1 = false;
  bool phi_lands_in_hc1 = false;
  bool phi_after_psi_identity = false;
  bool psi_after_phi_identity = false;
  bool psi_odd = false;
  bool phi_odd = false;
  std::vector<std::string> failures;
  bool ok() const;
};

PhiPsiResult phi_psi(const SuperAlgebra& r);

// ------------------------------------------------------- Chevalley-Eilenberg

std::size_t wedge2_dimension(GradedDim g);
std::size_t wedge3_dimension(GradedDim g);

/// Lambda^2 and Lambda^3 of a Lie superalgebra with d2 and d3.  Basis
/// elements are index tuples i <= j (<= k), equal indices only on odd
/// elements, ordered by (number of odd factors, indices).
class CEComplex {
 public:
  explicit CEComplex(std::shared_ptr<const LieSuperAlgebra> g);

  const LieSuperAlgebra& algebra() const { return *g_; }
  const SpacePtr& wedge2() const { return wedge2_; }
  const SpacePtr& wedge3() const { return wedge3_; }
  const std::vector<std::array<std::uint32_t, 2>>& pairs() const { return pairs_; }
  const std::vector<std::array<std::uint32_t, 3>>& triples() const { return triples_; }

  /// x_i ^ x_j in the Lambda^2 basis (normalized with Koszul signs).
  SparseVector wedge(std::size_t i, std::size_t j) const;
  /// x_i ^ x_j ^ x_k in the Lambda^3 basis.
  SparseVector wedge(std::size_t i, std::size_t j, std::size_t k) const;

  /// d2 of a Lambda^2 basis element, as a vector of g.
  SparseVector d2(std::size_t p) const;
  /// d3 applied to the ordered triple (x_i, x_j, x_k), not necessarily sorted.
  SparseVector d3(std::size_t i, std::size_t j, std::size_t k) const;
  SparseVector d3(std::size_t t) const;

  SparseMatrix d2_matrix() const;
  SparseMatrix d3_matrix() const;

 private:
  std::shared_ptr<const LieSuperAlgebra> g_;
  std::vector<std::array<std::uint32_t, 2>> pairs_;
  std::vector<std::array<std::uint32_t, 3>> triples_;
  std::vector<std::int64_t> pair_lookup_;  // i * dim + j -> pair index, sorted i <= j
  std::unordered_map<std::uint64_t, std::uint32_t> triple_lookup_;
  SpacePtr wedge2_, wedge3_;
};

struct H2Result {
  GradedDim h2;
  GradedDim wedge2, wedge3;
  GradedDim rank_d2, kernel_d2, rank_d3;
  /// Canonical cycle basis of a complement of im d3 in ker d2, in Lambda^2 coordinates.
  std::vector<SparseVector> cycles;
  SpacePtr wedge2_space;
  bool d2d3_zero = false;
  double seconds_assembly = 0, seconds_d3 = 0, seconds_d2 = 0;
};

/// Throws std::logic_error if d2 o d3 != 0.
H2Result ce_h2(const LieSuperAlgebra& g);

// -------------------------------------------------------------- Kahler

/// A commutative algebra k[x_1..x_r]/(f_1..f_s) together with a monomial basis.
struct KahlerPresentation {
  using Monomial = std::vector<unsigned>;
  using Polynomial = std::vector<std::pair<Monomial, long>>;

  SuperAlgebra algebra;
  std::vector<SparseVector> generators;  // images of x_1..x_r in the algebra
  std::vector<Monomial> basis_monomials;
  std::vector<Polynomial> relations;
};

/// Supported: base-field, monogenic, truncated-poly, group-algebra, square-zero-plane.
/// Throws std::invalid_argument otherwise.
KahlerPresentation kahler_presentation(const BuiltinSpec& spec, const FieldSpec& field);

struct KahlerResult {
  std::size_t omega1 = 0;     // dim of Omega^1(R)
  std::size_t exact = 0;      // dim of dR inside Omega^1(R)
  GradedDim quotient;         // Omega^1 / dR, all even
};

KahlerResult kahler_hc1_oracle(const KahlerPresentation& p);

// ------------------------------------------------------ theorem checks

struct TheoremReport {
  std::string statement;
  GradedDim computed;  // the homology side
  GradedDim expected;  // the cyclic homology side
  bool pass = false;
  bool exploratory = false;
  std::vector<std::pair<std::string, std::string>> details;
  std::vector<std::pair<std::string, double>> timings;
};

/// H_2(sq_n(R)) against swap(HC_1(R)); n = 2 is marked exploratory.
TheoremReport verify_main_theorem(const SuperAlgebra& r, unsigned n);
/// H_2(sq_n(R) / R I) against R + swap(HC_1(R)); R must be super-commutative.
TheoremReport verify_psq_formula(const SuperAlgebra& r, unsigned n);
/// H_2(sl_{n|n}(S)) against HC_1(S), with sl_{n|n}(S) the image of sq_n(S (x) Q1).
TheoremReport verify_slnn_identity(const SuperAlgebra& s, unsigned n);

/// Graded dimension of sq_n(R) from the Tr(B) characterization, without building brackets.
GradedDim sq_dimension(const SuperAlgebra& r, unsigned n);

}  // namespace qh
