#pragma once

// Sparse exact linear algebra over graded spaces.
//
// Subspaces are always held in reduced row-echelon form, so two subspaces of
// the same ambient space are equal exactly when their stored rows are equal.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "queerhom/scalar.hpp"

namespace qh {

struct GradedDim {
  std::size_t even = 0;
  std::size_t odd = 0;

  std::size_t total() const { return even + odd; }
  GradedDim swapped() const { return {odd, even}; }
  std::string to_string() const;

  friend bool operator==(const GradedDim&, const GradedDim&) = default;
  friend GradedDim operator+(GradedDim a, GradedDim b) { return {a.even + b.even, a.odd + b.odd}; }
  /// Componentwise; throws std::underflow_error when a component would go negative.
  friend GradedDim operator-(GradedDim a, GradedDim b);
};

class GradedSpace {
 public:
  GradedSpace() = default;
  /// Throws std::invalid_argument on duplicate labels or parities other than 0/1.
  GradedSpace(std::vector<std::string> labels, std::vector<std::uint8_t> parities);
  /// Labels e0, e1, ... for quick internal use.
  static GradedSpace anonymous(std::vector<std::uint8_t> parities);

  std::size_t dim() const { return parities_.size(); }
  unsigned parity(std::size_t i) const { return parities_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::span<const std::uint8_t> parities() const { return parities_; }
  std::span<const std::string> labels() const { return labels_; }
  GradedDim graded_dim() const;
  std::optional<std::size_t> index_of(std::string_view label) const;

  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> parities_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVector() = default;
  /// Entries may be unsorted and contain duplicates or zeros; they are merged.
  explicit SparseVector(std::vector<Entry> entries);
  static SparseVector unit(std::size_t index, const FieldSpec& field);

  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t leading() const { return entries_.front().first; }
  const Scalar& leading_value() const { return entries_.front().second; }
  const Scalar* find(std::size_t index) const;
  Scalar coeff(std::size_t index, const FieldSpec& field) const;

  /// this += c * other
  void add_scaled(const SparseVector& other, const Scalar& c);
  SparseVector scaled(const Scalar& c) const;
  SparseVector& operator+=(const SparseVector& o);
  SparseVector& operator-=(const SparseVector& o);
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

  /// Common parity of the support; nullopt for zero or mixed-parity vectors.
  std::optional<unsigned> parity(const GradedSpace& space) const;
  bool is_homogeneous(const GradedSpace& space) const;
  std::string to_string(const GradedSpace* space = nullptr) const;

 private:
  std::vector<Entry> entries_;
};

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols, FieldSpec field);
  /// Throws std::invalid_argument on duplicate (row, col) or out-of-range entries.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, FieldSpec field,
                                    const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>& entries);
  static SparseMatrix from_rows(std::size_t cols, FieldSpec field, std::vector<SparseVector> rows);
  static SparseMatrix from_columns(std::size_t rows, FieldSpec field, const std::vector<SparseVector>& columns);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }
  const SparseVector& row(std::size_t i) const { return rows_[i]; }
  const std::vector<SparseVector>& row_vectors() const { return rows_; }
  std::size_t nnz() const;

  SparseMatrix transpose() const;
  SparseVector apply(const SparseVector& v) const;
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  bool is_zero() const;
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  FieldSpec field_;
  std::vector<SparseVector> rows_;
};

/// Canonical reduced row-echelon basis of the span of `rows`, sorted by pivot.
/// Independent column blocks are reduced separately; over Q and Q(i) a
/// modular pass picks candidate pivot rows which are then reduced exactly and
/// every remaining row is checked exactly, so the result never depends on the
/// prime.  Throws std::invalid_argument on mixed fields.
std::vector<SparseVector> row_reduce(std::vector<SparseVector> rows, std::size_t ncols, const FieldSpec& field);

/// Rank only (same exact guarantees as row_reduce).
std::size_t rank(const SparseMatrix& m);

/// Reduced row-echelon form of m with zero rows kept at the bottom.
std::pair<SparseMatrix, std::size_t> rref(const SparseMatrix& m);

class Subspace {
 public:
  Subspace() = default;
  static Subspace span(SpacePtr ambient, FieldSpec field, std::vector<SparseVector> vectors);
  static Subspace zero(SpacePtr ambient, FieldSpec field);
  static Subspace whole(SpacePtr ambient, FieldSpec field);

  const GradedSpace& ambient() const { return *ambient_; }
  const SpacePtr& ambient_ptr() const { return ambient_; }
  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<SparseVector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its component along the subspace (zero iff v is inside).
  SparseVector residue(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return residue(v).empty(); }
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the echelon basis, or nullopt if v is outside.
  std::optional<std::vector<Scalar>> coordinates(const SparseVector& v) const;

  bool is_homogeneous() const;
  /// Throws std::logic_error if some echelon row mixes parities.
  GradedDim graded_dim() const;

  Subspace operator+(const Subspace& other) const;
  /// Equality of canonical forms (ambient compared by dimension and parities).
  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  SpacePtr ambient_;
  FieldSpec field_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::int64_t> pivot_row_;  // column -> echelon row or -1
};

class QuotientSpace {
 public:
  QuotientSpace() = default;
  /// Throws std::invalid_argument when sub is not parity-homogeneous.
  QuotientSpace(Subspace sub);

  const Subspace& subspace() const { return sub_; }
  const GradedSpace& ambient() const { return sub_.ambient(); }
  /// Basis of the quotient: the non-pivot ambient coordinates.
  const GradedSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  const std::vector<std::size_t>& section_coords() const { return section_; }
  std::size_t dim() const { return section_.size(); }
  GradedDim graded_dim() const { return space_->graded_dim(); }

  /// Class of an ambient vector in quotient coordinates.
  SparseVector project(const SparseVector& v) const;
  /// Chosen representative of a quotient vector (section).
  SparseVector lift(const SparseVector& q) const;

 private:
  Subspace sub_;
  std::vector<std::size_t> section_;
  std::vector<std::int64_t> quotient_index_;  // ambient coord -> quotient coord or -1
  SpacePtr space_;
};

/// Canonical echelon basis of {v : m v = 0}; columns of m index `domain`.
Subspace kernel(const SparseMatrix& m, SpacePtr domain);
QuotientSpace quotient(SpacePtr ambient, const Subspace& sub);
inline GradedDim graded_dim(const Subspace& s) { return s.graded_dim(); }
inline GradedDim graded_dim(const QuotientSpace& q) { return q.graded_dim(); }

}  // namespace qh
