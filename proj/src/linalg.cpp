#include "queerhom/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace qh {

namespace {

// NTT-friendly prime with p = 1 mod 4, so Q(i) also reduces into it.
constexpr std::uint64_t kSelectionPrime = 2013265921ULL;

// Blocks with fewer rows than this skip the modular selection pass.
constexpr std::size_t kModularThreshold = 24;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Dense RREF mod p over a block of local columns.  Rows stay fully reduced,
// so reducing a new vector is one pass over its own support.
class ModularEchelon {
 public:
  ModularEchelon(std::size_t ncols, std::uint64_t p) : ncols_(ncols), p_(p), pivot_row_(ncols, -1) {}

  // `v` holds (local column, residue) pairs.
  bool insert(const std::vector<std::pair<std::size_t, std::uint64_t>>& v) {
    acc_.assign(ncols_, 0);
    for (auto [c, x] : v) acc_[c] = (acc_[c] + x) % p_;
    for (auto [c, x0] : v) {
      if (pivot_row_[c] < 0) continue;
      std::uint64_t f = acc_[c];
      if (f == 0) continue;
      const auto& row = rows_[pivot_row_[c]];
      std::uint64_t neg = p_ - f;
      for (std::size_t k = 0; k < ncols_; ++k)
        if (row[k]) acc_[k] = (acc_[k] + neg * row[k]) % p_;
    }
    std::size_t lead = ncols_;
    for (std::size_t k = 0; k < ncols_; ++k)
      if (acc_[k]) {
        lead = k;
        break;
      }
    if (lead == ncols_) return false;
    std::uint64_t inv = inv_mod(acc_[lead], p_);
    for (std::size_t k = lead; k < ncols_; ++k)
      if (acc_[k]) acc_[k] = acc_[k] * inv % p_;
    for (auto& row : rows_) {
      std::uint64_t f = row[lead];
      if (!f) continue;
      std::uint64_t neg = p_ - f;
      for (std::size_t k = lead; k < ncols_; ++k)
        if (acc_[k]) row[k] = (row[k] + neg * acc_[k]) % p_;
    }
    pivot_row_[lead] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(acc_);
    return true;
  }

  const std::vector<std::vector<std::uint64_t>>& rows() const { return rows_; }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t ncols_;
  std::uint64_t p_;
  std::vector<std::int64_t> pivot_row_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::uint64_t> acc_;
};

// Incremental exact RREF; columns are global, the accumulator is indexed by
// a block-local map.
class ExactEchelon {
 public:
  ExactEchelon(const std::vector<std::size_t>& columns, const FieldSpec& field)
      : field_(field), zero_(Scalar::zero(field)), acc_(columns.size(), zero_), touched_(columns.size(), false) {
    local_.reserve(columns.size() * 2);
    for (std::size_t k = 0; k < columns.size(); ++k) local_.emplace(columns[k], k);
    global_ = columns;
  }

  bool insert(const SparseVector& v) {
    SparseVector r = reduce(v);
    if (r.empty()) return false;
    if (!r.leading_value().is_one()) r = r.scaled(r.leading_value().inverse());
    std::size_t p = r.leading();
    for (auto& row : rows_) {
      if (const Scalar* f = row.find(p)) row.add_scaled(r, -*f);
    }
    pivot_row_.emplace(p, rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  std::vector<SparseVector> take_rows() { return std::move(rows_); }

 private:
  SparseVector reduce(const SparseVector& v) {
    std::vector<std::size_t> touched;
    auto touch = [&](std::size_t local) {
      if (!touched_[local]) {
        touched_[local] = true;
        touched.push_back(local);
      }
    };
    for (const auto& [c, x] : v) {
      std::size_t l = local_.at(c);
      acc_[l] = x;
      touch(l);
    }
    for (const auto& [c, x] : v) {
      auto it = pivot_row_.find(c);
      if (it == pivot_row_.end()) continue;
      for (const auto& [k, y] : rows_[it->second]) {
        std::size_t l = local_.at(k);
        acc_[l].sub_mul(x, y);
        touch(l);
      }
    }
    std::sort(touched.begin(), touched.end());
    std::vector<SparseVector::Entry> out;
    for (std::size_t l : touched) {
      if (!acc_[l].is_zero()) out.emplace_back(global_[l], acc_[l]);
      acc_[l] = zero_;
      touched_[l] = false;
    }
    return SparseVector(std::move(out));
  }

  FieldSpec field_;
  Scalar zero_;
  std::vector<Scalar> acc_;
  std::vector<bool> touched_;
  std::unordered_map<std::size_t, std::size_t> local_;
  std::vector<std::size_t> global_;
  std::unordered_map<std::size_t, std::size_t> pivot_row_;
  std::vector<SparseVector> rows_;
};

std::vector<SparseVector> reduce_block(std::vector<SparseVector> rows, const FieldSpec& field) {
  std::vector<std::size_t> columns;
  for (const auto& r : rows)
    for (const auto& [c, x] : r) columns.push_back(c);
  std::sort(columns.begin(), columns.end());
  columns.erase(std::unique(columns.begin(), columns.end()), columns.end());

  // Sparsest rows first: cheaper pivots and less fill.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SparseVector& a, const SparseVector& b) { return a.nnz() < b.nnz(); });

  std::unordered_map<std::size_t, std::size_t> local;
  for (std::size_t k = 0; k < columns.size(); ++k) local.emplace(columns[k], k);

  if (field.kind == FieldKind::prime_field) {
    std::uint64_t p = field.characteristic;
    ModularEchelon ech(columns.size(), p);
    for (const auto& r : rows) {
      std::vector<std::pair<std::size_t, std::uint64_t>> v;
      for (const auto& [c, x] : r) v.emplace_back(local.at(c), *x.reduce_mod(p, 0));
      ech.insert(v);
    }
    std::vector<SparseVector> out;
    for (const auto& dense : ech.rows()) {
      std::vector<SparseVector::Entry> e;
      for (std::size_t k = 0; k < dense.size(); ++k)
        if (dense[k]) e.emplace_back(columns[k], Scalar::from_int(field, static_cast<long>(dense[k])));
      out.emplace_back(std::move(e));
    }
    return out;
  }

  ExactEchelon exact(columns, field);
  if (rows.size() < kModularThreshold) {
    for (const auto& r : rows) exact.insert(r);
    return exact.take_rows();
  }

  static const std::uint64_t sqrt_m1 = sqrt_minus_one_mod(kSelectionPrime);
  ModularEchelon ech(columns.size(), kSelectionPrime);
  std::vector<bool> selected(rows.size(), false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::pair<std::size_t, std::uint64_t>> v;
    bool ok = true;
    for (const auto& [c, x] : rows[i]) {
      auto m = x.reduce_mod(kSelectionPrime, sqrt_m1);
      if (!m) {
        ok = false;
        break;
      }
      v.emplace_back(local.at(c), *m);
    }
    if (ok && ech.insert(v)) selected[i] = true;
    if (ech.rank() == columns.size()) break;
  }
  // Rows independent mod p are independent over the field itself.
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (selected[i]) exact.insert(rows[i]);
  // The remaining rows are almost always in the span already; check exactly.
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!selected[i]) exact.insert(rows[i]);
  return exact.take_rows();
}

}  // namespace

// ---------------------------------------------------------------- GradedDim

std::string GradedDim::to_string() const {
  return "(" + std::to_string(even) + "|" + std::to_string(odd) + ")";
}

GradedDim operator-(GradedDim a, GradedDim b) {
  if (b.even > a.even || b.odd > a.odd)
    throw std::underflow_error("graded dimension " + a.to_string() + " - " + b.to_string() + " is negative");
  return {a.even - b.even, a.odd - b.odd};
}

// -------------------------------------------------------------- GradedSpace

GradedSpace::GradedSpace(std::vector<std::string> labels, std::vector<std::uint8_t> parities)
    : labels_(std::move(labels)), parities_(std::move(parities)) {
  if (labels_.size() != parities_.size()) throw std::invalid_argument("label/parity count mismatch");
  for (auto p : parities_)
    if (p > 1) throw std::invalid_argument("parity must be 0 or 1, got " + std::to_string(p));
  std::unordered_set<std::string_view> seen;
  seen.reserve(labels_.size() * 2);
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate basis label '" + l + "'");
}

GradedSpace GradedSpace::anonymous(std::vector<std::uint8_t> parities) {
  std::vector<std::string> labels;
  labels.reserve(parities.size());
  for (std::size_t i = 0; i < parities.size(); ++i) labels.push_back("e" + std::to_string(i));
  return GradedSpace(std::move(labels), std::move(parities));
}

GradedDim GradedSpace::graded_dim() const {
  GradedDim d;
  for (auto p : parities_) (p ? d.odd : d.even)++;
  return d;
}

std::optional<std::size_t> GradedSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

// ------------------------------------------------------------- SparseVector

SparseVector::SparseVector(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& e : entries) {
    if (!entries_.empty() && entries_.back().first == e.first) {
      entries_.back().second += e.second;
    } else {
      if (!entries_.empty() && entries_.back().second.is_zero()) entries_.pop_back();
      entries_.push_back(std::move(e));
    }
  }
  if (!entries_.empty() && entries_.back().second.is_zero()) entries_.pop_back();
}

SparseVector SparseVector::unit(std::size_t index, const FieldSpec& field) {
  SparseVector v;
  v.entries_.emplace_back(index, Scalar::one(field));
  return v;
}

const Scalar* SparseVector::find(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it == entries_.end() || it->first != index) return nullptr;
  return &it->second;
}

Scalar SparseVector::coeff(std::size_t index, const FieldSpec& field) const {
  const Scalar* s = find(index);
  return s ? *s : Scalar::zero(field);
}

void SparseVector::add_scaled(const SparseVector& other, const Scalar& c) {
  if (other.empty() || c.is_zero()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, b->second * c);
      ++b;
    } else {
      Scalar s = std::move(a->second);
      s += b->second * c;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

SparseVector SparseVector::scaled(const Scalar& c) const {
  SparseVector v;
  if (c.is_zero()) return v;
  v.entries_.reserve(entries_.size());
  for (const auto& [i, x] : entries_) v.entries_.emplace_back(i, x * c);
  return v;
}

SparseVector& SparseVector::operator+=(const SparseVector& o) {
  if (!o.empty()) add_scaled(o, Scalar::one(o.leading_value().field()));
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& o) {
  if (!o.empty()) add_scaled(o, -Scalar::one(o.leading_value().field()));
  return *this;
}

std::optional<unsigned> SparseVector::parity(const GradedSpace& space) const {
  if (entries_.empty()) return std::nullopt;
  unsigned p = space.parity(entries_.front().first);
  for (const auto& [i, x] : entries_)
    if (space.parity(i) != p) return std::nullopt;
  return p;
}

bool SparseVector::is_homogeneous(const GradedSpace& space) const {
  return entries_.empty() || parity(space).has_value();
}

std::string SparseVector::to_string(const GradedSpace* space) const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, x] : entries_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << x.to_string() << ")*";
    if (space)
      os << space->label(i);
    else
      os << "#" << i;
  }
  return os.str();
}

// ------------------------------------------------------------- SparseMatrix

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, FieldSpec field)
    : cols_(cols), field_(field), rows_(rows) {}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols, FieldSpec field,
                                         const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>& entries) {
  std::vector<std::vector<SparseVector::Entry>> buckets(rows);
  std::unordered_set<std::uint64_t> seen;
  for (const auto& [r, c, x] : entries) {
    if (r >= rows || c >= cols) throw std::invalid_argument("matrix entry out of range");
    if (!seen.insert(static_cast<std::uint64_t>(r) * cols + c).second)
      throw std::invalid_argument("duplicate matrix entry (" + std::to_string(r) + ", " + std::to_string(c) + ")");
    if (x.field() != field) throw std::invalid_argument("matrix entry from a different field");
    buckets[r].emplace_back(c, x);
  }
  SparseMatrix m(rows, cols, field);
  for (std::size_t r = 0; r < rows; ++r) m.rows_[r] = SparseVector(std::move(buckets[r]));
  return m;
}

SparseMatrix SparseMatrix::from_rows(std::size_t cols, FieldSpec field, std::vector<SparseVector> rows) {
  SparseMatrix m(0, cols, field);
  m.rows_ = std::move(rows);
  return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, FieldSpec field, const std::vector<SparseVector>& columns) {
  std::vector<std::vector<SparseVector::Entry>> buckets(rows);
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, x] : columns[c]) buckets.at(r).emplace_back(c, x);
  SparseMatrix m(rows, columns.size(), field);
  for (std::size_t r = 0; r < rows; ++r) m.rows_[r] = SparseVector(std::move(buckets[r]));
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.nnz();
  return n;
}

SparseMatrix SparseMatrix::transpose() const { return from_columns(cols_, field_, rows_); }

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  std::vector<SparseVector::Entry> out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar acc = Scalar::zero(field_);
    bool any = false;
    auto a = rows_[r].begin();
    auto b = v.begin();
    while (a != rows_[r].end() && b != v.end()) {
      if (a->first < b->first) {
        ++a;
      } else if (b->first < a->first) {
        ++b;
      } else {
        acc += a->second * b->second;
        any = true;
        ++a;
        ++b;
      }
    }
    if (any && !acc.is_zero()) out.emplace_back(r, std::move(acc));
  }
  return SparseVector(std::move(out));
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  SparseMatrix out(a.rows(), b.cols(), a.field());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    SparseVector acc;
    for (const auto& [k, x] : a.row(r)) acc.add_scaled(b.row(k), x);
    out.rows_[r] = std::move(acc);
  }
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const SparseVector& r) { return r.empty(); });
}

// ------------------------------------------------------------- elimination

std::vector<SparseVector> row_reduce(std::vector<SparseVector> rows, std::size_t ncols, const FieldSpec& field) {
  std::erase_if(rows, [](const SparseVector& r) { return r.empty(); });
  for (const auto& r : rows)
    for (const auto& [c, x] : r) {
      if (c >= ncols) throw std::invalid_argument("vector entry beyond ambient dimension");
      if (x.field() != field) throw std::invalid_argument("mixed fields in elimination");
    }
  if (rows.empty()) return {};

  UnionFind uf(ncols);
  for (const auto& r : rows)
    for (const auto& [c, x] : r) uf.unite(r.leading(), c);

  std::unordered_map<std::size_t, std::vector<SparseVector>> blocks;
  std::vector<std::size_t> order;
  for (auto& r : rows) {
    std::size_t root = uf.find(r.leading());
    auto [it, fresh] = blocks.try_emplace(root);
    if (fresh) order.push_back(root);
    it->second.push_back(std::move(r));
  }
  std::sort(order.begin(), order.end());

  std::vector<SparseVector> out;
  for (std::size_t root : order) {
    auto part = reduce_block(std::move(blocks[root]), field);
    for (auto& r : part) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(),
            [](const SparseVector& a, const SparseVector& b) { return a.leading() < b.leading(); });
  return out;
}

std::size_t rank(const SparseMatrix& m) { return row_reduce(m.row_vectors(), m.cols(), m.field()).size(); }

std::pair<SparseMatrix, std::size_t> rref(const SparseMatrix& m) {
  auto rows = row_reduce(m.row_vectors(), m.cols(), m.field());
  std::size_t r = rows.size();
  rows.resize(std::max(m.rows(), r));
  return {SparseMatrix::from_rows(m.cols(), m.field(), std::move(rows)), r};
}

// ----------------------------------------------------------------- Subspace

Subspace Subspace::span(SpacePtr ambient, FieldSpec field, std::vector<SparseVector> vectors) {
  Subspace s;
  s.field_ = field;
  s.rows_ = row_reduce(std::move(vectors), ambient->dim(), field);
  s.pivot_row_.assign(ambient->dim(), -1);
  for (std::size_t r = 0; r < s.rows_.size(); ++r) {
    s.pivots_.push_back(s.rows_[r].leading());
    s.pivot_row_[s.rows_[r].leading()] = static_cast<std::int64_t>(r);
  }
  s.ambient_ = std::move(ambient);
  return s;
}

Subspace Subspace::zero(SpacePtr ambient, FieldSpec field) { return span(std::move(ambient), field, {}); }

Subspace Subspace::whole(SpacePtr ambient, FieldSpec field) {
  std::vector<SparseVector> units;
  for (std::size_t i = 0; i < ambient->dim(); ++i) units.push_back(SparseVector::unit(i, field));
  return span(std::move(ambient), field, std::move(units));
}

SparseVector Subspace::residue(const SparseVector& v) const {
  SparseVector out = v;
  for (const auto& [c, x] : v) {
    if (c >= pivot_row_.size()) throw std::invalid_argument("vector outside the ambient space");
    std::int64_t r = pivot_row_[c];
    if (r >= 0) out.add_scaled(rows_[r], -x);
  }
  return out;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const SparseVector& v) { return contains(v); });
}

std::optional<std::vector<Scalar>> Subspace::coordinates(const SparseVector& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<Scalar> out;
  out.reserve(rows_.size());
  for (std::size_t p : pivots_) out.push_back(v.coeff(p, field_));
  return out;
}

bool Subspace::is_homogeneous() const {
  return std::all_of(rows_.begin(), rows_.end(), [&](const SparseVector& r) { return r.is_homogeneous(*ambient_); });
}

GradedDim Subspace::graded_dim() const {
  GradedDim d;
  for (const auto& r : rows_) {
    auto p = r.parity(*ambient_);
    if (!p) throw std::logic_error("subspace has no parity-homogeneous echelon basis");
    (*p ? d.odd : d.even)++;
  }
  return d;
}

Subspace Subspace::operator+(const Subspace& other) const {
  std::vector<SparseVector> all = rows_;
  all.insert(all.end(), other.rows_.begin(), other.rows_.end());
  return span(ambient_, field_, std::move(all));
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.field_ != b.field_) return false;
  if (a.ambient_->dim() != b.ambient_->dim()) return false;
  if (!std::equal(a.ambient_->parities().begin(), a.ambient_->parities().end(), b.ambient_->parities().begin()))
    return false;
  return a.rows_ == b.rows_;
}

// ------------------------------------------------------------ QuotientSpace

QuotientSpace::QuotientSpace(Subspace sub) : sub_(std::move(sub)) {
  if (!sub_.is_homogeneous())
    throw std::invalid_argument("graded quotient requested by a subspace without a parity-homogeneous basis");
  const auto& amb = sub_.ambient();
  quotient_index_.assign(amb.dim(), -1);
  std::vector<bool> is_pivot(amb.dim(), false);
  for (std::size_t p : sub_.pivots()) is_pivot[p] = true;
  std::vector<std::string> labels;
  std::vector<std::uint8_t> parities;
  for (std::size_t c = 0; c < amb.dim(); ++c) {
    if (is_pivot[c]) continue;
    quotient_index_[c] = static_cast<std::int64_t>(section_.size());
    section_.push_back(c);
    labels.push_back(amb.label(c));
    parities.push_back(static_cast<std::uint8_t>(amb.parity(c)));
  }
  space_ = std::make_shared<const GradedSpace>(std::move(labels), std::move(parities));
}

SparseVector QuotientSpace::project(const SparseVector& v) const {
  SparseVector r = sub_.residue(v);
  std::vector<SparseVector::Entry> out;
  out.reserve(r.nnz());
  for (const auto& [c, x] : r) {
    std::int64_t q = quotient_index_[c];
    if (q < 0) throw std::logic_error("residue touches a pivot coordinate");
    out.emplace_back(static_cast<std::size_t>(q), x);
  }
  return SparseVector(std::move(out));
}

SparseVector QuotientSpace::lift(const SparseVector& q) const {
  std::vector<SparseVector::Entry> out;
  out.reserve(q.nnz());
  for (const auto& [i, x] : q) out.emplace_back(section_.at(i), x);
  return SparseVector(std::move(out));
}

// --------------------------------------------------------- kernel/quotient

Subspace kernel(const SparseMatrix& m, SpacePtr domain) {
  if (m.cols() != domain->dim())
    throw std::invalid_argument("kernel: matrix has " + std::to_string(m.cols()) + " columns but domain has dimension " +
                                std::to_string(domain->dim()));
  auto rows = row_reduce(m.row_vectors(), m.cols(), m.field());
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& r : rows) is_pivot[r.leading()] = true;
  std::vector<std::vector<SparseVector::Entry>> gens(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) gens[c].emplace_back(c, Scalar::one(m.field()));
  for (const auto& r : rows) {
    std::size_t p = r.leading();
    for (const auto& [c, x] : r)
      if (c != p) gens[c].emplace_back(p, -x);
  }
  std::vector<SparseVector> vectors;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) vectors.emplace_back(std::move(gens[c]));
  return Subspace::span(std::move(domain), m.field(), std::move(vectors));
}

QuotientSpace quotient(SpacePtr ambient, const Subspace& sub) {
  if (sub.ambient().dim() != ambient->dim()) throw std::invalid_argument("quotient: subspace lives elsewhere");
  return QuotientSpace(sub);
}

}  // namespace qh
