#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "queerhom/linalg.hpp"

using namespace qh;

namespace {

const FieldSpec Q = FieldSpec::rationals();

SparseVector vec(const std::vector<long>& xs, const FieldSpec& f = Q) {
  std::vector<SparseVector::Entry> e;
  for (std::size_t k = 0; k < xs.size(); ++k) e.emplace_back(k, Scalar::from_int(f, xs[k]));
  return SparseVector(std::move(e));
}

SpacePtr space(std::size_t even, std::size_t odd = 0) {
  std::vector<std::uint8_t> p(even, 0);
  p.insert(p.end(), odd, 1);
  return std::make_shared<const GradedSpace>(GradedSpace::anonymous(p));
}

// Integer matrix of prescribed rank: random sparse combinations of `rank` base rows,
// optionally confined to two column blocks.
std::vector<std::vector<long>> random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                                 std::size_t rank, bool blocks) {
  std::uniform_int_distribution<long> coef(-3, 3);
  std::vector<std::vector<long>> base(rank, std::vector<long>(cols, 0));
  for (std::size_t b = 0; b < rank; ++b) {
    std::size_t lo = 0, hi = cols;
    if (blocks) {
      if (b % 2) lo = cols / 2; else hi = cols / 2;
    }
    for (std::size_t k = lo; k < hi; ++k)
      if (rng() % 3 == 0) base[b][k] = coef(rng);
  }
  std::vector<std::vector<long>> m(rows, std::vector<long>(cols, 0));
  for (auto& row : m)
    for (std::size_t b = 0; b < rank; ++b)
      if (rng() % 2) {
        long c = coef(rng);
        for (std::size_t k = 0; k < cols; ++k) row[k] += c * base[b][k];
      }
  return m;
}

std::vector<SparseVector> to_rows(const std::vector<std::vector<long>>& m, const FieldSpec& f = Q) {
  std::vector<SparseVector> out;
  for (const auto& r : m) out.push_back(vec(r, f));
  return out;
}

oracle::Dense to_dense(const std::vector<std::vector<long>>& m) {
  oracle::Dense d;
  for (const auto& r : m) {
    oracle::Row row;
    for (long x : r) row.emplace_back(x);
    d.push_back(row);
  }
  return d;
}

void check_rref_shape(const std::vector<SparseVector>& rows) {
  std::size_t last = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    REQUIRE_FALSE(rows[i].empty());
    CHECK(rows[i].leading_value().is_one());
    if (i) CHECK(rows[i].leading() > last);
    last = rows[i].leading();
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (j != i) CHECK(rows[j].find(rows[i].leading()) == nullptr);
  }
}

}  // namespace

TEST_CASE("rref examples") {
  auto id = SparseMatrix::from_rows(3, Q, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
  auto [r1, k1] = rref(id);
  CHECK(k1 == 3);
  CHECK(r1 == id);
  auto [r2, k2] = rref(SparseMatrix::from_rows(2, Q, {vec({1, 2}), vec({2, 4})}));
  CHECK(k2 == 1);
  CHECK(r2.row(0) == vec({1, 2}));
  CHECK(r2.row(1).empty());
  FieldSpec f5 = FieldSpec::prime(5);
  auto [r3, k3] = rref(SparseMatrix::from_rows(2, f5, {vec({2, 0}, f5), vec({0, 3}, f5)}));
  CHECK(k3 == 2);
  CHECK(r3.row(0) == vec({1, 0}, f5));
  CHECK(r3.row(1) == vec({0, 1}, f5));
}

TEST_CASE("kernel examples") {
  auto zero = SparseMatrix(1, 4, Q);
  CHECK(kernel(zero, space(4)).dim() == 4);
  auto id = SparseMatrix::from_rows(3, Q, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
  CHECK(kernel(id, space(3)).dim() == 0);
  auto sum = SparseMatrix::from_rows(2, Q, {vec({1, 1})});
  Subspace k = kernel(sum, space(2));
  CHECK(k == Subspace::span(space(2), Q, {vec({1, -1})}));
}

TEST_CASE("quotient and graded dimension examples") {
  CHECK(quotient(space(2, 2), Subspace::zero(space(2, 2), Q)).graded_dim() == GradedDim{2, 2});
  CHECK(quotient(space(2), Subspace::span(space(2), Q, {vec({1, 1})})).graded_dim() == GradedDim{1, 0});
  CHECK(quotient(space(1), Subspace::span(space(1), Q, {vec({3})})).graded_dim() == GradedDim{0, 0});
  CHECK(Subspace::zero(space(3, 2), Q).graded_dim() == GradedDim{0, 0});
  CHECK(Subspace::whole(space(3, 2), Q).graded_dim() == GradedDim{3, 2});
  // supertrace on gl_{1|1}: basis e11, e22 (even), e12, e21 (odd)
  auto str = SparseMatrix::from_rows(4, Q, {vec({1, -1, 0, 0})});
  CHECK(kernel(str, space(2, 2)).graded_dim() == GradedDim{1, 2});
}

TEST_CASE("graded spaces reject bad input") {
  CHECK_THROWS_AS(GradedSpace({"a", "a"}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GradedSpace({"a", "b"}, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS((GradedDim{1, 0} - GradedDim{0, 1}), std::underflow_error);
  CHECK_THROWS_AS(SparseMatrix::from_triplets(2, 2, Q, {{0, 0, Scalar::one(Q)}, {0, 0, Scalar::one(Q)}}),
                  std::invalid_argument);
}

TEST_CASE("sparse vectors merge duplicates and drop zeros") {
  SparseVector v({{3, Scalar::from_int(Q, 2)}, {1, Scalar::one(Q)}, {3, Scalar::from_int(Q, -2)}});
  CHECK(v.nnz() == 1);
  CHECK(v.leading() == 1);
  auto sp = space(1, 1);
  CHECK(vec({1, 0}).parity(*sp) == std::optional<unsigned>(0));
  CHECK_FALSE(vec({1, 1}).parity(*sp).has_value());
}

TEST_CASE("rank agrees with a dense oracle on random matrices") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    std::size_t rows = 2 + rng() % 70, cols = 2 + rng() % 40, rk = 1 + rng() % std::min(rows, cols);
    bool blocks = t % 3 == 0;
    auto m = random_int_matrix(rng, rows, cols, rk, blocks);
    CAPTURE(rows);
    CAPTURE(cols);
    auto reduced = row_reduce(to_rows(m), cols, Q);
    CHECK(reduced.size() == oracle::dense_rank(to_dense(m)));
    check_rref_shape(reduced);
    CHECK(rank(SparseMatrix::from_rows(cols, Q, to_rows(m))) == reduced.size());

    FieldSpec fp = FieldSpec::prime(10007);
    std::vector<std::vector<std::int64_t>> mi;
    for (auto& r : m) mi.emplace_back(r.begin(), r.end());
    auto red_p = row_reduce(to_rows(m, fp), cols, fp);
    CHECK(red_p.size() == oracle::dense_rank_mod(mi, 10007));
    CHECK(red_p.size() <= reduced.size());
  }
}

TEST_CASE("rank over F_p never exceeds rank over Q") {
  // det = 5 drops the rank mod 5 only
  auto m = std::vector<std::vector<long>>{{1, 1}, {1, 6}};
  CHECK(row_reduce(to_rows(m), 2, Q).size() == 2);
  CHECK(row_reduce(to_rows(m, FieldSpec::prime(5)), 2, FieldSpec::prime(5)).size() == 1);
  CHECK(row_reduce(to_rows(m, FieldSpec::prime(7)), 2, FieldSpec::prime(7)).size() == 2);
}

TEST_CASE("echelon form is canonical and idempotent") {
  std::mt19937_64 rng(99);
  for (auto f : {Q, FieldSpec::gaussian_rationals(), FieldSpec::prime(101)}) {
    CAPTURE(f.name());
    for (int t = 0; t < 25; ++t) {
      std::size_t rows = 3 + rng() % 50, cols = 3 + rng() % 30, rk = 1 + rng() % std::min(rows, cols);
      auto m = random_int_matrix(rng, rows, cols, rk, t % 2 == 0);
      auto base = row_reduce(to_rows(m, f), cols, f);
      CHECK(row_reduce(base, cols, f) == base);

      auto shuffled = to_rows(m, f);
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (auto& r : shuffled) r = r.scaled(Scalar::from_int(f, 1 + static_cast<long>(rng() % 5)));
      for (std::size_t k = 0; k + 1 < shuffled.size(); ++k) shuffled[k].add_scaled(shuffled[k + 1], Scalar::from_int(f, -2));
      shuffled.push_back(SparseVector());
      CHECK(row_reduce(shuffled, cols, f) == base);
    }
  }
}

TEST_CASE("kernel dimension plus rank equals the column count") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    std::size_t rows = 1 + rng() % 30, cols = 1 + rng() % 30, rk = 1 + rng() % std::min(rows, cols);
    auto m = random_int_matrix(rng, rows, cols, rk, false);
    auto mat = SparseMatrix::from_rows(cols, Q, to_rows(m));
    Subspace k = kernel(mat, space(cols));
    CHECK(k.dim() + rank(mat) == cols);
    for (const auto& v : k.basis()) CHECK(mat.apply(v).empty());
  }
}

TEST_CASE("quotients are additive and the section splits the projection") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    std::size_t even = 1 + rng() % 8, odd = rng() % 8, n = even + odd;
    auto sp = space(even, odd);
    std::vector<SparseVector> gens;
    for (int g = 0; g < 4; ++g) {
      unsigned p = rng() % 2;
      std::vector<SparseVector::Entry> e;
      for (std::size_t k = 0; k < n; ++k)
        if (sp->parity(k) == p && rng() % 2) e.emplace_back(k, Scalar::from_int(Q, static_cast<long>(rng() % 7) - 3));
      gens.emplace_back(std::move(e));
    }
    Subspace sub = Subspace::span(sp, Q, gens);
    QuotientSpace qs(sub);
    CHECK(qs.graded_dim() + sub.graded_dim() == sp->graded_dim());
    for (std::size_t c = 0; c < qs.dim(); ++c) {
      SparseVector e = SparseVector::unit(c, Q);
      CHECK(qs.project(qs.lift(e)) == e);
    }
    for (const auto& g : gens) CHECK(qs.project(g).empty());
    for (const auto& g : gens) CHECK(sub.contains(g));
    CHECK((sub + Subspace::zero(sp, Q)) == sub);
    CHECK((sub + Subspace::whole(sp, Q)) == Subspace::whole(sp, Q));
  }
}

TEST_CASE("inhomogeneous subspaces cannot be graded") {
  auto sp = space(1, 1);
  Subspace s = Subspace::span(sp, Q, {vec({1, 1})});
  CHECK_FALSE(s.is_homogeneous());
  CHECK_THROWS_AS(s.graded_dim(), std::logic_error);
  CHECK_THROWS_AS(QuotientSpace{s}, std::invalid_argument);
}

TEST_CASE("coordinates in the echelon basis") {
  auto sp = space(3);
  Subspace s = Subspace::span(sp, Q, {vec({1, 2, 0}), vec({0, 1, 1})});
  auto c = s.coordinates(vec({2, 5, 1}));
  REQUIRE(c.has_value());
  SparseVector back;
  for (std::size_t i = 0; i < c->size(); ++i) back.add_scaled(s.basis()[i], (*c)[i]);
  CHECK(back == vec({2, 5, 1}));
  CHECK_FALSE(s.coordinates(vec({0, 0, 1})).has_value());
}

TEST_CASE("mixed fields are rejected") {
  CHECK_THROWS_AS(row_reduce({vec({1, 2}), vec({1, 1}, FieldSpec::prime(7))}, 2, Q), std::invalid_argument);
}
