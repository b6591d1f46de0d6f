#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "queerhom/lie.hpp"

using namespace qh;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec Qi = FieldSpec::gaussian_rationals();

SparseVector e(std::size_t i, long c = 1, const FieldSpec& f = Q) {
  return SparseVector::unit(i, f).scaled(Scalar::from_int(f, c));
}

template <class T>
std::shared_ptr<const T> share(T x) {
  return std::make_shared<const T>(std::move(x));
}

// q_n(R) brackets recomputed with explicit (2n x 2n) matrices over R.
struct BlockOracle {
  const SuperAlgebra& r;
  unsigned n;
  std::size_t d;
  using Mat = std::vector<oracle::Row>;  // (2n)^2 entries, each a dense R-vector

  Mat zero() const { return Mat(4 * n * n, oracle::Row(d, 0)); }
  oracle::Row rho(std::size_t a) const {
    oracle::Row v(d, 0);
    v[a] = r.parity(a) ? -1 : 1;
    return v;
  }
  Mat basis(std::size_t idx) const {
    Mat m = zero();
    const std::size_t half = std::size_t{n} * n * d;
    const bool w = idx >= half;
    std::size_t k = idx % half, i = k / (n * d), j = (k / d) % n, a = k % d;
    oracle::Row one(d, 0);
    one[a] = 1;
    if (!w) {
      m[i * 2 * n + j] = one;
      m[(n + i) * 2 * n + (n + j)] = rho(a);
    } else {
      m[i * 2 * n + (n + j)] = one;
      m[(n + i) * 2 * n + j] = rho(a);
    }
    return m;
  }
  unsigned parity(std::size_t idx) const {
    const std::size_t half = std::size_t{n} * n * d;
    return (r.parity(idx % d) + (idx >= half ? 1 : 0)) % 2;
  }
  Mat mul(const Mat& x, const Mat& y) const {
    const oracle::Table t = oracle::table_of(r);
    Mat z = zero();
    for (unsigned p = 0; p < 2 * n; ++p)
      for (unsigned q = 0; q < 2 * n; ++q)
        for (unsigned k = 0; k < 2 * n; ++k)
          for (std::size_t a = 0; a < d; ++a) {
            if (x[p * 2 * n + k][a] == 0) continue;
            for (std::size_t b = 0; b < d; ++b) {
              if (y[k * 2 * n + q][b] == 0) continue;
              for (std::size_t c = 0; c < d; ++c) z[p * 2 * n + q][c] += x[p * 2 * n + k][a] * y[k * 2 * n + q][b] * t.at(a, b, c);
            }
          }
    return z;
  }
  // coordinates on the u/w basis, after checking the queer block shape
  std::vector<mpq_class> coords(const Mat& m) const {
    std::vector<mpq_class> out(2 * std::size_t{n} * n * d, 0);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j)
        for (std::size_t a = 0; a < d; ++a) {
          const mpq_class& A = m[i * 2 * n + j][a];
          const mpq_class& B = m[i * 2 * n + (n + j)][a];
          REQUIRE(m[(n + i) * 2 * n + (n + j)][a] == (r.parity(a) ? -A : A));
          REQUIRE(m[(n + i) * 2 * n + j][a] == (r.parity(a) ? -B : B));
          out[(i * n + j) * d + a] = A;
          out[std::size_t{n} * n * d + (i * n + j) * d + a] = B;
        }
    return out;
  }
  std::vector<mpq_class> bracket(std::size_t x, std::size_t y) const {
    Mat a = basis(x), b = basis(y);
    Mat ab = mul(a, b), ba = mul(b, a);
    int s = (parity(x) * parity(y)) % 2 ? -1 : 1;
    for (std::size_t k = 0; k < ab.size(); ++k)
      for (std::size_t c = 0; c < d; ++c) ab[k][c] -= s * ba[k][c];
    return coords(ab);
  }
};

std::vector<mpq_class> dense(const SparseVector& v, std::size_t n) {
  std::vector<mpq_class> out(n, 0);
  for (const auto& [k, c] : v) out[k] = oracle::q(c);
  return out;
}

}  // namespace

TEST_CASE("Lie algebras of associative algebras") {
  LieSuperAlgebra k = lie_from_assoc(base_field(Q));
  CHECK(k.is_abelian());
  CHECK(k.graded_dim() == GradedDim{1, 0});
  LieSuperAlgebra c = lie_from_assoc(q1(Q));
  CHECK(c.bracket(1, 1) == e(0, 2));
  CHECK(c.bracket(0, 1).empty());
  CHECK(c.bracket(0, 0).empty());
  LieSuperAlgebra gl = lie_from_assoc(matrix_algebra(2, Q));
  CHECK(gl.bracket(0, 1) == e(1));
}

TEST_CASE("general linear superalgebras") {
  CHECK(build_gl(1, 1, base_field(Q)).graded_dim() == GradedDim{2, 2});
  CHECK(build_gl(2, 0, grassmann(1, Q)).graded_dim() == GradedDim{4, 4});
  GlBasis b{1, 1, 1};
  LieSuperAlgebra g = build_gl(1, 1, base_field(Q));
  CHECK(g.bracket(b.index(0, 1, 0), b.index(1, 0, 0)) == e(b.index(0, 0, 0)) + e(b.index(1, 1, 0)));
  CHECK(g.space().label(b.index(0, 1, 0)) == "e[1,2](1)");
}

TEST_CASE("queer brackets on small cases") {
  QueerBasis b1{1, 1};
  LieSuperAlgebra q = build_q(1, base_field(Q));
  CHECK(q.bracket(b1.w(0, 0, 0), b1.w(0, 0, 0)) == e(b1.u(0, 0, 0), 2));
  QueerBasis b2{2, 1};
  LieSuperAlgebra q2 = build_q(2, base_field(Q));
  CHECK(q2.bracket(b2.u(0, 1, 0), b2.u(1, 0, 0)) == e(b2.u(0, 0, 0)) - e(b2.u(1, 1, 0)));

  SuperAlgebra g = grassmann(1, Q);
  QueerBasis bg{1, 2};
  LieSuperAlgebra qg = build_q(1, g);
  CHECK(qg.bracket(bg.u(0, 0, 1), bg.w(0, 0, 1)).empty());
  CHECK(qg.bracket(bg.w(0, 0, 1), bg.w(0, 0, 1)).empty());
  CHECK(qg.bracket(bg.w(0, 0, 0), bg.w(0, 0, 1)) == e(bg.u(0, 0, 1), -2));
  for (std::size_t x = 0; x < bg.dim() / 2; ++x)
    for (std::size_t y = 0; y < bg.dim() / 2; ++y) CHECK(qg.bracket(x, y).empty());
}

TEST_CASE("queer brackets agree with explicit block matrices") {
  std::vector<SuperAlgebra> rs = {base_field(Q), grassmann(1, Q), q1(Q), matrix_algebra(2, Q), truncated_poly(2, Q)};
  for (const auto& r : rs)
    for (unsigned n : {1u, 2u}) {
      CAPTURE(r.name());
      CAPTURE(n);
      LieSuperAlgebra q = build_q(n, r);
      LieSuperAlgebra qf = build_q_from_formulas(n, r);
      CHECK(q.same_structure(qf));
      BlockOracle o{r, n, r.dim()};
      for (std::size_t x = 0; x < q.dim(); ++x) {
        CHECK(q.parity(x) == o.parity(x));
        for (std::size_t y = 0; y < q.dim(); ++y) CHECK(dense(q.bracket(x, y), q.dim()) == o.bracket(x, y));
      }
    }
}

TEST_CASE("matrix element conversions round trip") {
  std::mt19937_64 rng(1);
  for (const auto& r : {grassmann(1, Q), matrix_algebra(2, Q)}) {
    unsigned n = 2;
    QueerBasis b{n, r.dim()};
    std::vector<SparseVector::Entry> ent;
    for (std::size_t k = 0; k < b.dim(); ++k)
      if (rng() % 2) ent.emplace_back(k, Scalar::from_int(Q, static_cast<long>(rng() % 9) - 4));
    SparseVector v(std::move(ent));
    QueerElement qe = QueerElement::from_q(v, n, r.dim());
    MatrixElement m = qe.to_matrix(r);
    CHECK(QueerElement::from_matrix(m, r).to_q(r.dim()) == v);
    CHECK(MatrixElement::from_gl(m.to_gl(r.dim()), n, n, r.dim()).to_gl(r.dim()) == m.to_gl(r.dim()));
  }
  MatrixElement bad = MatrixElement::zero(1, 1);
  bad.at(0, 0) = e(0);
  CHECK_THROWS_AS(QueerElement::from_matrix(bad, base_field(Q)), std::logic_error);
}

TEST_CASE("derived subalgebras and the trace characterization") {
  CHECK(derived_subalgebra(oracle::abelian(3, 2)).dim() == 0);
  CHECK(derived_subalgebra(build_q(3, base_field(Q))).dim() == 17);
  CHECK(build_sq_by_characterization(3, base_field(Q)).graded_dim() == GradedDim{9, 8});
  CHECK(build_sq_by_characterization(3, grassmann(1, Q)).graded_dim() == GradedDim{17, 17});
  for (const auto& r : {base_field(Q), grassmann(1, Q), truncated_poly(2, Q), group_algebra(3, Q), matrix_algebra(2, Q)})
    for (unsigned n : {1u, 2u, 3u}) {
      CAPTURE(r.name());
      CAPTURE(n);
      CHECK(derived_subalgebra(build_q(n, r)) == build_sq_by_characterization(n, r));
    }
}

TEST_CASE("sq_1 is the diagonal and abelian") {
  SuperAlgebra g = grassmann(1, Q);
  SubLieAlgebra sq = build_sq(1, g);
  QueerBasis b{1, 2};
  Subspace diag = Subspace::span(build_q(1, g).space_ptr(), Q, {e(b.u(0, 0, 0)), e(b.u(0, 0, 1))});
  CHECK(sq.subspace == diag);
  CHECK(sq.algebra.is_abelian());
  CHECK(derived_subalgebra(sq.algebra).dim() == 0);
  CHECK_FALSE(is_perfect(sq.algebra));
}

TEST_CASE("perfectness") {
  CHECK(is_perfect(build_sq(2, base_field(Q)).algebra));
  CHECK(is_perfect(build_sq(3, grassmann(1, Q)).algebra));
  CHECK_FALSE(is_perfect(build_q(2, base_field(Q))));
  CHECK_FALSE(is_perfect(oracle::abelian(1, 0)));
}

TEST_CASE("special linear subspaces") {
  SuperAlgebra s = tensor(base_field(Q), q1(Q));
  CHECK(build_sl(3, s).graded_dim() == GradedDim{9, 8});
  CHECK(build_sl(2, base_field(Q)).dim() == 3);
  CHECK(build_sl(2, matrix_algebra(2, Q)).dim() == 15);
}

TEST_CASE("q_n(R) is gl_n(R (x) Q1)") {
  VerifiedHomomorphism h2 = iso_q_to_gl(2, base_field(Q));
  CHECK(h2.is_isomorphism());
  CHECK(h2.pairs_checked() == 64);
  VerifiedHomomorphism h1 = iso_q_to_gl(1, grassmann(1, Q));
  CHECK(h1.parity_preserving());
  CHECK(h1.bracket_preserving());
  CHECK(h1.injective());
  CHECK(h1.surjective());
  VerifiedHomomorphism h3 = iso_q_to_gl(3, base_field(Q));
  CHECK(h3.image(derived_subalgebra(h3.source())) == build_sl(3, tensor(base_field(Q), q1(Q))));
}

TEST_CASE("q_n(R (x) Q1) is gl_{n|n}(R) when sqrt(-1) exists") {
  CHECK(iso_qQ1_to_glnn(1, base_field(Qi)).is_isomorphism());
  CHECK(iso_qQ1_to_glnn(2, base_field(Qi)).is_isomorphism());
  CHECK(iso_qQ1_to_glnn(1, grassmann(1, Qi)).is_isomorphism());
  CHECK(iso_qQ1_to_glnn(1, grassmann(1, FieldSpec::prime(13))).is_isomorphism());
  CHECK_THROWS_AS(iso_qQ1_to_glnn(1, base_field(Q)), std::invalid_argument);
}

TEST_CASE("loop algebras") {
  for (const auto& r : {grassmann(1, Q), truncated_poly(2, Q), grassmann(2, Q)}) {
    CAPTURE(r.name());
    VerifiedHomomorphism h = loop_relabeling(2, r);
    CHECK(h.is_isomorphism());
    CHECK(h.source().validate().ok());
  }
  // the Koszul sign matters once R has odd elements
  CHECK_FALSE(loop_relabeling(2, grassmann(1, Q), false).bracket_preserving());
  CHECK(loop_relabeling(2, truncated_poly(2, Q), false).is_isomorphism());
  CHECK(lie_tensor(oracle::abelian(2, 1), grassmann(1, Q)).is_abelian());
  CHECK_THROWS_AS(lie_tensor(build_q(1, base_field(Q)), matrix_algebra(2, Q)), std::invalid_argument);
}

TEST_CASE("centre and projective quotient") {
  SubLieAlgebra sq = build_sq(3, base_field(Q));
  Subspace scalars = scalar_matrices_q(3, base_field(Q));
  Subspace z = center(build_q(3, base_field(Q)));
  CHECK(z.contains(scalars));
  // scalars in sq coordinates
  std::vector<SparseVector> sc;
  for (const auto& v : scalars.basis()) {
    auto c = sq.subspace.coordinates(v);
    REQUIRE(c.has_value());
    std::vector<SparseVector::Entry> ent;
    for (std::size_t i = 0; i < c->size(); ++i) ent.emplace_back(i, (*c)[i]);
    sc.emplace_back(std::move(ent));
  }
  Subspace sc_sub = Subspace::span(sq.algebra.space_ptr(), Q, sc);
  CHECK(center(sq.algebra).contains(sc_sub));
  LieSuperAlgebra psq = quotient_lie(sq.algebra, sc_sub, "psq");
  CHECK(psq.graded_dim() == GradedDim{8, 8});
  CHECK(psq.validate().ok());
  // a non-ideal
  LieSuperAlgebra gl = build_gl(2, 0, base_field(Q));
  CHECK_THROWS_AS(quotient_lie(gl, Subspace::span(gl.space_ptr(), Q, {e(1)})), std::invalid_argument);
}

TEST_CASE("subalgebras must be closed") {
  LieSuperAlgebra gl = build_gl(2, 0, base_field(Q));
  GlBasis b{2, 0, 1};
  CHECK_THROWS_AS(induced_subalgebra(gl, Subspace::span(gl.space_ptr(), Q, {e(b.index(0, 1, 0)), e(b.index(1, 0, 0))}), "x"),
                  std::logic_error);
  SubLieAlgebra sl = induced_subalgebra(gl, build_sl(2, base_field(Q)), "sl2");
  CHECK(sl.algebra.validate().ok());
}

TEST_CASE("validation catches broken brackets") {
  // [a,b] = a, [b,c] = b, [a,c] = 0 is antisymmetric but Jacobi gives a on (a,b,c)
  std::vector<SparseVector> t(9);
  t[0 * 3 + 1] = e(0);
  t[1 * 3 + 0] = e(0, -1);
  t[1 * 3 + 2] = e(1);
  t[2 * 3 + 1] = e(1, -1);
  LieSuperAlgebra bad("bad", Q, GradedSpace({"a", "b", "c"}, {0, 0, 0}), t);
  auto rep = bad.validate();
  bool jacobi = false;
  for (const auto& is : rep.issues) jacobi |= is.kind == LieIssue::Kind::jacobi;
  CHECK(jacobi);
  t[0 * 3 + 2] = e(1);
  t[2 * 3 + 0] = e(1);
  LieSuperAlgebra asym("asym", Q, GradedSpace({"a", "b", "c"}, {0, 0, 0}), t);
  bool anti = false;
  for (const auto& is : asym.validate().issues) anti |= is.kind == LieIssue::Kind::antisymmetry;
  CHECK(anti);
  // a map that doubles everything is linear and bijective but not a homomorphism
  auto sl = share(induced_subalgebra(build_gl(2, 0, base_field(Q)), build_sl(2, base_field(Q)), "sl2").algebra);
  std::vector<SparseVector> cols;
  for (std::size_t k = 0; k < 3; ++k) cols.push_back(e(k, 2));
  VerifiedHomomorphism dbl(sl, sl, cols);
  CHECK_FALSE(dbl.bracket_preserving());
  CHECK(dbl.injective());
  CHECK_FALSE(dbl.failures().empty());
}

TEST_CASE("super Jacobi and antisymmetry on every constructed algebra") {
  std::vector<SuperAlgebra> rs = {base_field(Q), q1(Q), grassmann(1, Q), grassmann(2, Q), truncated_poly(2, Q),
                                  group_algebra(3, Q), matrix_algebra(2, Q), square_zero_plane(Q)};
  for (const auto& r : rs) {
    CAPTURE(r.name());
    CHECK(lie_from_assoc(r).validate().ok());
    CHECK(build_gl(1, 1, r).validate().ok());
    for (unsigned n : {1u, 2u}) {
      CHECK(build_q(n, r).validate().ok());
      CHECK(build_sq(n, r).algebra.validate().ok());
    }
    if (r.dim() <= 2) CHECK(build_sq(3, r).algebra.validate().ok());
    SuperAlgebra s = tensor(r, q1(Q));
    CHECK(induced_subalgebra(build_gl(2, 0, s), build_sl(2, s), "sl").algebra.validate().ok());
    if (r.is_super_commutative()) CHECK(lie_tensor(build_q(2, base_field(Q)), r).validate().ok());
  }
  CHECK(build_gl(2, 1, grassmann(1, Q)).validate().ok());
}
