#include <doctest.h>

#include <random>

#include "queerhom/scalar.hpp"

using namespace qh;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec Qi = FieldSpec::gaussian_rationals();

Scalar random_scalar(std::mt19937_64& rng, const FieldSpec& f) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 17);
  Scalar re = Scalar::from_rational(f, mpq_class(num(rng), den(rng)));
  if (f.kind == FieldKind::gaussian_rationals)
    re += Scalar::from_rational(f, mpq_class(num(rng), den(rng))) * Scalar::sqrt_minus_one(f);
  return re;
}

}  // namespace

TEST_CASE("parse reduces fractions and reads gaussian integers") {
  CHECK(parse_scalar("3/6", Q) == Scalar::from_rational(Q, mpq_class(1, 2)));
  CHECK(parse_scalar("3/6", Q).to_string() == "1/2");
  for (auto f : {Q, Qi, FieldSpec::prime(7)}) CHECK(parse_scalar("0", f).is_zero());
  Scalar z = parse_scalar("2+3i", Qi);
  CHECK(z * z == parse_scalar("-5+12i", Qi));
  CHECK(parse_scalar("-i", Qi) * parse_scalar("i", Qi) == Scalar::one(Qi));
  CHECK(parse_scalar("1/2-3/4i", Qi) == parse_scalar("2/4", Qi) - parse_scalar("3/4i", Qi));
  CHECK(parse_scalar("-4", FieldSpec::prime(5)).to_string() == "1");
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_scalar("", Q), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1/0", Q), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("abc", Q), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1+i", Q), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("2/5", FieldSpec::prime(5)), std::invalid_argument);
}

TEST_CASE("inverses") {
  CHECK(invert(Scalar::from_int(Q, 2)) == Scalar::from_rational(Q, mpq_class(1, 2)));
  CHECK(invert(Scalar::from_int(FieldSpec::prime(5), 2)).to_string() == "3");
  CHECK(invert(Scalar::sqrt_minus_one(Qi)) == -Scalar::sqrt_minus_one(Qi));
  CHECK_THROWS(invert(Scalar::zero(Q)));
  CHECK_THROWS(invert(Scalar::zero(FieldSpec::prime(11))));
}

TEST_CASE("two is invertible in every admissible field") {
  for (auto f : {Q, Qi, FieldSpec::prime(3), FieldSpec::prime(10007), FieldSpec::prime(2147483647)}) {
    Scalar two = Scalar::from_int(f, 2);
    CHECK((two * invert(two)).is_one());
  }
  CHECK_THROWS_AS(FieldSpec::prime(2), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::prime(15), std::invalid_argument);
}

TEST_CASE("field specs") {
  CHECK(FieldSpec::parse("Q") == Q);
  CHECK(FieldSpec::parse("Qi") == Qi);
  CHECK(FieldSpec::parse("Fp:13") == FieldSpec::prime(13));
  CHECK_THROWS(FieldSpec::parse("R"));
  CHECK(Qi.has_sqrt_minus_one());
  CHECK_FALSE(Q.has_sqrt_minus_one());
  CHECK(FieldSpec::prime(13).has_sqrt_minus_one());
  CHECK_FALSE(FieldSpec::prime(7).has_sqrt_minus_one());
  for (auto f : {Qi, FieldSpec::prime(13), FieldSpec::prime(10009)}) {
    Scalar i = Scalar::sqrt_minus_one(f);
    CHECK(i * i == -Scalar::one(f));
  }
  CHECK_FALSE(FieldSpec::prime(3).coprime_to(3));
  CHECK(FieldSpec::prime(3).coprime_to(2));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20240611);
  for (auto f : {Q, Qi, FieldSpec::prime(10007), FieldSpec::prime(13)}) {
    CAPTURE(f.name());
    for (int t = 0; t < 300; ++t) {
      Scalar a = f.kind == FieldKind::prime_field ? Scalar::from_int(f, static_cast<long>(rng() % 100000))
                                                  : random_scalar(rng, f);
      Scalar b = f.kind == FieldKind::prime_field ? Scalar::from_int(f, static_cast<long>(rng() % 100000))
                                                  : random_scalar(rng, f);
      Scalar c = f.kind == FieldKind::prime_field ? Scalar::from_int(f, static_cast<long>(rng() % 100000))
                                                  : random_scalar(rng, f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Scalar::zero(f));
      CHECK(a + Scalar::zero(f) == a);
      CHECK(a * Scalar::one(f) == a);
      if (!a.is_zero()) {
        CHECK((a * invert(a)).is_one());
        CHECK((b / a) * a == b);
      }
      Scalar d = a;
      d.sub_mul(b, c);
      CHECK(d == a - b * c);
    }
  }
}

TEST_CASE("format and parse round trip") {
  std::mt19937_64 rng(7);
  for (auto f : {Q, Qi}) {
    for (int t = 0; t < 200; ++t) {
      Scalar a = random_scalar(rng, f);
      CHECK(parse_scalar(a.to_string(), f) == a);
    }
  }
  FieldSpec p = FieldSpec::prime(101);
  for (long v = 0; v < 101; ++v) {
    Scalar a = Scalar::from_int(p, v);
    CHECK(parse_scalar(a.to_string(), p) == a);
  }
}

TEST_CASE("reduction mod p") {
  CHECK(Scalar::from_rational(Q, mpq_class(1, 2)).reduce_mod(5, 2) == std::optional<std::uint64_t>(3));
  CHECK_FALSE(Scalar::from_rational(Q, mpq_class(1, 5)).reduce_mod(5, 2).has_value());
  std::uint64_t r = sqrt_minus_one_mod(13);
  CHECK(r * r % 13 == 12);
  CHECK(sqrt_minus_one_mod(7) == 0);
}
