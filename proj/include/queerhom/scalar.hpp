#pragma once

// Exact scalars over Q, Q(i) and F_p (p odd).  Every value carries its field,
// and arithmetic between different fields is rejected.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace qh {

enum class FieldKind { rationals, gaussian_rationals, prime_field };

struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::uint64_t characteristic = 0;  // p for prime_field, 0 otherwise

  static FieldSpec rationals() { return {}; }
  static FieldSpec gaussian_rationals() { return {FieldKind::gaussian_rationals, 0}; }
  /// Throws std::invalid_argument unless p is an odd prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q", "Qi" and "Fp:P".
  static FieldSpec parse(std::string_view text);

  bool has_sqrt_minus_one() const;
  bool coprime_to(std::uint64_t n) const;
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct Gaussian {
  mpq_class re;
  mpq_class im;
};

struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 0;
};

class Scalar {
 public:
  Scalar() = default;  // rational zero
  explicit Scalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }

  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_int(const FieldSpec& field, long n);
  static Scalar from_rational(const FieldSpec& field, const mpq_class& q);
  /// A fixed square root of -1: i in Q(i), the smaller root in F_p.
  static Scalar sqrt_minus_one(const FieldSpec& field);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// a -= b * c without temporaries on the rational path.
  void sub_mul(const Scalar& b, const Scalar& c);

  Scalar inverse() const;
  std::string to_string() const;

  /// Image under a ring map into F_p sending i to sqrt_m1.  Empty when a
  /// denominator vanishes mod p.
  std::optional<std::uint64_t> reduce_mod(std::uint64_t p, std::uint64_t sqrt_m1) const;

  const mpq_class* as_rational() const { return std::get_if<mpq_class>(&value_); }

 private:
  using Value = std::variant<mpq_class, Gaussian, Residue>;
  explicit Scalar(Value v) : value_(std::move(v)) {}
  Value value_;
};

Scalar parse_scalar(std::string_view text, const FieldSpec& field);
Scalar invert(const Scalar& x);
inline std::string format_scalar(const Scalar& x) { return x.to_string(); }

// Modular helpers shared with the elimination kernels.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
/// Square root of -1 mod p (p = 1 mod 4), or 0 if none exists.
std::uint64_t sqrt_minus_one_mod(std::uint64_t p);

}  // namespace qh
