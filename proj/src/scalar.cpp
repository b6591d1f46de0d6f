#include "queerhom/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace qh {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

[[noreturn]] void mixed_fields() { throw std::invalid_argument("arithmetic between scalars of different fields"); }

std::uint64_t mpz_mod_u(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

std::optional<std::uint64_t> rational_mod(const mpq_class& q, std::uint64_t p) {
  std::uint64_t den = mpz_mod_u(q.get_den(), p);
  if (den == 0) return std::nullopt;
  return mpz_mod_u(q.get_num(), p) * inv_mod(den, p) % p;
}

mpq_class parse_rational(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("malformed scalar: '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  std::string num;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') num += '-';
    ++pos;
  }
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) num += text[pos++];
  if (pos == start) throw bad();
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den.clear();
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) den += text[pos++];
    if (den.empty()) throw bad();
  }
  if (pos != text.size()) throw bad();
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in scalar '" + std::string(text) + "'");
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

std::string format_gaussian(const Gaussian& g) {
  if (g.im == 0) return g.re.get_str();
  auto coef = [](const mpq_class& c) -> std::string {
    if (c == 1) return "";
    if (c == -1) return "-";
    return c.get_str();
  };
  if (g.re == 0) return coef(g.im) + "i";
  mpq_class mag = abs(g.im);
  return g.re.get_str() + (g.im > 0 ? "+" : "-") + (mag == 1 ? std::string() : mag.get_str()) + "i";
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("division by zero");
  return pow_mod(a, p - 2, p);
}

std::uint64_t sqrt_minus_one_mod(std::uint64_t p) {
  if (p % 4 != 1) return 0;
  for (std::uint64_t g = 2; g < p; ++g) {
    if (pow_mod(g, (p - 1) / 2, p) == p - 1) {
      std::uint64_t s = pow_mod(g, (p - 1) / 4, p);
      return std::min(s, p - s);
    }
  }
  return 0;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p == 2) throw std::invalid_argument("characteristic 2 is not supported (2 must be invertible)");
  if (p >= (1ULL << 31) || !is_prime(p))
    throw std::invalid_argument("F_p needs an odd prime p < 2^31, got " + std::to_string(p));
  return {FieldKind::prime_field, p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text == "Qi") return gaussian_rationals();
  if (text.starts_with("Fp:")) {
    std::string digits(text.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed field '" + std::string(text) + "'");
    return prime(std::stoull(digits));
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected Q, Qi or Fp:P)");
}

bool FieldSpec::has_sqrt_minus_one() const {
  switch (kind) {
    case FieldKind::rationals: return false;
    case FieldKind::gaussian_rationals: return true;
    case FieldKind::prime_field: return characteristic % 4 == 1;
  }
  return false;
}

bool FieldSpec::coprime_to(std::uint64_t n) const {
  return kind != FieldKind::prime_field || n % characteristic != 0;
}

std::string FieldSpec::name() const {
  switch (kind) {
    case FieldKind::rationals: return "Q";
    case FieldKind::gaussian_rationals: return "Qi";
    case FieldKind::prime_field: return "Fp:" + std::to_string(characteristic);
  }
  return "?";
}

Scalar Scalar::zero(const FieldSpec& field) { return from_int(field, 0); }
Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, long n) {
  return from_rational(field, mpq_class(n));
}

Scalar Scalar::from_rational(const FieldSpec& field, const mpq_class& input) {
  mpq_class q = input;
  q.canonicalize();
  switch (field.kind) {
    case FieldKind::rationals: return Scalar(Value(q));
    case FieldKind::gaussian_rationals: return Scalar(Value(Gaussian{q, 0}));
    case FieldKind::prime_field: {
      auto r = rational_mod(q, field.characteristic);
      if (!r) throw std::domain_error("denominator vanishes in " + field.name());
      return Scalar(Value(Residue{*r, field.characteristic}));
    }
  }
  return {};
}

Scalar Scalar::sqrt_minus_one(const FieldSpec& field) {
  if (field.kind == FieldKind::gaussian_rationals) return Scalar(Value(Gaussian{0, 1}));
  if (field.kind == FieldKind::prime_field && field.has_sqrt_minus_one())
    return Scalar(Value(Residue{sqrt_minus_one_mod(field.characteristic), field.characteristic}));
  throw std::domain_error("field " + field.name() + " does not contain a square root of -1");
}

FieldSpec Scalar::field() const {
  switch (value_.index()) {
    case 0: return FieldSpec::rationals();
    case 1: return FieldSpec::gaussian_rationals();
    default: return {FieldKind::prime_field, std::get<Residue>(value_).modulus};
  }
}

bool Scalar::is_zero() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  if (auto g = std::get_if<Gaussian>(&value_)) return sgn(g->re) == 0 && sgn(g->im) == 0;
  return std::get<Residue>(value_).value == 0;
}

bool Scalar::is_one() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return *q == 1;
  if (auto g = std::get_if<Gaussian>(&value_)) return g->re == 1 && sgn(g->im) == 0;
  return std::get<Residue>(value_).value == 1;
}

Scalar Scalar::operator-() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return Scalar(Value(mpq_class(-*q)));
  if (auto g = std::get_if<Gaussian>(&value_)) return Scalar(Value(Gaussian{-g->re, -g->im}));
  auto r = std::get<Residue>(value_);
  return Scalar(Value(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus}));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (value_.index() != o.value_.index()) mixed_fields();
  if (auto q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(o.value_);
  } else if (auto g = std::get_if<Gaussian>(&value_)) {
    const auto& h = std::get<Gaussian>(o.value_);
    g->re += h.re;
    g->im += h.im;
  } else {
    auto& r = std::get<Residue>(value_);
    const auto& s = std::get<Residue>(o.value_);
    if (r.modulus != s.modulus) mixed_fields();
    r.value = (r.value + s.value) % r.modulus;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (value_.index() != o.value_.index()) mixed_fields();
  if (auto q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(o.value_);
  } else if (auto g = std::get_if<Gaussian>(&value_)) {
    const auto& h = std::get<Gaussian>(o.value_);
    mpq_class re = g->re * h.re - g->im * h.im;
    mpq_class im = g->re * h.im + g->im * h.re;
    g->re = std::move(re);
    g->im = std::move(im);
  } else {
    auto& r = std::get<Residue>(value_);
    const auto& s = std::get<Residue>(o.value_);
    if (r.modulus != s.modulus) mixed_fields();
    r.value = r.value * s.value % r.modulus;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

void Scalar::sub_mul(const Scalar& b, const Scalar& c) {
  auto* q = std::get_if<mpq_class>(&value_);
  const auto* qb = std::get_if<mpq_class>(&b.value_);
  const auto* qc = std::get_if<mpq_class>(&c.value_);
  if (q && qb && qc) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), qb->get_mpq_t(), qc->get_mpq_t());
    mpq_sub(q->get_mpq_t(), q->get_mpq_t(), tmp.get_mpq_t());
    return;
  }
  *this -= b * c;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (auto q = std::get_if<mpq_class>(&a.value_)) return *q == std::get<mpq_class>(b.value_);
  if (auto g = std::get_if<Gaussian>(&a.value_)) {
    const auto& h = std::get<Gaussian>(b.value_);
    return g->re == h.re && g->im == h.im;
  }
  const auto& r = std::get<Residue>(a.value_);
  const auto& s = std::get<Residue>(b.value_);
  return r.modulus == s.modulus && r.value == s.value;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (auto q = std::get_if<mpq_class>(&value_)) return Scalar(Value(mpq_class(1 / *q)));
  if (auto g = std::get_if<Gaussian>(&value_)) {
    mpq_class norm = g->re * g->re + g->im * g->im;
    return Scalar(Value(Gaussian{g->re / norm, -g->im / norm}));
  }
  const auto& r = std::get<Residue>(value_);
  return Scalar(Value(Residue{inv_mod(r.value, r.modulus), r.modulus}));
}

std::string Scalar::to_string() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return q->get_str();
  if (auto g = std::get_if<Gaussian>(&value_)) return format_gaussian(*g);
  return std::to_string(std::get<Residue>(value_).value);
}

std::optional<std::uint64_t> Scalar::reduce_mod(std::uint64_t p, std::uint64_t sqrt_m1) const {
  if (auto q = std::get_if<mpq_class>(&value_)) return rational_mod(*q, p);
  if (auto g = std::get_if<Gaussian>(&value_)) {
    auto re = rational_mod(g->re, p);
    auto im = rational_mod(g->im, p);
    if (!re || !im || sqrt_m1 == 0) return std::nullopt;
    return (*re + *im * sqrt_m1) % p;
  }
  const auto& r = std::get<Residue>(value_);
  if (r.modulus != p) return std::nullopt;
  return r.value;
}

Scalar parse_scalar(std::string_view text, const FieldSpec& field) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("malformed scalar: empty string");

  if (text.back() != 'i') {
    mpq_class q = parse_rational(text);
    try {
      return Scalar::from_rational(field, q);
    } catch (const std::domain_error& e) {
      throw std::invalid_argument("scalar '" + std::string(text) + "': " + e.what());
    }
  }

  if (field.kind != FieldKind::gaussian_rationals)
    throw std::invalid_argument("imaginary unit in '" + std::string(text) + "' outside Q(i)");
  std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
      split = k;
      break;
    }
  }
  std::string_view real_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view imag_part = split == std::string_view::npos ? body : body.substr(split);
  mpq_class re = real_part.empty() ? mpq_class(0) : parse_rational(real_part);
  mpq_class im;
  if (imag_part.empty() || imag_part == "+") {
    im = 1;
  } else if (imag_part == "-") {
    im = -1;
  } else {
    im = parse_rational(imag_part);
  }
  Scalar s = Scalar::from_rational(field, re);
  s += Scalar::from_rational(field, im) * Scalar::sqrt_minus_one(field);
  return s;
}

Scalar invert(const Scalar& x) { return x.inverse(); }

}  // namespace qh
