#include <bit>
#include <sstream>
#include <stdexcept>

#include "queerhom/superalgebra.hpp"

namespace qh {

namespace {

SparseVector scalar_multiple(std::size_t index, const FieldSpec& f, long c) {
  if (c == 0) return {};
  return SparseVector({{index, Scalar::from_int(f, c)}});
}

std::vector<long> parse_int_list(std::string_view text, std::string_view tag) {
  std::vector<long> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad parameter '" + item + "' in builtin '" + std::string(tag) + "'");
    }
  }
  return out;
}

}  // namespace

BuiltinSpec BuiltinSpec::parse(std::string_view tag) {
  std::string_view name = tag;
  std::string_view args;
  if (auto open = tag.find('('); open != std::string_view::npos) {
    if (tag.back() != ')') throw std::invalid_argument("malformed builtin tag '" + std::string(tag) + "'");
    name = tag.substr(0, open);
    args = tag.substr(open + 1, tag.size() - open - 2);
  } else if (auto colon = tag.find(':'); colon != std::string_view::npos) {
    name = tag.substr(0, colon);
    args = tag.substr(colon + 1);
  }
  std::vector<long> params = args.empty() ? std::vector<long>{} : parse_int_list(args, tag);

  auto one_param = [&](BuiltinFamily fam) {
    if (params.size() != 1 || params[0] < 1)
      throw std::invalid_argument("builtin '" + std::string(name) + "' needs one parameter >= 1");
    return BuiltinSpec{fam, static_cast<unsigned>(params[0]), {}};
  };
  auto no_param = [&](BuiltinFamily fam) {
    if (!params.empty()) throw std::invalid_argument("builtin '" + std::string(name) + "' takes no parameters");
    return BuiltinSpec{fam, 0, {}};
  };

  if (name == "base-field") return no_param(BuiltinFamily::base_field);
  if (name == "q1") return no_param(BuiltinFamily::q1);
  if (name == "square-zero-plane") return no_param(BuiltinFamily::square_zero_plane);
  if (name == "grassmann") return one_param(BuiltinFamily::grassmann);
  if (name == "truncated-poly") return one_param(BuiltinFamily::truncated_poly);
  if (name == "group-algebra") return one_param(BuiltinFamily::group_algebra);
  if (name == "matrix") return one_param(BuiltinFamily::matrix);
  if (name == "monogenic") {
    if (params.size() < 2) throw std::invalid_argument("monogenic needs a polynomial of degree >= 1");
    return BuiltinSpec{BuiltinFamily::monogenic, 0, params};
  }
  throw std::invalid_argument("unknown builtin algebra '" + std::string(name) + "'");
}

std::string BuiltinSpec::tag() const {
  switch (family) {
    case BuiltinFamily::base_field: return "base-field";
    case BuiltinFamily::q1: return "q1";
    case BuiltinFamily::square_zero_plane: return "square-zero-plane";
    case BuiltinFamily::grassmann: return "grassmann(" + std::to_string(param) + ")";
    case BuiltinFamily::truncated_poly: return "truncated-poly(" + std::to_string(param) + ")";
    case BuiltinFamily::group_algebra: return "group-algebra(" + std::to_string(param) + ")";
    case BuiltinFamily::matrix: return "matrix(" + std::to_string(param) + ")";
    case BuiltinFamily::monogenic: {
      std::string s = "monogenic(";
      for (std::size_t i = 0; i < coefficients.size(); ++i) s += (i ? "," : "") + std::to_string(coefficients[i]);
      return s + ")";
    }
  }
  return "?";
}

SuperAlgebra build_builtin(const BuiltinSpec& spec, const FieldSpec& field) {
  switch (spec.family) {
    case BuiltinFamily::base_field: return base_field(field);
    case BuiltinFamily::q1: return q1(field);
    case BuiltinFamily::grassmann: return grassmann(spec.param, field);
    case BuiltinFamily::truncated_poly: return truncated_poly(spec.param, field);
    case BuiltinFamily::monogenic: return monogenic(spec.coefficients, field);
    case BuiltinFamily::group_algebra: return group_algebra(spec.param, field);
    case BuiltinFamily::matrix: return matrix_algebra(spec.param, field);
    case BuiltinFamily::square_zero_plane: return square_zero_plane(field);
  }
  throw std::invalid_argument("unknown builtin family");
}

SuperAlgebra build_builtin(std::string_view tag, const FieldSpec& field) {
  return build_builtin(BuiltinSpec::parse(tag), field);
}

SuperAlgebra base_field(const FieldSpec& f) {
  return SuperAlgebra::make_validated("base-field", f, GradedSpace({"1"}, {0}), {SparseVector::unit(0, f)},
                                      SparseVector::unit(0, f));
}

SuperAlgebra q1(const FieldSpec& f) {
  // basis {1, nu}, nu odd, nu^2 = 1
  std::vector<SparseVector> p{SparseVector::unit(0, f), SparseVector::unit(1, f), SparseVector::unit(1, f),
                              SparseVector::unit(0, f)};
  return SuperAlgebra::make_validated("q1", f, GradedSpace({"1", "nu"}, {0, 1}), std::move(p),
                                      SparseVector::unit(0, f));
}

SuperAlgebra grassmann(unsigned k, const FieldSpec& f) {
  if (k < 1 || k > 10) throw std::invalid_argument("grassmann: need 1 <= k <= 10 generators");
  // Basis: subsets S of the generators as bitmasks, xi_S = product in increasing order.
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels;
  std::vector<std::uint8_t> parities;
  for (std::size_t s = 0; s < n; ++s) {
    std::string l;
    for (unsigned g = 0; g < k; ++g)
      if (s >> g & 1) l += "xi" + std::to_string(g + 1);
    labels.push_back(l.empty() ? "1" : l);
    parities.push_back(static_cast<std::uint8_t>(std::popcount(s) & 1));
  }
  std::vector<SparseVector> p(n * n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      if (s & t) continue;
      unsigned inversions = 0;
      for (unsigned a = 0; a < k; ++a)
        if (s >> a & 1) inversions += std::popcount(t & ((std::size_t{1} << a) - 1));
      p[s * n + t] = scalar_multiple(s | t, f, (inversions & 1) ? -1 : 1);
    }
  return SuperAlgebra::make_validated("grassmann(" + std::to_string(k) + ")", f,
                                      GradedSpace(std::move(labels), std::move(parities)), std::move(p),
                                      SparseVector::unit(0, f));
}

namespace {

SuperAlgebra polynomial_quotient(const std::vector<long>& coefficients, const FieldSpec& f, std::string name) {
  if (coefficients.size() < 2) throw std::invalid_argument("monogenic: f must have degree >= 1");
  if (coefficients.front() != 1) throw std::invalid_argument("monogenic: f must be monic");
  const std::size_t d = coefficients.size() - 1;
  // powers[e] = x^e reduced mod f, for e < 2d - 1
  std::vector<std::vector<Scalar>> powers;
  for (std::size_t e = 0; e + 1 < 2 * d || e == 0; ++e) {
    std::vector<Scalar> v(d, Scalar::zero(f));
    if (e < d) {
      v[e] = Scalar::one(f);
    } else {
      // x^e = x * x^{e-1}; x^d = -sum_{i<d} c_i x^i where c_i is the coefficient of x^i
      const auto& prev = powers[e - 1];
      Scalar top = prev[d - 1];
      for (std::size_t i = d - 1; i > 0; --i) v[i] = prev[i - 1];
      v[0] = Scalar::zero(f);
      for (std::size_t i = 0; i < d; ++i) v[i] -= top * Scalar::from_int(f, coefficients[d - i]);
    }
    powers.push_back(std::move(v));
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
  std::vector<SparseVector> p(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<SparseVector::Entry> e;
      for (std::size_t k = 0; k < d; ++k) e.emplace_back(k, powers[i + j][k]);
      p[i * d + j] = SparseVector(std::move(e));
    }
  return SuperAlgebra::make_validated(std::move(name), f, GradedSpace(std::move(labels), std::vector<std::uint8_t>(d, 0)),
                                      std::move(p), SparseVector::unit(0, f));
}

}  // namespace

SuperAlgebra monogenic(const std::vector<long>& coefficients, const FieldSpec& f) {
  return polynomial_quotient(coefficients, f, BuiltinSpec{BuiltinFamily::monogenic, 0, coefficients}.tag());
}

SuperAlgebra truncated_poly(unsigned m, const FieldSpec& f) {
  if (m < 1) throw std::invalid_argument("truncated-poly: m must be >= 1");
  std::vector<long> c(m + 1, 0);
  c[0] = 1;
  return polynomial_quotient(c, f, "truncated-poly(" + std::to_string(m) + ")");
}

SuperAlgebra group_algebra(unsigned m, const FieldSpec& f) {
  if (m < 1) throw std::invalid_argument("group-algebra: m must be >= 1");
  const std::size_t n = m;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "t" : "t^" + std::to_string(i));
  std::vector<SparseVector> p(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p[i * n + j] = SparseVector::unit((i + j) % n, f);
  return SuperAlgebra::make_validated("group-algebra(" + std::to_string(m) + ")", f,
                                      GradedSpace(std::move(labels), std::vector<std::uint8_t>(n, 0)), std::move(p),
                                      SparseVector::unit(0, f));
}

SuperAlgebra matrix_algebra(unsigned k, const FieldSpec& f) {
  if (k < 1) throw std::invalid_argument("matrix: k must be >= 1");
  const std::size_t n = std::size_t{k} * k;
  std::vector<std::string> labels;
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) labels.push_back("E" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  std::vector<SparseVector> p(n * n);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j)
      for (unsigned l = 0; l < k; ++l) p[(i * k + j) * n + (j * k + l)] = SparseVector::unit(i * k + l, f);
  std::vector<SparseVector::Entry> unit;
  for (unsigned i = 0; i < k; ++i) unit.emplace_back(i * k + i, Scalar::one(f));
  return SuperAlgebra::make_validated("matrix(" + std::to_string(k) + ")", f,
                                      GradedSpace(std::move(labels), std::vector<std::uint8_t>(n, 0)), std::move(p),
                                      SparseVector(std::move(unit)));
}

SuperAlgebra square_zero_plane(const FieldSpec& f) {
  // k[x,y]/(x,y)^2 with basis {1, x, y}
  std::vector<SparseVector> p(9);
  p[0] = SparseVector::unit(0, f);
  p[1] = SparseVector::unit(1, f);
  p[2] = SparseVector::unit(2, f);
  p[3] = SparseVector::unit(1, f);
  p[6] = SparseVector::unit(2, f);
  return SuperAlgebra::make_validated("square-zero-plane", f, GradedSpace({"1", "x", "y"}, {0, 0, 0}), std::move(p),
                                      SparseVector::unit(0, f));
}

}  // namespace qh
