#include "iet/scalar.hpp"

#include <cmath>
#include <regex>

#include "iet/error.hpp"

namespace iet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotABijection: return "NotABijection";
    case ErrorKind::InvalidSize: return "InvalidSize";
    case ErrorKind::EmptyResult: return "EmptyResult";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NonPositiveLength: return "NonPositiveLength";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::InvalidBound: return "InvalidBound";
    case ErrorKind::DegenerateSegment: return "DegenerateSegment";
    case ErrorKind::ReduciblePermutation: return "ReduciblePermutation";
    case ErrorKind::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::LemmaViolation: return "LemmaViolation";
  }
  return "Unknown";
}

namespace {

// Exponents beyond this are rejected rather than materialized as huge integers.
constexpr long kMaxDecimalExponent = 4096;

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

[[noreturn]] void bad_scalar(std::string_view text) {
  throw Error(ErrorKind::InvalidInput, "not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  static const std::regex fraction(R"(^([+-]?\d+)/(\d+)$)");
  static const std::regex decimal(R"(^([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?$)");

  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, fraction)) {
    mpz_class num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str(), 10);
    mpz_class den(m[2].str(), 10);
    if (den == 0) bad_scalar(text);
    Scalar q(num, den);
    q.canonicalize();
    return q;
  }
  if (std::regex_match(s, m, decimal)) {
    const std::string int_part = m[2].str();
    const std::string frac_part = m[3].str();
    if (int_part.empty() && frac_part.empty()) bad_scalar(text);
    long exponent = 0;
    if (m[4].matched) {
      const std::string e = m[4].str();
      if (e.size() > 6) bad_scalar(text);
      exponent = std::stol(e);
    }
    exponent -= static_cast<long>(frac_part.size());
    if (exponent > kMaxDecimalExponent || exponent < -kMaxDecimalExponent) bad_scalar(text);
    mpz_class digits(int_part + frac_part, 10);
    Scalar q;
    if (exponent >= 0) {
      q = Scalar(digits * pow10(static_cast<unsigned long>(exponent)));
    } else {
      q = Scalar(digits, pow10(static_cast<unsigned long>(-exponent)));
      q.canonicalize();
    }
    return m[1].str() == "-" ? Scalar(-q) : q;
  }
  bad_scalar(text);
}

std::vector<Scalar> parse_scalar_list(std::string_view text) {
  std::vector<Scalar> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_scalar(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Scalar from_double(ApproxScalar value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::InvalidInput, "non-finite floating value");
  }
  // mpq_set_d is exact for finite doubles.
  return Scalar(value);
}

ApproxScalar to_double(const Scalar& value) { return canonical(value).get_d(); }

std::string to_string(const Scalar& raw) {
  const Scalar value = canonical(raw);
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Scalar sum(std::span<const Scalar> values) {
  Scalar total = 0;
  for (const auto& v : values) total += canonical(v);
  return total;
}

Scalar canonical(Scalar value) {
  value.canonicalize();
  return value;
}

std::vector<Scalar> canonical(std::vector<Scalar> values) {
  for (auto& v : values) v.canonicalize();
  return values;
}

}  // namespace iet
