#pragma once

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grassarr {

// mpq_class keeps values in lowest terms with a positive denominator once
// canonicalized; every constructor path in this library canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Accepts `p` or `p/q` with an optional leading sign. No whitespace, no
// exponent, q != 0.
inline std::optional<Rational> parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto digits = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return pos > start;
  };
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  if (!digits()) return std::nullopt;
  std::size_t slash = std::string_view::npos;
  if (pos < text.size() && text[pos] == '/') {
    slash = pos++;
    if (!digits()) return std::nullopt;
  }
  if (pos != text.size()) return std::nullopt;

  std::string num(text.substr(0, slash == std::string_view::npos ? text.size() : slash));
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  Rational value;
  value.get_num().set_str(num, 10);
  if (slash == std::string_view::npos) {
    value.get_den() = 1;
  } else {
    value.get_den().set_str(std::string(text.substr(slash + 1)), 10);
    if (value.get_den() == 0) return std::nullopt;
  }
  value.canonicalize();
  return value;
}

inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline std::string to_string(const Integer& z) { return z.get_str(10); }

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

inline bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

// Scales v to coprime integers whose first nonzero entry is positive.
// Returns the primitive vector w and, through `scale`, the factor with
// v = scale * w. The zero vector is returned unchanged with scale 1.
inline Vector primitive_integer(std::span<const Rational> v, Rational* scale = nullptr) {
  Vector out(v.begin(), v.end());
  std::size_t lead = 0;
  while (lead < out.size() && sgn(out[lead]) == 0) ++lead;
  if (lead == out.size()) {
    if (scale) *scale = 1;
    return out;
  }
  Integer den_lcm = 1;
  for (const auto& x : out) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& x : out) {
    Integer scaled = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sgn(out[lead]) < 0) factor = -factor;
  for (auto& x : out) x *= factor;
  if (scale) *scale = 1 / factor;
  return out;
}

// Lexicographic three-way comparison, shorter vectors first.
inline int compare(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

}  // namespace grassarr
