#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

namespace covermip {

using BigInt = mpz_class;

/// Exact rational over arbitrary-precision integers. Always canonical:
/// the two-argument form reduces the fraction, which mpq_class does not.
class Rational : public mpq_class {
 public:
  using mpq_class::mpq_class;
  Rational() = default;
  Rational(const mpq_class& q) : mpq_class(q) {}
  Rational(mpq_class&& q) noexcept : mpq_class(std::move(q)) {}
  Rational(const BigInt& num, const BigInt& den) : mpq_class(num, den) { canonicalize(); }
  template <class N, class D>
    requires(std::is_integral_v<N> && std::is_integral_v<D>)
  Rational(N num, D den) : Rational(to_big(num), to_big(den)) {}

 private:
  template <class I>
  static BigInt to_big(I v) {
    if constexpr (std::is_signed_v<I>) {
      return BigInt(static_cast<long>(v));
    } else {
      return BigInt(static_cast<unsigned long>(v));
    }
  }
};

/// Parses "p/q", "p" or a finite decimal like "0.25". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" form.
std::string to_string(const Rational& q);

/// True when q has a finite decimal expansion (denominator 2^a 5^b).
bool is_terminating(const Rational& q);

/// Exact decimal if q terminates, otherwise rounded (half away from zero)
/// to `significant` significant digits. No exponent notation.
std::string to_decimal(const Rational& q, int significant = 17);

BigInt floor_of(const Rational& q);
BigInt ceil_of(const Rational& q);

inline Rational frac_of(const Rational& q) { return q - Rational(floor_of(q)); }

}  // namespace covermip
