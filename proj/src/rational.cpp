#include "covermip/rational.hpp"

#include <cctype>
#include <string>

#include "covermip/error.hpp"

namespace covermip {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt pow10(unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

// Number of decimal digits of a positive integer.
long decimal_digits(const BigInt& v) {
  std::string s = v.get_str();
  return static_cast<long>(s.size());
}

std::string place_point(const std::string& digits, long exponent) {
  // value = 0.d1d2d3... * 10^(exponent+1)
  const long n = static_cast<long>(digits.size());
  if (exponent >= n - 1) {
    return digits + std::string(static_cast<size_t>(exponent - (n - 1)), '0');
  }
  if (exponent >= 0) {
    return digits.substr(0, static_cast<size_t>(exponent + 1)) + "." +
           digits.substr(static_cast<size_t>(exponent + 1));
  }
  return "0." + std::string(static_cast<size_t>(-exponent - 1), '0') + digits;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    BigInt d{std::string(den), 10};
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    q = Rational(BigInt{std::string(num), 10}, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto fraction = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!fraction.empty() && !all_digits(fraction)) ||
        (whole.empty() && fraction.empty())) {
      throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    BigInt num(std::string(whole.empty() ? "0" : whole) + std::string(fraction), 10);
    q = Rational(num, pow10(fraction.size()));
  } else {
    if (!all_digits(s)) throw ParseError("not a rational: '" + std::string(text) + "'");
    q = Rational(BigInt{std::string(s), 10});
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_terminating(const Rational& q) {
  BigInt d = q.get_den();
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) d /= 2;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) d /= 5;
  return d == 1;
}

std::string to_decimal(const Rational& q, int significant) {
  if (q == 0) return "0";
  const std::string sign = q < 0 ? "-" : "";
  Rational a = abs(q);

  if (is_terminating(a)) {
    unsigned long k = 0;
    while (Rational(a * Rational(pow10(k))).get_den() != 1) ++k;
    std::string digits = BigInt(a.get_num() * pow10(k) / a.get_den()).get_str();
    if (k == 0) return sign + digits;
    if (digits.size() <= k) digits = std::string(k - digits.size() + 1, '0') + digits;
    return sign + digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
  }

  // exponent e with 10^e <= a < 10^(e+1)
  long e = 0;
  BigInt whole = floor_of(a);
  if (whole > 0) {
    e = decimal_digits(whole) - 1;
  } else {
    Rational t = a;
    while (t < 1) {
      t *= 10;
      --e;
    }
  }
  const long shift = significant - 1 - e;
  Rational scaled = a;
  if (shift >= 0) {
    scaled *= Rational(pow10(static_cast<unsigned long>(shift)));
  } else {
    scaled /= Rational(pow10(static_cast<unsigned long>(-shift)));
  }
  BigInt rounded = floor_of(scaled + Rational(1, 2));
  if (decimal_digits(rounded) > significant) {
    rounded /= 10;
    ++e;
  }
  return sign + place_point(rounded.get_str(), e);
}

BigInt floor_of(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt ceil_of(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace covermip
