// Exact rational numbers over 64-bit integers.
//
// Every intermediate product is formed in 128 bits and reduced before being
// narrowed back; a result that does not fit throws std::overflow_error rather
// than wrapping silently.
#pragma once

#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bimarket {

class Rational {
 public:
  constexpr Rational() noexcept = default;
  // NOLINTNEXTLINE(google-explicit-constructor)
  constexpr Rational(std::int64_t value) noexcept : num_(value) {}
  Rational(std::int64_t num, std::int64_t den) { *this = make(num, den); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Accepts "p", "p/q", and finite decimals with an optional exponent
  /// ("-1.25", "3e2"). Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  Rational operator-() const {
    if (num_ == std::numeric_limits<std::int64_t>::min()) {
      throw std::overflow_error("rational negation overflow");
    }
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    using W = __int128;
    return reduce(W{a.num_} * b.den_ + W{b.num_} * a.den_, W{a.den_} * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    using W = __int128;
    return reduce(W{a.num_} * b.den_ - W{b.num_} * a.den_, W{a.den_} * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    using W = __int128;
    return reduce(W{a.num_} * b.num_, W{a.den_} * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    using W = __int128;
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return reduce(W{a.num_} * b.den_, W{a.den_} * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    using W = __int128;
    const W lhs = W{a.num_} * b.den_;
    const W rhs = W{b.num_} * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  static Rational make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return reduce(__int128{num}, __int128{den});
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational reduce(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const __int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi) {
      throw std::overflow_error("rational overflow");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r < 0 ? -r : r; }

namespace detail {

inline std::int64_t parse_digits(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("missing digits");
  std::int64_t value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("unexpected character in number");
    }
    if (value > (std::numeric_limits<std::int64_t>::max() - (c - '0')) / 10) {
      throw std::overflow_error("integer literal too large");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

inline Rational pow10(int exponent) {
  Rational r = 1;
  for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) r *= 10;
  return exponent < 0 ? Rational{1} / r : r;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty number");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse(text.substr(0, slash));
    const Rational den = parse(text.substr(slash + 1));
    if (!num.is_integer() || !den.is_integer()) {
      throw std::invalid_argument("fraction parts must be integers");
    }
    if (den == 0) throw std::invalid_argument("zero denominator");
    return num / den;
  }

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  int exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    const std::int64_t magnitude = detail::parse_digits(exp_text);
    if (magnitude > 18) throw std::overflow_error("exponent out of range");
    exponent = static_cast<int>(exp_negative ? -magnitude : magnitude);
    text = text.substr(0, e);
  }

  std::string_view whole = text;
  std::string_view frac;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    whole = text.substr(0, dot);
    frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) {
      throw std::invalid_argument("bare decimal point");
    }
  }

  Rational value = whole.empty() ? Rational{0} : Rational{detail::parse_digits(whole)};
  if (!frac.empty()) {
    value += Rational{detail::parse_digits(frac)} /
             detail::pow10(static_cast<int>(frac.size()));
  }
  value *= detail::pow10(exponent);
  return negative ? -value : value;
}

}  // namespace bimarket

template <>
struct std::hash<bimarket::Rational> {
  std::size_t operator()(const bimarket::Rational& r) const noexcept {
    return std::hash<std::int64_t>{}(r.num()) * 31u ^
           std::hash<std::int64_t>{}(r.den());
  }
};
