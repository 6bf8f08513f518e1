#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tecss {

// Small exact fraction used for alpha, epsilon and reported ratios.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

  constexpr void normalize() {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  // floor(value)
  std::int64_t floor() const {
    std::int64_t q = num / den;
    if ((num % den != 0) && (num < 0)) --q;
    return q;
  }

  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  static Rational parse(const std::string& text);
};

constexpr Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
constexpr Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
constexpr Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
constexpr Rational operator/(Rational a, Rational b) { return {a.num * b.den, a.den * b.num}; }
constexpr bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
constexpr bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
constexpr bool operator<=(Rational a, Rational b) { return !(b < a); }
constexpr bool operator>(Rational a, Rational b) { return b < a; }
constexpr bool operator>=(Rational a, Rational b) { return !(a < b); }

inline Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      auto dot = text.find('.');
      if (dot == std::string::npos) return Rational(std::stoll(text));
      // decimal literal, exact
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      std::int64_t den = 1;
      for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
      return Rational(std::stoll(digits), den);
    }
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

}  // namespace tecss
