#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "ngon/error.hpp"

namespace ngon {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always kept in lowest terms with a positive denominator; zero is 0/1.
/// Serialized as "p/q", with "/q" dropped when q == 1.
class Rat {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  Rat() = default;
  Rat(std::int64_t value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    v_ = den < 0 ? value_type(-BigInt(num), -BigInt(den)) : value_type(num, den);
  }
  Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    v_ = den < 0 ? value_type(-num, -den) : value_type(num, den);
  }
  explicit Rat(value_type v) : v_(std::move(v)) {}

  /// Parses "p", "-p", "p/q" or "-p/q" (surrounding blanks allowed).
  static Rat parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    auto slash = text.find('/');
    auto num = parse_int(trim(text.substr(0, slash)), text);
    if (slash == std::string_view::npos) return Rat(num, BigInt(1));
    auto den = parse_int(trim(text.substr(slash + 1)), text);
    if (den == 0) throw InvalidInput("rational with zero denominator: '" + std::string(text) + "'");
    return Rat(num, den);
  }

  [[nodiscard]] BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  [[nodiscard]] BigInt denominator() const { return boost::multiprecision::denominator(v_); }
  [[nodiscard]] const value_type& value() const { return v_; }
  [[nodiscard]] bool is_zero() const { return v_.is_zero(); }
  [[nodiscard]] int sign() const { return v_.sign(); }

  [[nodiscard]] std::string to_string() const {
    auto den = denominator();
    if (den == 1) return numerator().str();
    return numerator().str() + "/" + den.str();
  }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw InvalidInput("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(value_type(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (b.v_ < a.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

 private:
  static BigInt parse_int(std::string_view digits, std::string_view whole) {
    auto bad = [&] { return InvalidInput("malformed rational: '" + std::string(whole) + "'"); };
    bool negative = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
      negative = digits.front() == '-';
      digits.remove_prefix(1);
    }
    if (digits.empty()) throw bad();
    BigInt out = 0;
    for (char ch : digits) {
      if (ch < '0' || ch > '9') throw bad();
      out = out * 10 + (ch - '0');
    }
    return negative ? BigInt(-out) : out;
  }

  value_type v_{0};
};

}  // namespace ngon
