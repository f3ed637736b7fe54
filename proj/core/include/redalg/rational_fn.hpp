#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "redalg/polynomial.hpp"

namespace redalg {

/// Element of the fraction field Q(h_1, ..., h_r), kept reduced:
/// gcd(num, den) = 1 and the leading coefficient of den is positive. Two
/// equal functions therefore have identical representations.
class RationalFn {
 public:
  RationalFn() : den_(1) {}
  RationalFn(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFn(const mpz_class& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFn(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  RationalFn(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)

  /// num / den in lowest terms. Throws ArithmeticError on a zero denominator.
  static RationalFn fraction(const Polynomial& num, const Polynomial& den);
  static RationalFn variable(int var) { return RationalFn(Polynomial::variable(var)); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Requires is_constant().
  mpq_class constant_value() const;
  /// deg(num) + deg(den); used as a size measure for pivoting.
  unsigned total_degree() const { return num_.total_degree() + den_.total_degree(); }
  unsigned support_mask() const { return num_.support_mask() | den_.support_mask(); }

  RationalFn operator-() const;
  RationalFn inverse() const;
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
  RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }

  friend bool operator==(const RationalFn& a, const RationalFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// h_i -> h_i + shift[i].
  RationalFn shifted(std::span<const long> shift) const;
  RationalFn shifted(std::span<const mpq_class> shift) const;
  /// Substitutes h_i -> images[i] (missing images leave h_i alone).
  RationalFn substituted(std::span<const RationalFn> images) const;
  RationalFn renamed(std::span<const int> map) const;
  /// Throws ArithmeticError if the denominator vanishes at the point.
  mpq_class evaluate(std::span<const mpq_class> point) const;

  std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }
  std::string to_string(std::span<const std::string> names = {}) const;

  /// Parses integers, variable names, + - * / ^ and parentheses. With empty
  /// names, h1, h2, ... are accepted. Throws ParseError.
  static RationalFn parse(std::string_view text, std::span<const std::string> names = {});

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace redalg
