#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace redalg {

inline constexpr int kMaxVars = 8;

/// Exponent vector for up to kMaxVars variables, one byte per variable.
/// Variable 0 lives in the most significant byte, so comparing the packed
/// words compares exponent vectors lexicographically.
class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial variable(int var, unsigned exponent = 1);

  unsigned exponent(int var) const {
    return static_cast<unsigned>((bits_ >> shift_of(var)) & 0xffu);
  }
  Monomial with_exponent(int var, unsigned exponent) const;
  unsigned degree() const;
  bool is_one() const { return bits_ == 0; }
  bool divides(Monomial other) const;
  std::uint64_t bits() const { return bits_; }

  /// Throws ResourceError when an exponent would exceed 255.
  Monomial operator*(Monomial other) const;
  /// Requires divides(other) to hold for *this / other (i.e. other | *this).
  Monomial operator/(Monomial other) const;

  static Monomial gcd(Monomial a, Monomial b);

  friend bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }

  /// Graded lexicographic order.
  friend std::strong_ordering operator<=>(Monomial a, Monomial b) {
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db) return da <=> db;
    return a.bits_ <=> b.bits_;
  }

 private:
  static constexpr int shift_of(int var) { return 8 * (kMaxVars - 1 - var); }
  explicit constexpr Monomial(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// Sparse multivariate polynomial over the integers. Terms are kept in
/// strictly decreasing graded-lex order with nonzero coefficients, so equal
/// polynomials are structurally identical.
class Polynomial {
 public:
  using Term = std::pair<Monomial, mpz_class>;

  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  Polynomial(const mpz_class& c);  // NOLINT(google-explicit-constructor)
  static Polynomial variable(int var);
  static Polynomial monomial(Monomial m, mpz_class c);
  /// Builds from arbitrary (unsorted, possibly repeated) terms.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  /// Constant term value when is_constant(); zero otherwise.
  mpz_class constant_value() const;
  const mpz_class& leading_coeff() const { return terms_.front().second; }
  Monomial leading_monomial() const { return terms_.front().first; }
  unsigned total_degree() const;
  unsigned degree_in(int var) const;
  /// Bitmask of variables that occur.
  unsigned support_mask() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const mpz_class& c) const;
  Polynomial times_monomial(Monomial m) const;
  /// Exact division of every coefficient by c (c must divide each).
  Polynomial divided_by_integer(const mpz_class& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Integer content (gcd of coefficients), nonnegative.
  mpz_class content() const;
  /// Largest monomial dividing every term.
  Monomial monomial_content() const;
  /// Divides by the content and makes the leading coefficient positive.
  Polynomial primitive_part() const;
  /// Sign normalization: leading coefficient positive.
  Polynomial normalized_sign() const;

  /// q with a == q * b, if one exists over the integers.
  static std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

  /// Substitutes x_i -> x_i + shift[i]. Entries beyond shift.size() are zero.
  Polynomial shifted(std::span<const long> shift) const;
  /// Substitutes x_var -> value, leaving a polynomial in the other variables.
  Polynomial evaluate_var(int var, const mpz_class& value) const;
  /// Evaluates at a rational point (missing coordinates are zero).
  mpq_class evaluate(std::span<const mpq_class> point) const;
  /// Replaces variable i by variable map[i]. map must be injective on the
  /// support.
  Polynomial renamed(std::span<const int> map) const;

  std::size_t hash() const;
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

/// Greatest common divisor with positive leading coefficient (0 if both are 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Default variable name for index i: "h{i+1}".
std::string default_var_name(int i);

}  // namespace redalg
