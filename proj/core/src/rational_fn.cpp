#include "redalg/rational_fn.hpp"

#include <cctype>

#include "redalg/errors.hpp"

namespace redalg {

RationalFn::RationalFn(const mpq_class& c) : num_(c.get_num()), den_(c.get_den()) {}

RationalFn RationalFn::fraction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw ArithmeticError("division by zero");
  RationalFn r;
  if (num.is_zero()) return r;
  if (den.is_one()) {
    r.num_ = num;
    return r;
  }
  const Polynomial g = gcd(num, den);
  if (g.is_one()) {
    r.num_ = num;
    r.den_ = den;
  } else {
    r.num_ = *Polynomial::divide_exact(num, g);
    r.den_ = *Polynomial::divide_exact(den, g);
  }
  if (r.den_.leading_coeff() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

mpq_class RationalFn::constant_value() const {
  mpq_class q(num_.constant_value(), den_.constant_value());
  q.canonicalize();
  return q;
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  RationalFn r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.leading_coeff() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RationalFn r;
  if (a.den_.is_one() && b.den_.is_one()) {
    r.num_ = a.num_ + b.num_;
    return r;
  }
  if (a.den_ == b.den_) return RationalFn::fraction(a.num_ + b.num_, a.den_);
  const Polynomial g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    // With coprime denominators the sum is already reduced.
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    if (r.num_.is_zero()) return RationalFn{};
    r.den_ = a.den_ * b.den_;
    return r;
  }
  const Polynomial ad = *Polynomial::divide_exact(a.den_, g);
  const Polynomial bd = *Polynomial::divide_exact(b.den_, g);
  const Polynomial t = a.num_ * bd + b.num_ * ad;
  if (t.is_zero()) return RationalFn{};
  const Polynomial g2 = gcd(t, g);
  if (g2.is_one()) {
    r.num_ = t;
    r.den_ = ad * b.den_;
  } else {
    r.num_ = *Polynomial::divide_exact(t, g2);
    r.den_ = ad * *Polynomial::divide_exact(b.den_, g2);
  }
  if (r.den_.leading_coeff() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero() || b.is_zero()) return RationalFn{};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  RationalFn r;
  if (a.den_.is_one() && b.den_.is_one()) {
    r.num_ = a.num_ * b.num_;
    return r;
  }
  const Polynomial g1 = gcd(a.num_, b.den_);
  const Polynomial g2 = gcd(b.num_, a.den_);
  const Polynomial an = g1.is_one() ? a.num_ : *Polynomial::divide_exact(a.num_, g1);
  const Polynomial bd = g1.is_one() ? b.den_ : *Polynomial::divide_exact(b.den_, g1);
  const Polynomial bn = g2.is_one() ? b.num_ : *Polynomial::divide_exact(b.num_, g2);
  const Polynomial ad = g2.is_one() ? a.den_ : *Polynomial::divide_exact(a.den_, g2);
  r.num_ = an * bn;
  r.den_ = ad * bd;
  if (r.den_.leading_coeff() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.inverse(); }

RationalFn RationalFn::shifted(std::span<const long> shift) const {
  bool trivial = true;
  for (long s : shift) trivial = trivial && s == 0;
  if (trivial || is_constant()) return *this;
  RationalFn r;
  r.num_ = num_.shifted(shift);
  r.den_ = den_.shifted(shift);
  // An integer translation keeps the fraction reduced and the leading
  // monomial (hence its coefficient) of each part unchanged.
  return r;
}

RationalFn RationalFn::shifted(std::span<const mpq_class> shift) const {
  std::vector<long> ints;
  bool integral = true;
  for (const auto& s : shift) {
    if (s.get_den() != 1 || !s.get_num().fits_slong_p()) {
      integral = false;
      break;
    }
    ints.push_back(s.get_num().get_si());
  }
  if (integral) return shifted(std::span<const long>(ints));
  std::vector<RationalFn> images;
  for (int v = 0; v < static_cast<int>(shift.size()); ++v) images.push_back(variable(v) + RationalFn(shift[v]));
  return substituted(images);
}

namespace {

RationalFn substitute_poly(const Polynomial& p, std::span<const RationalFn> images) {
  RationalFn total;
  for (const auto& [m, c] : p.terms()) {
    RationalFn t(c);
    for (int v = 0; v < kMaxVars; ++v) {
      const unsigned e = m.exponent(v);
      if (e == 0) continue;
      const RationalFn x = v < static_cast<int>(images.size()) ? images[v] : RationalFn::variable(v);
      for (unsigned k = 0; k < e; ++k) t *= x;
    }
    total += t;
  }
  return total;
}

}  // namespace

RationalFn RationalFn::substituted(std::span<const RationalFn> images) const {
  return substitute_poly(num_, images) / substitute_poly(den_, images);
}

RationalFn RationalFn::renamed(std::span<const int> map) const {
  RationalFn r;
  r.num_ = num_.renamed(map);
  r.den_ = den_.renamed(map);
  if (r.den_.leading_coeff() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

mpq_class RationalFn::evaluate(std::span<const mpq_class> point) const {
  const mpq_class d = den_.evaluate(point);
  if (d == 0) throw ArithmeticError("denominator vanishes at evaluation point");
  mpq_class r = num_.evaluate(point) / d;
  r.canonicalize();
  return r;
}

std::string RationalFn::to_string(std::span<const std::string> names) const {
  if (den_.is_one()) return num_.to_string(names);
  std::string n = num_.to_string(names);
  if (num_.size() > 1) n = "(" + n + ")";
  if (den_.is_constant()) return n + "/" + den_.to_string(names);
  return n + "/(" + den_.to_string(names) + ")";
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> names) : text_(text), names_(names) {}

  RationalFn run() {
    RationalFn r = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFn expr() {
    RationalFn r = term();
    for (;;) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  RationalFn term() {
    RationalFn r = factor();
    for (;;) {
      if (accept('*')) {
        r *= factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RationalFn d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        r /= d;
      } else {
        return r;
      }
    }
  }

  RationalFn factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    RationalFn base = primary();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected exponent", pos_);
      const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 255) throw ParseError("exponent too large", start);
      RationalFn r(1);
      for (unsigned long k = 0; k < e; ++k) r *= base;
      return r;
    }
    return base;
  }

  RationalFn primary() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFn r = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RationalFn(mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      return RationalFn::variable(lookup(name, start));
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  int lookup(const std::string& name, std::size_t at) const {
    if (!names_.empty()) {
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return static_cast<int>(i);
      }
      throw ParseError("unknown variable '" + name + "'", at);
    }
    if (name.size() >= 2 && name[0] == 'h') {
      bool digits = true;
      for (std::size_t i = 1; i < name.size(); ++i) digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
      if (digits) {
        const int idx = std::stoi(name.substr(1));
        if (idx >= 1 && idx <= kMaxVars) return idx - 1;
      }
    }
    throw ParseError("unknown variable '" + name + "'", at);
  }

  std::string_view text_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFn RationalFn::parse(std::string_view text, std::span<const std::string> names) {
  return Parser(text, names).run();
}

}  // namespace redalg
