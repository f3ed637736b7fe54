#include "redalg/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "redalg/errors.hpp"

namespace redalg {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(int var, unsigned exponent) {
  if (var < 0 || var >= kMaxVars) throw ResourceError("variable index out of range");
  if (exponent > 255) throw ResourceError("exponent exceeds 255");
  return Monomial(static_cast<std::uint64_t>(exponent) << shift_of(var));
}

Monomial Monomial::with_exponent(int var, unsigned exponent) const {
  if (exponent > 255) throw ResourceError("exponent exceeds 255");
  const std::uint64_t mask = std::uint64_t{0xff} << shift_of(var);
  return Monomial((bits_ & ~mask) | (static_cast<std::uint64_t>(exponent) << shift_of(var)));
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  std::uint64_t b = bits_;
  while (b != 0) {
    d += static_cast<unsigned>(b & 0xffu);
    b >>= 8;
  }
  return d;
}

bool Monomial::divides(Monomial other) const {
  for (int v = 0; v < kMaxVars; ++v) {
    if (exponent(v) > other.exponent(v)) return false;
  }
  return true;
}

Monomial Monomial::operator*(Monomial other) const {
  const std::uint64_t a = bits_;
  const std::uint64_t b = other.bits_;
  const std::uint64_t s = a + b;
  const std::uint64_t carry = ((a & b) | ((a | b) & ~s)) & 0x8080808080808080ull;
  // Carry out of bit 7 of a byte only matters if it did not already come
  // from the byte below; recheck bytewise when any top bit is involved.
  if (carry != 0) {
    for (int v = 0; v < kMaxVars; ++v) {
      if (exponent(v) + other.exponent(v) > 255) throw ResourceError("exponent exceeds 255");
    }
  }
  return Monomial(s);
}

Monomial Monomial::operator/(Monomial other) const { return Monomial(bits_ - other.bits_); }

Monomial Monomial::gcd(Monomial a, Monomial b) {
  Monomial r;
  for (int v = 0; v < kMaxVars; ++v) {
    const unsigned e = std::min(a.exponent(v), b.exponent(v));
    if (e != 0) r = r.with_exponent(v, e);
  }
  return r;
}

std::string default_var_name(int i) { return "h" + std::to_string(i + 1); }

// ---------------------------------------------------------------------------
// Polynomial basics

namespace {

bool term_greater(const Polynomial::Term& a, const Polynomial::Term& b) { return a.first > b.first; }

}  // namespace

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.emplace_back(Monomial{}, mpz_class(c));
}

Polynomial::Polynomial(const mpz_class& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

Polynomial Polynomial::variable(int var) { return monomial(Monomial::variable(var), 1); }

Polynomial Polynomial::monomial(Monomial m, mpz_class c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace_back(m, std::move(c));
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    Monomial m = terms_[i].first;
    mpz_class c = std::move(terms_[i].second);
    std::size_t j = i + 1;
    while (j < terms_.size() && terms_[j].first == m) {
      c += terms_[j].second;
      ++j;
    }
    if (c != 0) {
      terms_[out].first = m;
      terms_[out].second = std::move(c);
      ++out;
    }
    i = j;
  }
  terms_.resize(out);
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1;
}

mpz_class Polynomial::constant_value() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return 0;
}

unsigned Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

unsigned Polynomial::degree_in(int var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
  return d;
}

unsigned Polynomial::support_mask() const {
  std::uint64_t all = 0;
  for (const auto& [m, c] : terms_) all |= m.bits();
  unsigned mask = 0;
  for (int v = 0; v < kMaxVars; ++v) {
    if (((all >> (8 * (kMaxVars - 1 - v))) & 0xffu) != 0) mask |= 1u << v;
  }
  return mask;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b, bool subtract) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, subtract ? mpz_class(-b[j].second) : b[j].second);
      ++j;
    } else {
      mpz_class c = subtract ? mpz_class(a[i].second - b[j].second) : mpz_class(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Polynomial Polynomial::times_monomial(Monomial m) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.first = t.first * m;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const Polynomial& single = a.terms_.size() == 1 ? a : b;
    const Polynomial& other = a.terms_.size() == 1 ? b : a;
    Polynomial r = other;
    const auto& [m, c] = single.terms_[0];
    for (auto& t : r.terms_) {
      t.first = t.first * m;
      t.second *= c;
    }
    return r;
  }
  std::vector<Polynomial::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) prod.emplace_back(ma * mb, ca * cb);
  }
  return Polynomial::from_terms(std::move(prod));
}

Polynomial Polynomial::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  Polynomial r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Polynomial Polynomial::divided_by_integer(const mpz_class& c) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].first == b.terms_[i].first) || a.terms_[i].second != b.terms_[i].second) return false;
  }
  return true;
}

mpz_class Polynomial::content() const {
  mpz_class g = 0;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_[0].first;
  for (const auto& [m, c] : terms_) {
    g = Monomial::gcd(g, m);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return {};
  mpz_class c = content();
  if (leading_coeff() < 0) c = -c;
  if (c == 1) return *this;
  return divided_by_integer(c);
}

Polynomial Polynomial::normalized_sign() const {
  if (!terms_.empty() && leading_coeff() < 0) return -*this;
  return *this;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.is_zero()) return Polynomial{};
  if (b.is_constant()) {
    const mpz_class& c = b.terms_[0].second;
    for (const auto& [m, ac] : a.terms_) {
      if (!mpz_divisible_p(ac.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
    }
    return a.divided_by_integer(c);
  }
  const Monomial lb = b.leading_monomial();
  if (!lb.divides(a.leading_monomial())) return std::nullopt;
  for (int v = 0; v < kMaxVars; ++v) {
    if (b.degree_in(v) > a.degree_in(v)) return std::nullopt;
  }
  // The trailing terms must divide as well.
  if (!b.terms_.back().first.divides(a.terms_.back().first)) return std::nullopt;
  if (!mpz_divisible_p(a.terms_.back().second.get_mpz_t(), b.terms_.back().second.get_mpz_t())) return std::nullopt;

  const mpz_class& lc = b.leading_coeff();
  // Remainder kept in an ordered map so each step touches only |b| terms.
  std::map<Monomial, mpz_class, std::greater<>> rem;
  for (const auto& [m, c] : a.terms_) rem.emplace_hint(rem.end(), m, c);
  std::vector<Term> quot;
  mpz_class prod;
  while (!rem.empty()) {
    auto front = rem.begin();
    const Monomial rm = front->first;
    if (!lb.divides(rm) || !mpz_divisible_p(front->second.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    const Monomial qm = rm / lb;
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), front->second.get_mpz_t(), lc.get_mpz_t());
    rem.erase(front);
    for (std::size_t k = 1; k < b.terms_.size(); ++k) {
      const auto& [bm, bc] = b.terms_[k];
      prod = bc * qc;
      auto [it, inserted] = rem.try_emplace(bm * qm);
      it->second -= prod;
      if (it->second == 0) rem.erase(it);
    }
    quot.emplace_back(qm, std::move(qc));
  }
  Polynomial q;
  q.terms_ = std::move(quot);
  return q;
}

namespace {

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

Polynomial Polynomial::shifted(std::span<const long> shift) const {
  Polynomial cur = *this;
  for (int v = 0; v < static_cast<int>(shift.size()) && v < kMaxVars; ++v) {
    const long s = shift[v];
    if (s == 0 || cur.degree_in(v) == 0) continue;
    std::vector<Term> out;
    out.reserve(cur.terms_.size() * 2);
    const mpz_class sz(s);
    for (const auto& [m, c] : cur.terms_) {
      const unsigned e = m.exponent(v);
      if (e == 0) {
        out.emplace_back(m, c);
        continue;
      }
      const Monomial base = m.with_exponent(v, 0);
      mpz_class spow = 1;  // s^(e-k), built from k = e downwards
      for (unsigned k = e + 1; k-- > 0;) {
        out.emplace_back(base.with_exponent(v, k), c * binomial(e, k) * spow);
        spow *= sz;
      }
    }
    cur = from_terms(std::move(out));
  }
  return cur;
}

Polynomial Polynomial::evaluate_var(int var, const mpz_class& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  std::vector<mpz_class> powers{1};
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(var);
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    out.emplace_back(m.with_exponent(var, 0), c * powers[e]);
  }
  return from_terms(std::move(out));
}

mpq_class Polynomial::evaluate(std::span<const mpq_class> point) const {
  mpq_class total = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class t = c;
    for (int v = 0; v < kMaxVars; ++v) {
      const unsigned e = m.exponent(v);
      if (e == 0) continue;
      const mpq_class x = v < static_cast<int>(point.size()) ? point[v] : mpq_class(0);
      for (unsigned k = 0; k < e; ++k) t *= x;
    }
    total += t;
  }
  return total;
}

Polynomial Polynomial::renamed(std::span<const int> map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial r;
    for (int v = 0; v < kMaxVars; ++v) {
      const unsigned e = m.exponent(v);
      if (e == 0) continue;
      if (v >= static_cast<int>(map.size()) || map[v] < 0) throw ContextError("variable has no image under renaming");
      r = r.with_exponent(map[v], r.exponent(map[v]) + e);
    }
    out.emplace_back(r, c);
  }
  return from_terms(std::move(out));
}

std::size_t Polynomial::hash() const {
  std::size_t h = terms_.size();
  for (const auto& [m, c] : terms_) {
    h ^= std::hash<std::uint64_t>{}(m.bits()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(mpz_get_si(c.get_mpz_t())) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || m.is_one()) {
      os << mag.get_str();
      wrote = true;
    }
    for (int v = 0; v < kMaxVars; ++v) {
      const unsigned e = m.exponent(v);
      if (e == 0) continue;
      if (wrote) os << "*";
      os << (v < static_cast<int>(names.size()) ? names[v] : default_var_name(v));
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// GCD

namespace {

struct HeuristicFailed {};

mpz_class max_norm(const Polynomial& p) {
  mpz_class n = 0;
  for (const auto& [m, c] : p.terms()) {
    if (abs(c) > n) n = abs(c);
  }
  return n;
}

int lowest_var(unsigned mask) {
  for (int v = 0; v < kMaxVars; ++v) {
    if (mask & (1u << v)) return v;
  }
  return -1;
}

/// |coefficient| of a term of highest degree in var.
mpz_class leading_abs_in(const Polynomial& p, int var) {
  unsigned best = 0;
  mpz_class c = 0;
  for (const auto& [m, coef] : p.terms()) {
    const unsigned e = m.exponent(var);
    if (c == 0 || e > best) {
      best = e;
      c = abs(coef);
    }
  }
  return c;
}

Polynomial interpolate(const Polynomial& h, const mpz_class& x, int var) {
  std::vector<Polynomial::Term> out;
  Polynomial rest = h;
  const mpz_class half = x / 2;
  unsigned power = 0;
  while (!rest.is_zero()) {
    std::vector<Polynomial::Term> digit;
    for (const auto& [m, c] : rest.terms()) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
      if (r > half) r -= x;
      if (r != 0) digit.emplace_back(m, r);
    }
    Polynomial d = Polynomial::from_terms(digit);
    for (const auto& [m, c] : d.terms()) out.emplace_back(m.with_exponent(var, power), c);
    rest = (rest - d).divided_by_integer(x);
    ++power;
    if (power > 255) throw HeuristicFailed{};
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial heuristic_gcd(const Polynomial& f0, const Polynomial& g0) {
  const mpz_class cf = f0.content();
  const mpz_class cg = g0.content();
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  if (f0.is_constant() || g0.is_constant()) return Polynomial(c);
  const Polynomial f = f0.divided_by_integer(c);
  const Polynomial g = g0.divided_by_integer(c);
  const int var = lowest_var(f.support_mask() | g.support_mask());

  const mpz_class fn = max_norm(f);
  const mpz_class gn = max_norm(g);
  const mpz_class b = 2 * std::min(fn, gn) + 29;
  mpz_class x = std::max<mpz_class>(std::min<mpz_class>(b, 99 * sqrt(b)),
                                    2 * std::min<mpz_class>(fn / leading_abs_in(f, var), gn / leading_abs_in(g, var)) + 2);
  for (int attempt = 0; attempt < 6; ++attempt) {
    const Polynomial ff = f.evaluate_var(var, x);
    const Polynomial gg = g.evaluate_var(var, x);
    if (!ff.is_zero() && !gg.is_zero()) {
      const Polynomial h = heuristic_gcd(ff, gg);
      const Polynomial cand = interpolate(h, x, var).primitive_part();
      if (!cand.is_zero() && Polynomial::divide_exact(f, cand) && Polynomial::divide_exact(g, cand)) {
        return cand.scaled(c);
      }
    }
    x = 73794 * x * sqrt(sqrt(x)) / 27011;
  }
  throw HeuristicFailed{};
}

// Coefficients of p as a polynomial in var.
std::map<unsigned, Polynomial> coefficients_in(const Polynomial& p, int var) {
  std::map<unsigned, std::vector<Polynomial::Term>> buckets;
  for (const auto& [m, c] : p.terms()) buckets[m.exponent(var)].emplace_back(m.with_exponent(var, 0), c);
  std::map<unsigned, Polynomial> out;
  for (auto& [e, ts] : buckets) out.emplace(e, Polynomial::from_terms(std::move(ts)));
  return out;
}

Polynomial content_in(const Polynomial& p, int var);

Polynomial prs_gcd(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& p, int var) {
  Polynomial g;
  for (const auto& [e, coef] : coefficients_in(p, var)) {
    g = prs_gcd(g, coef);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial prem(const Polynomial& a, const Polynomial& b, int var) {
  const auto bc = coefficients_in(b, var);
  const unsigned db = bc.rbegin()->first;
  const Polynomial& lb = bc.rbegin()->second;
  Polynomial r = a;
  while (!r.is_zero()) {
    const unsigned dr = r.degree_in(var);
    if (dr < db) break;
    const auto rc = coefficients_in(r, var);
    const Polynomial& lr = rc.rbegin()->second;
    r = r * lb - (lr * b).times_monomial(Monomial::variable(var, dr - db));
  }
  return r;
}

Polynomial prs_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.normalized_sign();
  if (b.is_zero()) return a.normalized_sign();
  if (a.is_constant() || b.is_constant()) {
    mpz_class c;
    const mpz_class ca = a.content();
    const mpz_class cb = b.content();
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return Polynomial(c);
  }
  const int var = lowest_var(a.support_mask() | b.support_mask());
  const bool in_a = a.degree_in(var) > 0;
  const bool in_b = b.degree_in(var) > 0;
  if (!in_a) return prs_gcd(a, content_in(b, var));
  if (!in_b) return prs_gcd(content_in(a, var), b);
  const Polynomial ca = content_in(a, var);
  const Polynomial cb = content_in(b, var);
  const Polynomial c = prs_gcd(ca, cb);
  Polynomial p = *Polynomial::divide_exact(a, ca);
  Polynomial q = *Polynomial::divide_exact(b, cb);
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  while (!q.is_zero()) {
    Polynomial r = prem(p, q, var);
    p = std::move(q);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      p = Polynomial(1);
      break;
    }
    q = *Polynomial::divide_exact(r, content_in(r, var));
  }
  Polynomial pp = *Polynomial::divide_exact(p, content_in(p, var));
  return (pp * c).normalized_sign();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.normalized_sign();
  if (b.is_zero()) return a.normalized_sign();
  if (a == b) return a.normalized_sign();

  const mpz_class ca = a.content();
  const mpz_class cb = b.content();
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  const Monomial ma = a.monomial_content();
  const Monomial mb = b.monomial_content();
  const Monomial m = Monomial::gcd(ma, mb);
  const Polynomial scale = Polynomial::monomial(m, c);
  if (a.size() == 1 || b.size() == 1) return scale;

  // Strip monomial and integer content; what is left has no variable factor.
  auto strip = [](const Polynomial& p, Monomial mono, const mpz_class& cont) {
    std::vector<Polynomial::Term> ts;
    ts.reserve(p.size());
    for (const auto& [pm, pc] : p.terms()) {
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), pc.get_mpz_t(), cont.get_mpz_t());
      ts.emplace_back(pm / mono, std::move(q));
    }
    return Polynomial::from_terms(std::move(ts)).normalized_sign();
  };
  const Polynomial ap = strip(a, ma, ca);
  const Polynomial bp = strip(b, mb, cb);
  if (ap.is_constant() || bp.is_constant()) return scale;
  if (ap == bp) return ap * scale;
  if (ap.size() <= bp.size()) {
    if (Polynomial::divide_exact(bp, ap)) return ap * scale;
  } else {
    if (Polynomial::divide_exact(ap, bp)) return bp * scale;
  }
  Polynomial g;
  try {
    g = heuristic_gcd(ap, bp);
  } catch (const HeuristicFailed&) {
    g = prs_gcd(ap, bp);
  }
  return (g.primitive_part() * scale).normalized_sign();
}

}  // namespace redalg
