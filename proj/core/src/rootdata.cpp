#include "redalg/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "redalg/errors.hpp"

namespace redalg {

Weight Weight::from_ints(const std::vector<long>& coords) {
  Weight w(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) w.c_[i] = coords[i];
  return w;
}

bool Weight::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& x) { return x == 0; });
}

bool Weight::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& x) { return x.get_den() == 1; });
}

std::vector<long> Weight::to_ints() const {
  std::vector<long> out;
  out.reserve(c_.size());
  for (const auto& x : c_) {
    if (x.get_den() != 1 || !x.get_num().fits_slong_p()) throw ArithmeticError("weight is not integral");
    out.push_back(x.get_num().get_si());
  }
  return out;
}

Weight& Weight::operator+=(const Weight& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Weight Weight::scaled(const mpq_class& s) const {
  Weight r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].get_str();
  os << ")";
  return os.str();
}

int Root::height() const { return static_cast<int>(std::accumulate(simple_coords.begin(), simple_coords.end(), 0L)); }

namespace {

Weight eps(int dim, int i, int j = -1, int sj = 0, int si = 1) {
  Weight w(dim);
  w[i] += si;
  if (j >= 0) w[j] += sj;
  return w;
}

}  // namespace

RootSystem RootSystem::build(Family family, int rank) {
  RootSystem rs;
  rs.family_ = family;
  int n = 0;
  switch (family) {
    case Family::A:
      if (rank < 0) throw ConfigError("type A needs rank >= 0");
      n = rank + 1;
      break;
    case Family::C:
      if (rank < 1) throw ConfigError("type C needs rank >= 1");
      n = rank;
      break;
    case Family::D:
      if (rank < 2) throw ConfigError("type D needs rank >= 2");
      n = rank;
      break;
    case Family::Product:
      throw ConfigError("use direct_sum for products");
  }
  if (n > 8) throw ConfigError("at most 8 Cartan variables are supported");
  rs.dim_ = n;
  rs.components_.push_back({family, rank, 0, n});
  std::vector<Weight> pos;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pos.push_back(eps(n, i, j, -1));
  }
  if (family == Family::C || family == Family::D) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) pos.push_back(eps(n, i, j, 1));
    }
  }
  if (family == Family::C) {
    for (int i = 0; i < n; ++i) pos.push_back(eps(n, i, -1, 0, 2));
  }
  for (int i = 0; i + 1 < n; ++i) rs.simple_.push_back(eps(n, i, i + 1, -1));
  if (family == Family::C) rs.simple_.push_back(eps(n, n - 1, -1, 0, 2));
  if (family == Family::D) rs.simple_.push_back(eps(n, n - 2, n - 1, 1));
  for (auto& w : pos) rs.positive_.push_back(Root{std::move(w), {}, Parity::Even});
  rs.finish();
  return rs;
}

RootSystem RootSystem::direct_sum(const std::vector<RootSystem>& parts) {
  if (parts.empty()) throw ConfigError("empty direct sum");
  if (parts.size() == 1) return parts[0];
  RootSystem rs;
  rs.family_ = Family::Product;
  for (const auto& p : parts) rs.dim_ += p.dim_;
  if (rs.dim_ > 8) throw ConfigError("at most 8 Cartan variables are supported");
  int offset = 0;
  auto embed = [&](const Weight& w) {
    Weight r(rs.dim_);
    for (std::size_t i = 0; i < w.dim(); ++i) r[offset + i] = w[i];
    return r;
  };
  for (const auto& p : parts) {
    for (const auto& c : p.components_) rs.components_.push_back({c.family, c.rank, c.offset + offset, c.dim});
    for (const auto& r : p.positive_) rs.positive_.push_back(Root{embed(r.weight), {}, r.parity});
    for (const auto& s : p.simple_) rs.simple_.push_back(embed(s));
    offset += p.dim_;
  }
  rs.finish();
  return rs;
}

void RootSystem::finish() {
  form_.assign(dim_, std::vector<mpq_class>(dim_, 0));
  for (int i = 0; i < dim_; ++i) form_[i][i] = 1;
  for (auto& r : positive_) {
    auto c = lattice_coords(r.weight);
    if (!c) throw InternalError("positive root outside the root lattice");
    for (long x : *c) {
      if (x < 0) throw InternalError("positive root with negative simple coordinate");
    }
    r.simple_coords = *c;
  }
  // Validation of the defining properties of a positive system.
  std::vector<Weight> all = roots();
  for (const auto& a : all) {
    for (const auto& b : all) {
      const Weight s = a + b;
      if (!is_root(s)) continue;
      const bool p = positive_root_index(s) >= 0;
      const bool n = positive_root_index(-s) >= 0;
      if (p == n) throw InternalError("root sum is not uniquely signed");
    }
  }
  for (const auto& s : simple_) {
    if (positive_root_index(s) < 0) throw InternalError("simple root is not positive");
  }
}

std::vector<Weight> RootSystem::roots() const {
  std::vector<Weight> out;
  for (const auto& r : positive_) out.push_back(r.weight);
  for (const auto& r : positive_) out.push_back(-r.weight);
  return out;
}

mpq_class RootSystem::pairing(const Weight& a, const Weight& b) const {
  mpq_class s = 0;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if (form_[i][j] != 0) s += form_[i][j] * a[i] * b[j];
    }
  }
  return s;
}

std::string RootSystem::name() const {
  std::string out;
  for (const auto& c : components_) {
    if (!out.empty()) out += "+";
    switch (c.family) {
      case Family::A:
        out += "gl" + std::to_string(c.rank + 1);
        break;
      case Family::C:
        out += "sp" + std::to_string(2 * c.rank);
        break;
      case Family::D:
        out += "so" + std::to_string(2 * c.rank);
        break;
      case Family::Product:
        break;
    }
  }
  return out;
}

std::optional<std::vector<mpq_class>> RootSystem::simple_coords(const Weight& w) const {
  const int r = rank();
  // Augmented system [A | w] with A the dim x r matrix of simple roots.
  std::vector<std::vector<mpq_class>> m(dim_, std::vector<mpq_class>(r + 1));
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < r; ++j) m[i][j] = simple_[j][i];
    m[i][r] = i < static_cast<int>(w.dim()) ? w[i] : mpq_class(0);
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < r && row < dim_; ++col) {
    int p = row;
    while (p < dim_ && m[p][col] == 0) ++p;
    if (p == dim_) continue;
    std::swap(m[p], m[row]);
    const mpq_class inv = 1 / m[row][col];
    for (int k = col; k <= r; ++k) m[row][k] *= inv;
    for (int i = 0; i < dim_; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const mpq_class f = m[i][col];
      for (int k = col; k <= r; ++k) m[i][k] -= f * m[row][k];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < dim_; ++i) {
    if (m[i][r] != 0) return std::nullopt;
  }
  std::vector<mpq_class> c(r, 0);
  for (int i = 0; i < row; ++i) c[pivot_col[i]] = m[i][r];
  return c;
}

std::optional<std::vector<long>> RootSystem::lattice_coords(const Weight& w) const {
  auto c = simple_coords(w);
  if (!c) return std::nullopt;
  std::vector<long> out;
  for (const auto& x : *c) {
    if (x.get_den() != 1) return std::nullopt;
    out.push_back(x.get_num().get_si());
  }
  return out;
}

Weight RootSystem::from_simple_coords(const std::vector<long>& c) const {
  Weight w(dim_);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) w += simple_[i].scaled(c[i]);
  }
  return w;
}

int RootSystem::positive_root_index(const Weight& w) const {
  for (std::size_t i = 0; i < positive_.size(); ++i) {
    if (positive_[i].weight == w) return static_cast<int>(i);
  }
  return -1;
}

bool RootSystem::is_root(const Weight& w) const {
  return positive_root_index(w) >= 0 || positive_root_index(-w) >= 0;
}

bool RootSystem::in_qplus(const Weight& w, const std::vector<bool>* mask) const {
  auto c = lattice_coords(w);
  if (!c) return false;
  for (std::size_t i = 0; i < c->size(); ++i) {
    if ((*c)[i] < 0) return false;
    if (mask && (*c)[i] != 0 && !(*mask)[i]) return false;
  }
  return true;
}

bool RootSystem::leq(const Weight& lambda, const Weight& mu) const { return in_qplus(mu - lambda); }

std::vector<Weight> RootSystem::enumerate_qplus(const Weight& bound, const std::vector<bool>* mask) const {
  std::vector<Weight> out;
  auto b = lattice_coords(bound);
  if (!b) return out;
  for (long x : *b) {
    if (x < 0) return out;
  }
  const int r = rank();
  std::vector<long> cap(*b);
  if (mask) {
    for (int i = 0; i < r; ++i) {
      if (!(*mask)[i]) cap[i] = 0;
    }
  }
  std::vector<std::vector<long>> coords;
  std::vector<long> cur(r, 0);
  for (;;) {
    coords.push_back(cur);
    int i = 0;
    while (i < r && cur[i] == cap[i]) cur[i++] = 0;
    if (i == r) break;
    ++cur[i];
  }
  std::sort(coords.begin(), coords.end(), [](const auto& x, const auto& y) {
    const long hx = std::accumulate(x.begin(), x.end(), 0L);
    const long hy = std::accumulate(y.begin(), y.end(), 0L);
    if (hx != hy) return hx < hy;
    return x > y;
  });
  for (const auto& c : coords) out.push_back(from_simple_coords(c));
  return out;
}

ParabolicData parabolic(const RootSystem& rs, const std::vector<int>& S) {
  ParabolicData pd;
  pd.in_S.assign(rs.rank(), false);
  for (int i : S) {
    if (i < 0 || i >= rs.rank()) throw ConfigError("parabolic subset is not contained in the simple roots");
    pd.in_S[i] = true;
  }
  for (int i = 0; i < rs.rank(); ++i) {
    if (pd.in_S[i]) pd.S.push_back(i);
  }
  for (const auto& r : rs.positive_roots()) {
    bool levi = true;
    for (std::size_t i = 0; i < r.simple_coords.size(); ++i) {
      if (r.simple_coords[i] != 0 && !pd.in_S[i]) levi = false;
    }
    pd.positive_in_levi.push_back(levi);
    if (levi) {
      pd.delta0.push_back(r.weight);
      pd.delta0.push_back(-r.weight);
    } else {
      pd.delta_plus_S.push_back(r.weight);
      pd.delta_minus_S.push_back(-r.weight);
    }
  }
  return pd;
}

Family parse_family(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "product") return Family::Product;
  throw ConfigError("unsupported family '" + s + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A:
      return "A";
    case Family::C:
      return "C";
    case Family::D:
      return "D";
    case Family::Product:
      return "product";
  }
  return "?";
}

}  // namespace redalg
