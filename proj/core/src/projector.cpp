#include "redalg/projector.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "redalg/errors.hpp"
#include "redalg/linsolve.hpp"

namespace redalg {

namespace {

constexpr const char* kCacheHeader = "redalg-projector-cache 1";

IntWeight simple_root_weight(const Algebra& alg, int i) {
  IntWeight w{};
  const std::vector<long> c = alg.root_system().simple_roots()[i].to_ints();
  for (std::size_t k = 0; k < c.size(); ++k) w[k] = c[k];
  return w;
}

std::string coords_string(const RootCoords& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s;
}

Word theta_word(const Algebra& alg, const Word& e) {
  Word out;
  for (std::size_t k = e.size(); k-- > 0;) out.push_back(static_cast<char>(alg.theta_letter(letter_at(e, k))));
  return out;
}

// E letters admitted by the context, in letter order.
std::vector<int> context_e_letters(const Context& ctx) {
  const Algebra& alg = ctx.algebra();
  std::vector<int> out;
  for (int p : ctx.positive_roots()) out.push_back(alg.e_letter(p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

IntWeight f_part_weight(const Algebra& alg, const Word& w) {
  IntWeight r{};
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter& l = alg.letter(letter_at(w, i));
    if (l.kind != LetterKind::F) break;
    for (int k = 0; k < kMaxVars; ++k) r[k] += l.weight[k];
  }
  return r;
}

IntWeight e_part_weight(const Algebra& alg, const Word& w) {
  IntWeight r{};
  for (std::size_t i = w.size(); i-- > 0;) {
    const Letter& l = alg.letter(letter_at(w, i));
    if (l.kind != LetterKind::E) break;
    for (int k = 0; k < kMaxVars; ++k) r[k] += l.weight[k];
  }
  return r;
}

RootCoords qplus_coords(const Context& ctx, const Weight& lambda) {
  const RootSystem& rs = ctx.algebra().root_system();
  auto c = rs.lattice_coords(lambda);
  if (!c) throw InvalidInput("weight " + lambda.to_string() + " is not in the root lattice");
  for (std::size_t i = 0; i < c->size(); ++i) {
    if ((*c)[i] < 0) throw InvalidInput("weight " + lambda.to_string() + " is not in Q_+");
    if ((*c)[i] != 0 && !ctx.simple_mask()[i]) {
      throw InvalidInput("weight " + lambda.to_string() + " is not supported on the simple roots of the context");
    }
  }
  return *c;
}

std::shared_ptr<Projector> Projector::of(const std::shared_ptr<const Context>& ctx) {
  const Context* raw = ctx.get();
  return ctx->algebra().attachment<Projector>("projector:" + ctx->name(),
                                              [raw] { return std::make_shared<Projector>(raw); });
}

std::vector<Word> Projector::basis(const RootCoords& lambda) const {
  const Algebra& alg = ctx_->algebra();
  const std::vector<int> letters = context_e_letters(*ctx_);
  std::vector<Word> out;
  Word cur;
  RootCoords rest = lambda;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (std::all_of(rest.begin(), rest.end(), [](long v) { return v == 0; })) {
      out.push_back(cur);
      return;
    }
    if (k == letters.size()) return;
    const std::vector<long>& rc = alg.root_system().positive_roots()[alg.letter(letters[k]).root].simple_coords;
    int taken = 0;
    while (true) {
      self(self, k + 1);
      bool fits = true;
      for (std::size_t i = 0; i < rest.size(); ++i) fits = fits && rest[i] >= rc[i];
      if (!fits) break;
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= rc[i];
      cur.push_back(static_cast<char>(letters[k]));
      ++taken;
    }
    for (int t = 0; t < taken; ++t) {
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] += rc[i];
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

const ProjectorTerm& Projector::term(const Weight& lambda) { return term(qplus_coords(*ctx_, lambda)); }

std::size_t Projector::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.size();
}

const ProjectorTerm& Projector::term(const RootCoords& lambda) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(lambda);
    if (it != memo_.end()) return it->second;
  }
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0 || (lambda[i] != 0 && !ctx_->simple_mask()[i])) {
      throw InvalidInput("projector weight outside Q_+ of the context");
    }
  }
  ProjectorTerm t = solve(lambda);
  bool fresh = false;
  const ProjectorTerm* out = nullptr;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = memo_.try_emplace(lambda, std::move(t));
    fresh = inserted;
    out = &it->second;
  }
  if (fresh && !cache_path_.empty()) append_to_cache(*out);
  return *out;
}

ProjectorTerm Projector::assemble(const RootCoords& lambda, std::vector<Word> basis,
                                  std::vector<std::vector<RationalFn>> zeta) const {
  const Algebra& alg = ctx_->algebra();
  ProjectorTerm t;
  t.lambda = lambda;
  t.value = Element(alg.context(ctx_->is_levi()));
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (!zeta[a][b].is_zero()) t.value.add_term(theta_word(alg, basis[b]) + basis[a], zeta[a][b]);
    }
  }
  t.basis = std::move(basis);
  t.zeta = std::move(zeta);
  return t;
}

// For each simple i with nu = mu - alpha_i in Q_+, the coefficient of
// theta(e'') e~ (e'' in B_nu, e~ in B_mu) in e_i P^{<=mu} must vanish:
//   sum_{e'} zeta_{e~,e'}(h) c_{e'',e'}(h + alpha_i) = -sum_e n_{e~;i,e} zeta^nu_{e,e''}(h)
// where N(e_i theta(e')) = theta(e') e_i + sum c_{e'',e'} theta(e'') and
// N(e_i e) = sum n_{e~;i,e} e~. One multi-RHS system per mu.
ProjectorTerm Projector::solve(const RootCoords& mu) {
  const Algebra& alg = ctx_->algebra();
  std::vector<Word> B = basis(mu);
  if (B.size() == 1 && B[0].empty()) return assemble(mu, std::move(B), {{RationalFn(1)}});
  if (B.empty()) return assemble(mu, {}, {});

  std::unordered_map<Word, std::size_t> index_mu;
  for (std::size_t k = 0; k < B.size(); ++k) index_mu[B[k]] = k;
  const std::size_t n = B.size();
  std::vector<std::vector<RationalFn>> rows;
  std::vector<std::vector<RationalFn>> rhs(n);

  for (int i : ctx_->simple_indices()) {
    if (mu[i] == 0) continue;
    RootCoords nu = mu;
    nu[i] -= 1;
    const ProjectorTerm& lower = term(nu);
    if (lower.basis.empty()) continue;
    const IntWeight alpha = simple_root_weight(alg, i);
    const int ei = alg.e_letter(alg.root_system().positive_root_index(alg.root_system().simple_roots()[i]));
    const Word ei_word(1, static_cast<char>(ei));
    std::unordered_map<Word, std::size_t> theta_index;
    for (std::size_t k = 0; k < lower.basis.size(); ++k) theta_index[theta_word(alg, lower.basis[k])] = k;

    const std::size_t row0 = rows.size();
    rows.resize(row0 + lower.basis.size(), std::vector<RationalFn>(n));
    for (std::size_t c = 0; c < n; ++c) {
      const Word tw = theta_word(alg, B[c]);
      for (const auto& [w, q] : alg.word_product(ei_word, tw)) {
        if (w == tw + ei_word) {
          if (!q.is_one()) throw InternalError("unexpected leading coefficient in e_i theta(e')");
          continue;
        }
        auto it = theta_index.find(w);
        if (it == theta_index.end()) throw InternalError("e_i theta(e') left the span of theta(B_nu)");
        rows[row0 + it->second][c] = q.shifted(weight_span(alpha, alg.num_vars()));
      }
    }
    for (std::size_t r = 0; r < n; ++r) rhs[r].resize(rows.size());
    for (std::size_t e = 0; e < lower.basis.size(); ++e) {
      for (const auto& [w, q] : alg.word_product(ei_word, lower.basis[e])) {
        auto it = index_mu.find(w);
        if (it == index_mu.end()) throw InternalError("e_i e left the span of B_mu");
        for (std::size_t e2 = 0; e2 < lower.basis.size(); ++e2) {
          const RationalFn& z = lower.zeta[e][e2];
          if (z.is_zero()) continue;
          rhs[it->second][row0 + e2] -= q * z;
        }
      }
    }
  }
  for (auto& r : rhs) r.resize(rows.size());
  EchelonSolver<RationalFn> solver(std::move(rows), std::move(rhs), n);
  if (solver.rank() != n) throw InternalError("projector system is singular at weight " + coords_string(mu));
  std::vector<std::vector<RationalFn>> zeta(n);
  for (std::size_t r = 0; r < n; ++r) {
    LinearSolution<RationalFn> sol = solver.solution(r);
    if (!sol.consistent) throw InternalError("projector system is inconsistent at weight " + coords_string(mu));
    zeta[r] = std::move(sol.particular);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!(zeta[a][b] == zeta[b][a])) throw InternalError("projector component is not theta-symmetric");
    }
  }
  return assemble(mu, std::move(B), std::move(zeta));
}

// ---------------------------------------------------------------------------
// Disk cache. Text format, one block per component:
//   redalg-projector-cache 1
//   term <g|k> <c1,c2,...> <basis size>
//   sig <algebra signature>
//   z <row> <col> <coefficient>
//   end

namespace {

class FileLock {
 public:
  FileLock(const std::string& path, int op, bool create) {
    fd_ = ::open(path.c_str(), create ? (O_RDWR | O_CREAT | O_APPEND) : O_RDONLY, 0644);
    if (fd_ >= 0) ::flock(fd_, op);
  }
  ~FileLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;
  int fd() const { return fd_; }

 private:
  int fd_ = -1;
};

}  // namespace

void Projector::attach_cache(const std::string& path) {
  const Algebra& alg = ctx_->algebra();
  const std::string sig = alg.signature();
  std::string content;
  {
    FileLock lock(path, LOCK_SH, false);
    if (lock.fd() >= 0) {
      std::ifstream in(path);
      std::stringstream ss;
      ss << in.rdbuf();
      content = ss.str();
    }
  }
  std::istringstream in(content);
  std::string line;
  if (!content.empty()) {
    std::getline(in, line);
    if (line != kCacheHeader) throw ConfigError("unsupported projector cache format in " + path);
  }
  while (std::getline(in, line)) {
    if (line.rfind("term ", 0) != 0) continue;
    std::istringstream head(line.substr(5));
    std::string ctx_name, coords_text;
    std::size_t size = 0;
    head >> ctx_name >> coords_text >> size;
    std::string sig_line;
    std::getline(in, sig_line);
    const bool match = ctx_name == ctx_->name() && sig_line == "sig " + sig;
    std::vector<std::vector<RationalFn>> zeta(size, std::vector<RationalFn>(size));
    bool complete = false;
    while (std::getline(in, line)) {
      if (line == "end") {
        complete = true;
        break;
      }
      if (!match || line.rfind("z ", 0) != 0) continue;
      std::istringstream zs(line.substr(2));
      std::size_t r = 0, c = 0;
      zs >> r >> c;
      std::string coef;
      std::getline(zs, coef);
      if (r >= size || c >= size) throw ConfigError("corrupt projector cache entry in " + path);
      zeta[r][c] = RationalFn::parse(coef, alg.var_names());
    }
    if (!match || !complete) continue;
    RootCoords lambda;
    std::istringstream cs(coords_text);
    for (std::string part; std::getline(cs, part, ',');) lambda.push_back(std::stol(part));
    if (lambda.size() != static_cast<std::size_t>(alg.root_system().rank())) continue;
    std::vector<Word> B = basis(lambda);
    if (B.size() != size) throw ConfigError("projector cache does not match the algebra in " + path);
    ProjectorTerm t = assemble(lambda, std::move(B), std::move(zeta));
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.try_emplace(lambda, std::move(t));
  }
  std::lock_guard<std::mutex> lock(mutex_);
  cache_path_ = path;
}

void Projector::append_to_cache(const ProjectorTerm& t) const {
  const Algebra& alg = ctx_->algebra();
  std::ostringstream os;
  os << "term " << ctx_->name() << " " << coords_string(t.lambda) << " " << t.basis.size() << "\n";
  os << "sig " << alg.signature() << "\n";
  for (std::size_t r = 0; r < t.zeta.size(); ++r) {
    for (std::size_t c = 0; c < t.zeta.size(); ++c) {
      if (!t.zeta[r][c].is_zero()) os << "z " << r << " " << c << " " << t.zeta[r][c].to_string(alg.var_names()) << "\n";
    }
  }
  os << "end\n";
  FileLock lock(cache_path_, LOCK_EX, true);
  if (lock.fd() < 0) throw ResourceError("cannot open projector cache " + cache_path_);
  std::string block = os.str();
  if (::lseek(lock.fd(), 0, SEEK_END) == 0) block = std::string(kCacheHeader) + "\n" + block;
  const char* p = block.data();
  std::size_t left = block.size();
  while (left > 0) {
    const ssize_t w = ::write(lock.fd(), p, left);
    if (w <= 0) throw ResourceError("cannot write projector cache " + cache_path_);
    p += w;
    left -= static_cast<std::size_t>(w);
  }
}

// ---------------------------------------------------------------------------

const ProjectorTerm& projector_term(const std::shared_ptr<const Context>& ctx, const Weight& lambda) {
  return Projector::of(ctx)->term(lambda);
}

Element projector_truncated(const std::shared_ptr<const Context>& ctx, const Weight& bound) {
  const RootSystem& rs = ctx->algebra().root_system();
  if (!rs.in_qplus(bound)) throw InvalidInput("truncation bound must lie in Q_+");
  auto proj = Projector::of(ctx);
  Element out(ctx);
  for (const Weight& lambda : rs.enumerate_qplus(bound, &ctx->simple_mask())) out += proj->term(lambda).value;
  return out;
}

// ---------------------------------------------------------------------------
// Oracle

namespace {

struct OracleSolver {
  std::shared_ptr<const Context> ctx;
  std::map<RootCoords, ProjectorTerm> done;

  const ProjectorTerm& get(const RootCoords& mu) {
    auto it = done.find(mu);
    if (it != done.end()) return it->second;
    ProjectorTerm t = compute(mu);
    return done.emplace(mu, std::move(t)).first->second;
  }

  ProjectorTerm compute(const RootCoords& mu) {
    const Algebra& alg = ctx->algebra();
    Projector shape(ctx.get());
    ProjectorTerm out;
    out.lambda = mu;
    out.basis = shape.basis(mu);
    out.value = Element(ctx);
    const std::size_t n = out.basis.size();
    if (n == 1 && out.basis[0].empty()) {
      out.zeta = {{RationalFn(1)}};
      out.value = Element::scalar(ctx, RationalFn(1));
      return out;
    }
    const std::size_t unknowns = n * n;
    std::vector<std::vector<RationalFn>> rows;
    std::vector<RationalFn> rhs;
    const int dim = alg.num_vars();
    auto monomial = [&](std::size_t a, std::size_t b) {
      return Element::monomial(ctx, theta_word(alg, out.basis[b]) + out.basis[a]);
    };

    for (int i : ctx->simple_indices()) {
      if (mu[i] == 0) continue;
      RootCoords nu = mu;
      nu[i] -= 1;
      const ProjectorTerm& lower = get(nu);
      const IntWeight alpha = simple_root_weight(alg, i);
      const int root = alg.root_system().positive_root_index(alg.root_system().simple_roots()[i]);
      const Element e = Element::letter(ctx, alg.e_letter(root));
      const Element f = Element::letter(ctx, alg.f_letter(root));
      IntWeight nu_w{};
      for (std::size_t k = 0; k < nu.size(); ++k) {
        const IntWeight s = simple_root_weight(alg, static_cast<int>(k));
        for (int d = 0; d < kMaxVars; ++d) nu_w[d] += nu[k] * s[d];
      }
      const IntWeight mu_w = nu_w + alpha;

      // g_+ P = 0 on monomials with f-part weight -nu, after h -> h + alpha_i.
      {
        std::map<Word, std::vector<RationalFn>> eq;
        std::map<Word, RationalFn> known;
        auto keep = [&](const Word& w) { return f_part_weight(alg, w) == negated(nu_w); };
        const Element lower_image = e * lower.value;
        for (const auto& [w, q] : lower_image.terms()) {
          if (keep(w)) known[w] = q.shifted(weight_span(alpha, dim));
        }
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            const Element image = e * monomial(a, b);
            for (const auto& [w, q] : image.terms()) {
              if (!keep(w)) continue;
              auto& row = eq[w];
              row.resize(unknowns);
              row[a * n + b] = q.shifted(weight_span(alpha, dim));
            }
          }
        }
        for (const auto& [w, q] : known) eq[w].resize(unknowns);
        for (auto& [w, row] : eq) {
          rows.push_back(std::move(row));
          auto it = known.find(w);
          rhs.push_back(it == known.end() ? RationalFn(0) : -it->second);
        }
      }
      // P g_- = 0 on monomials with f-part weight -mu.
      {
        std::map<Word, std::vector<RationalFn>> eq;
        std::map<Word, RationalFn> known;
        auto keep = [&](const Word& w) { return f_part_weight(alg, w) == negated(mu_w); };
        const Element lower_image = lower.value * f;
        for (const auto& [w, q] : lower_image.terms()) {
          if (keep(w)) known[w] = q;
        }
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            const Element image = monomial(a, b) * f;
            for (const auto& [w, q] : image.terms()) {
              if (!keep(w)) continue;
              auto& row = eq[w];
              row.resize(unknowns);
              row[a * n + b] = q;
            }
          }
        }
        for (const auto& [w, q] : known) eq[w].resize(unknowns);
        for (auto& [w, row] : eq) {
          rows.push_back(std::move(row));
          auto it = known.find(w);
          rhs.push_back(it == known.end() ? RationalFn(0) : -it->second);
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        std::vector<RationalFn> row(unknowns);
        row[a * n + b] = RationalFn(1);
        row[b * n + a] = RationalFn(-1);
        rows.push_back(std::move(row));
        rhs.emplace_back(0);
      }
    }
    EchelonSolver<RationalFn> solver(std::move(rows), {std::move(rhs)}, unknowns);
    if (solver.rank() != unknowns) throw InternalError("oracle projector system is singular at weight " + coords_string(mu));
    LinearSolution<RationalFn> sol = solver.solution(0);
    if (!sol.consistent) throw InternalError("oracle projector system is inconsistent at weight " + coords_string(mu));
    out.zeta.assign(n, std::vector<RationalFn>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        out.zeta[a][b] = sol.particular[a * n + b];
        if (!out.zeta[a][b].is_zero()) out.value.add_term(theta_word(alg, out.basis[b]) + out.basis[a], out.zeta[a][b]);
      }
    }
    return out;
  }
};

}  // namespace

ProjectorTerm oracle_projector(const std::shared_ptr<const Context>& ctx, const Weight& lambda) {
  OracleSolver s{ctx, {}};
  return s.get(qplus_coords(*ctx, lambda));
}

std::vector<LeviCheckEntry> levi_truncation_check(const Algebra& alg, const Weight& bound, int max_height) {
  const RootSystem& rs = alg.root_system();
  const auto g = alg.full();
  const auto k = alg.levi();
  auto pg = Projector::of(g);
  auto pk = Projector::of(k);
  std::vector<LeviCheckEntry> report;
  for (const Weight& lambda : rs.enumerate_qplus(bound, &k->simple_mask())) {
    LeviCheckEntry entry;
    entry.lambda = qplus_coords(*k, lambda);
    long height = 0;
    for (long c : entry.lambda) height += c;
    if (max_height >= 0 && height > max_height) continue;
    Element truncated(k);
    for (const auto& [w, q] : pg->term(entry.lambda).value.terms()) {
      bool keep = true;
      for (std::size_t i = 0; i < w.size(); ++i) keep = keep && k->allows(letter_at(w, i));
      if (keep) truncated.add_term(w, q);
    }
    const Element& intrinsic = pk->term(entry.lambda).value;
    entry.pass = truncated == intrinsic;
    if (!entry.pass) entry.detail = "truncated " + truncated.to_string() + " vs intrinsic " + intrinsic.to_string();
    report.push_back(std::move(entry));
  }
  return report;
}

}  // namespace redalg
