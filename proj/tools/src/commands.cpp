#include "redalg/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "redalg/cli/emit.hpp"
#include "redalg/cli/expr.hpp"
#include "redalg/cli/sampling.hpp"
#include "redalg/errors.hpp"

namespace redalg::cli {

namespace {

struct Options {
  std::string ctx_path;
  std::string format = "text";
  std::string context = "g";
  std::string cache;
  std::string bound;
  std::string suite;
  std::string file;
  std::string a, b;
  std::vector<std::string> ansatz;
  unsigned seed = 1;
  int count = 5;
};

struct Session {
  AlgebraConfig cfg;
  std::shared_ptr<const Algebra> alg;

  explicit Session(const Options& o) : cfg(AlgebraConfig::load(o.ctx_path)), alg(cfg.build()) {
    const std::string cache = o.cache.empty() ? cfg.resolve(cfg.cache) : o.cache;
    if (!cache.empty()) {
      Projector::of(alg->full())->attach_cache(cache);
      if (alg->has_parabolic()) Projector::of(alg->levi())->attach_cache(cache);
    }
  }

  std::shared_ptr<const Context> context(const std::string& tag) const {
    if (tag == "g") return alg->full();
    if (tag == "k") {
      if (!alg->has_parabolic()) throw ConfigError("context k needs a parabolic subset in the config");
      return alg->levi();
    }
    throw ConfigError("unknown context '" + tag + "'");
  }
};

IndexEmbedding embedding_of(const AlgebraConfig& cfg) {
  IndexEmbedding emb;
  for (int i : cfg.embed_index) emb.index.push_back(i - 1);
  return emb;
}

json read_json(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read " + path);
    ss << in.rdbuf();
  }
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in ") + path, e.byte);
  }
}

// A relation file over g, k, or over the source algebra of the embedding
// (then carried into k).
Relation load_relation(const json& file, const Session& s, const std::vector<std::string>& allowed) {
  // Output of the relation command carries the relation under "relation".
  const json& j = file.contains("relation") ? file.at("relation") : file;
  const std::string tag = j.value("context", "k");
  if (std::find(allowed.begin(), allowed.end(), tag) == allowed.end()) {
    throw ConfigError("relation context '" + tag + "' is not accepted here");
  }
  if (tag != "source") return relation_from_json(j, s.context(tag));
  if (s.cfg.embed_from.empty()) throw ConfigError("context source needs embed_from in the config");
  const AlgebraConfig src_cfg = AlgebraConfig::load(s.cfg.resolve(s.cfg.embed_from));
  const auto src = src_cfg.build();
  const Relation rel = relation_from_json(j, src->full());
  return reindex(rel, s.context("k"), embedding_of(s.cfg));
}

// "A <> B" at paren depth zero, with nothing else at that depth, splits into
// its operands; anything else is the pair (text, 1).
std::pair<std::string, std::string> diamond_operands(const std::string& text) {
  int depth = 0;
  std::size_t at = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && c == '<' && i + 1 < text.size() && text[i + 1] == '>') {
      if (at != std::string::npos) return {text, "1"};
      at = i;
    }
    if (depth == 0 && at != std::string::npos && i > at + 1 && (c == '+' || c == '-')) return {text, "1"};
  }
  if (at == std::string::npos) return {text, "1"};
  for (std::size_t i = 0; i < at; ++i) {
    const char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && (c == '+' || c == '-') && text.find_first_not_of(' ') != i) return {text, "1"};
  }
  return {text.substr(0, at), text.substr(at + 2)};
}

std::string relation_text(const Relation& r) { return r.to_string(); }

std::string relation_latex(const Relation& r) {
  std::string out;
  for (std::size_t i = 0; i < r.pairs().size(); ++i) {
    out += (i ? " + " : "") + std::string("\\left(") + latex(r.pairs()[i].first) + "\\right) \\diamond \\left(" +
           latex(r.pairs()[i].second) + "\\right)";
  }
  if (r.pairs().empty()) out = "0";
  return out + " = " + latex(r.rhs());
}

void emit(std::ostream& out, const Options& o, const std::string& text, const json& j, const std::string& tex) {
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else if (o.format == "latex") {
    out << tex << "\n";
  } else {
    out << text << "\n";
  }
}

int cmd_define_check(const Options& o, std::ostream& out) {
  const Session s(o);
  const Algebra& alg = *s.alg;
  alg.module().validate(alg.lie());
  const RootSystem& rs = alg.root_system();
  json j{{"root_system", rs.name()},
         {"variables", alg.var_names()},
         {"positive_roots", rs.positive_roots().size()},
         {"module", alg.kind() == ModuleKind::Adjoint ? "adjoint" : "weyl"},
         {"module_generators", alg.module().size()},
         {"parabolic", alg.has_parabolic()}};
  std::ostringstream text;
  text << "root system " << rs.name() << ", " << rs.positive_roots().size() << " positive roots, "
       << alg.module().size() << " module generators";
  if (alg.has_parabolic()) {
    json levi = json::array();
    for (int r : alg.levi()->positive_roots()) levi.push_back(rs.positive_roots()[r].simple_coords);
    j["levi_positive_roots"] = levi;
    j["m_plus"] = alg.module().m_plus().size();
    j["m_minus"] = alg.module().m_minus().size();
    text << "\nLevi part: " << levi.size() << " positive roots; M_+ has " << alg.module().m_plus().size()
         << " generators, M_- has " << alg.module().m_minus().size();
  }
  if (!s.cfg.embed_from.empty()) {
    const AlgebraConfig src_cfg = AlgebraConfig::load(s.cfg.resolve(s.cfg.embed_from));
    const auto src = src_cfg.build();
    const auto k = s.context("k");
    const IndexEmbedding emb = embedding_of(s.cfg);
    json images = json::object();
    for (const CosetElement& gsrc : coset_generators(src->full())) {
      images[gsrc.to_string()] = reindex(gsrc, k, emb).to_string();
    }
    j["embedding"] = images;
    text << "\nembedding from " << src->root_system().name() << " into the Levi part checked (" << images.size()
         << " generators)";
  }
  text << "\nok";
  emit(out, o, text.str(), j, text.str());
  return kOk;
}

int cmd_diamond(const Options& o, std::ostream& out) {
  const Session s(o);
  const auto ctx = s.context(o.context);
  const CosetElement r = diamond(parse_coset(o.a, ctx), parse_coset(o.b, ctx));
  emit(out, o, r.to_string(), json{{"context", o.context}, {"result", to_json(r)}}, latex(r));
  return kOk;
}

int cmd_projector(const Options& o, std::ostream& out) {
  const Session s(o);
  const auto ctx = s.context(o.context);
  const RootSystem& rs = s.alg->root_system();
  RootCoords bound(static_cast<std::size_t>(rs.rank()), 0);
  if (o.bound.empty()) {
    for (int i : ctx->simple_indices()) bound[i] = 1;
  } else {
    std::stringstream ss(o.bound);
    std::string part;
    std::size_t i = 0;
    while (std::getline(ss, part, ',')) {
      if (i >= bound.size()) throw ConfigError("--bound has more entries than simple roots");
      bound[i++] = std::stol(part);
    }
    if (i != bound.size()) throw ConfigError("--bound needs one entry per simple root");
  }
  const Weight bw = rs.from_simple_coords(bound);
  qplus_coords(*ctx, bw);
  json terms = json::array();
  std::ostringstream text, tex;
  for (const Weight& lambda : rs.enumerate_qplus(bw, &ctx->simple_mask())) {
    const ProjectorTerm& t = projector_term(ctx, lambda);
    const RootCoords c = *rs.lattice_coords(lambda);
    std::string label;
    for (std::size_t i = 0; i < c.size(); ++i) label += (i ? "," : "") + std::to_string(c[i]);
    terms.push_back({{"lambda", c}, {"basis_size", t.basis.size()}, {"value", t.value.to_string()}});
    text << "P[" << label << "] = " << t.value.to_string() << "\n";
    tex << "P^{(" << label << ")} = " << latex(t.value) << "\\\\\n";
  }
  std::string t = text.str(), x = tex.str();
  if (!t.empty()) t.pop_back();
  if (!x.empty()) x.pop_back();
  emit(out, o, t, json{{"context", o.context}, {"bound", bound}, {"terms", terms}}, x);
  return kOk;
}

int cmd_relation(const Options& o, std::ostream& out) {
  const Session s(o);
  const auto ctx = s.context(o.context);
  const CosetElement lhs = parse_coset(o.a, ctx);
  std::vector<CosetElement> ansatz;
  for (const auto& e : o.ansatz) ansatz.push_back(parse_coset(e, ctx));
  const CoefficientSolution sol = solve_coefficients(lhs, ansatz);
  const auto& names = s.alg->var_names();
  const char* outcome = sol.outcome == SolveOutcome::Unique ? "unique" : sol.outcome == SolveOutcome::Family ? "family" : "none";
  json j{{"context", o.context}, {"outcome", outcome}, {"lhs", o.a}, {"ansatz", o.ansatz}};
  std::ostringstream text, tex;
  text << "outcome: " << outcome;
  if (sol.outcome != SolveOutcome::NoSolution) {
    json coeffs = json::array();
    for (const auto& c : sol.coefficients) coeffs.push_back(c.to_string(names));
    j["coefficients"] = coeffs;
    json kernel = json::array();
    for (const auto& v : sol.kernel) {
      json row = json::array();
      for (const auto& c : v) row.push_back(c.to_string(names));
      kernel.push_back(row);
    }
    j["kernel"] = kernel;
    // lhs - sum c_i A_i <> B_i = 0, each product kept as a pair.
    std::vector<Relation::Pair> pairs;
    const auto [la, lb] = diamond_operands(o.a);
    pairs.emplace_back(parse_coset(la, ctx), parse_coset(lb, ctx));
    for (std::size_t i = 0; i < ansatz.size(); ++i) {
      if (sol.coefficients[i].is_zero()) continue;
      const auto [a, b] = diamond_operands(o.ansatz[i]);
      pairs.emplace_back(parse_coset(a, ctx).scaled(-sol.coefficients[i]), parse_coset(b, ctx));
    }
    const Relation rel(ctx, std::move(pairs), CosetElement(ctx));
    const CosetElement residual = rel.residual();
    j["relation"] = relation_to_json(rel, o.context);
    j["relation"]["certificate"] = {{"residual", residual.to_string()}};
    tex << "\\begin{aligned}\n";
    for (std::size_t i = 0; i < sol.coefficients.size(); ++i) {
      text << "\nc" << i + 1 << " = " << sol.coefficients[i].to_string(names) << "    [" << o.ansatz[i] << "]";
      tex << "\\xi_{" << i + 1 << "} &= " << latex(sol.coefficients[i], names) << "\\\\\n";
    }
    for (std::size_t v = 0; v < sol.kernel.size(); ++v) {
      text << "\nkernel " << v + 1 << ":";
      for (const auto& c : sol.kernel[v]) text << " " << c.to_string(names);
    }
    text << "\nresidual: " << residual.to_string();
    tex << "\\end{aligned}";
  }
  emit(out, o, text.str(), j, tex.str());
  if (sol.outcome == SolveOutcome::NoSolution) return kMathOutcome;
  return sol.outcome == SolveOutcome::Family ? kFamily : kOk;
}

int cmd_stabilize(const Options& o, std::ostream& out) {
  const Session s(o);
  const Relation rel = load_relation(read_json(o.file), s, {"k", "source"});
  const Stabilized st = stabilize(rel);
  json j = relation_to_json(st.lifted, "g");
  const CosetElement residual = st.lifted.residual();
  j["certificate"] = {{"residual", residual.to_string()}, {"z_in_J", true}, {"z", to_json(st.z)}};
  std::string text = relation_text(st.lifted) + "\nz = " + st.z.to_string() + "\nz in J: yes\nresidual: " + residual.to_string();
  emit(out, o, text, j, relation_latex(st.lifted));
  return residual.is_zero() ? kOk : kEngineError;
}

int cmd_cut(const Options& o, std::ostream& out) {
  const Session s(o);
  const Relation rel = load_relation(read_json(o.file), s, {"g"});
  const Relation k = cut(rel);
  json j = relation_to_json(k, "k");
  j["certificate"] = {{"residual", "0"}, {"z_in_J", true}, {"z", to_json(rel.rhs())}};
  emit(out, o, relation_text(k) + "\nrhs over g in J: yes\nresidual: 0", j, relation_latex(k));
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const AlgebraConfig cfg = AlgebraConfig::load(o.ctx_path);
  if (!o.cache.empty() || !cfg.cache.empty()) {
    // Caches are attached per algebra; the suites build their own.
  }
  const SuiteReport r = run_suite(o.suite, cfg, o.seed, o.count);
  json checks = json::array();
  std::ostringstream text;
  for (const auto& [name, ok] : r.checks) {
    checks.push_back({{"check", name}, {"pass", ok}});
    text << (ok ? "PASS " : "FAIL ") << name << "\n";
  }
  text << "suite " << r.suite << ": " << (r.pass() ? "pass" : "fail");
  emit(out, o, text.str(), json{{"suite", r.suite}, {"seed", o.seed}, {"pass", r.pass()}, {"checks", checks}}, text.str());
  return r.pass() ? kOk : kMathOutcome;
}

}  // namespace

SuiteReport run_suite(const std::string& suite, const AlgebraConfig& cfg, unsigned seed, int count) {
  SuiteReport r{suite, {}};
  const auto alg = cfg.build();
  const auto g = alg->full();
  std::mt19937 rng(seed);
  auto check = [&](const std::string& name, bool ok) { r.checks.emplace_back(name, ok); };
  auto need_parabolic = [&] {
    if (!alg->has_parabolic()) throw ConfigError("suite " + suite + " needs a parabolic subset in the config");
  };
  const RootSystem& rs = alg->root_system();

  if (suite == "projector") {
    RootCoords bound(static_cast<std::size_t>(rs.rank()), 2);
    for (const Weight& lambda : rs.enumerate_qplus(rs.from_simple_coords(bound))) {
      const RootCoords c = *rs.lattice_coords(lambda);
      long h = 0;
      for (long x : c) h += x;
      if (h > 2) continue;
      std::string label;
      for (std::size_t i = 0; i < c.size(); ++i) label += (i ? "," : "") + std::to_string(c[i]);
      const ProjectorTerm& t = projector_term(g, lambda);
      check("oracle agreement at [" + label + "]", oracle_projector(g, lambda).value == t.value);
      check("theta symmetry at [" + label + "]", theta(t.value) == t.value);
    }
    if (alg->has_parabolic()) {
      RootCoords lb(static_cast<std::size_t>(rs.rank()), 0);
      for (int i : alg->levi()->simple_indices()) lb[i] = 2;
      for (const LeviCheckEntry& e : levi_truncation_check(*alg, rs.from_simple_coords(lb), 2)) {
        std::string label;
        for (std::size_t i = 0; i < e.lambda.size(); ++i) label += (i ? "," : "") + std::to_string(e.lambda[i]);
        check("Levi truncation at [" + label + "]", e.pass);
      }
    }
  } else if (suite == "associativity") {
    for (const auto& ctx : alg->has_parabolic() ? std::vector{g, alg->levi()} : std::vector{g}) {
      for (int t = 0; t < count; ++t) {
        const CosetElement a = sample_coset(rng, ctx, 2), b = sample_coset(rng, ctx, 2), c = sample_coset(rng, ctx, 2);
        check("associativity over " + ctx->name() + " #" + std::to_string(t), diamond(diamond(a, b), c) == diamond(a, diamond(b, c)));
      }
    }
  } else if (suite == "lemma") {
    need_parabolic();
    const auto k = alg->levi();
    const auto& mp = alg->module().m_plus();
    const auto& mm = alg->module().m_minus();
    for (int t = 0; t < count && !mp.empty() && !mm.empty(); ++t) {
      const CosetElement x = sample_coset(rng, g, 2);
      const CosetElement b = sample_coset(rng, g, 1);
      const CosetElement vplus(b.element() * Element::letter(g, alg->b_letter(mp[rng() % mp.size()])));
      const CosetElement vminus(Element::letter(g, alg->b_letter(mm[rng() % mm.size()])) * b.element());
      const CosetElement zk = embed_i(sample_coset(rng, k, 2));
      const Decomposition left = decompose(diamond(x, vplus));
      check("V_+ is a left ideal #" + std::to_string(t), left.z0.is_zero() && left.zminus.is_zero());
      const Decomposition right = decompose(diamond(vplus, zk));
      check("V_+ <> i(Z_k) in V_+ #" + std::to_string(t), right.z0.is_zero() && right.zminus.is_zero());
      const Decomposition minus = decompose(diamond(zk, vminus));
      check("i(Z_k) <> V_- in V_- #" + std::to_string(t), minus.z0.is_zero() && minus.zplus.is_zero());
    }
  } else if (suite == "prop") {
    need_parabolic();
    for (int t = 0; t < 10 * count; ++t) {
      const CosetElement z = sample_coset(rng, g, 3, 3);
      const Decomposition d = decompose(z);
      check("direct sum #" + std::to_string(t), z == embed_i(project_p(z)) + d.zminus + d.zplus + d.zoverlap);
      const CosetElement w = sample_coset(rng, alg->levi(), 2);
      check("p after i is the identity #" + std::to_string(t), project_p(embed_i(w)) == w);
    }
  } else if (suite == "theorem") {
    need_parabolic();
    const auto k = alg->levi();
    for (int t = 0; t < count; ++t) {
      std::vector<Relation::Pair> pairs;
      for (int j = 0; j < 2; ++j) pairs.emplace_back(sample_coset(rng, k, 2), sample_coset(rng, k, 2));
      const Relation probe(k, pairs, CosetElement(k));
      const Relation rel(k, std::move(pairs), probe.lhs());
      bool in_j = true, round_trip = false;
      try {
        const Stabilized st = stabilize(rel);
        round_trip = cut(st.lifted) == rel.normalized();
      } catch (const TheoremViolation&) {
        in_j = false;
      }
      check("stabilization residual in J #" + std::to_string(t), in_j);
      check("cut after stabilize #" + std::to_string(t), round_trip);
    }
  } else if (suite == "parser") {
    for (const auto& ctx : alg->has_parabolic() ? std::vector{g, alg->levi()} : std::vector{g}) {
      for (int t = 0; t < 10 * count; ++t) {
        const Element x = sample_element(rng, ctx, 3, 3, true);
        check("parse(print(x)) over " + ctx->name() + " #" + std::to_string(t), parse_element(x.to_string(), ctx) == x);
      }
    }
  } else {
    throw ConfigError("unknown suite " + suite);
  }
  return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Reduction algebra engine: projectors, diamond products, stabilization and cutting"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sc) {
    sc->add_option("--ctx", o.ctx_path, "Algebra config file")->required();
    sc->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
    sc->add_option("--cache", o.cache, "Projector cache file");
    sc->add_option("--seed", o.seed, "Random seed");
  };
  auto context_opt = [&](CLI::App* sc) {
    sc->add_option("--context", o.context, "g or k")->check(CLI::IsMember({"g", "k"}));
  };

  auto* define = app.add_subcommand("define-check", "Build and validate the algebra of a config");
  common(define);
  auto* dia = app.add_subcommand("diamond", "Diamond product of two coset expressions");
  common(dia);
  context_opt(dia);
  dia->add_option("a", o.a)->required();
  dia->add_option("b", o.b)->required();
  auto* proj = app.add_subcommand("projector", "Projector components up to a bound");
  common(proj);
  context_opt(proj);
  proj->add_option("--bound", o.bound, "Simple-root coordinates, comma separated");
  auto* rel = app.add_subcommand("relation", "Solve lhs = sum c_i ansatz_i for Cartan coefficients");
  common(rel);
  context_opt(rel);
  rel->add_option("lhs", o.a)->required();
  rel->add_option("ansatz", o.ansatz)->required();
  auto* stab = app.add_subcommand("stabilize", "Lift a relation from Z_k to Z_g");
  common(stab);
  stab->add_option("relation", o.file, "Relation JSON file, - for stdin")->required();
  auto* cutc = app.add_subcommand("cut", "Cut a relation from Z_g to Z_k");
  common(cutc);
  cutc->add_option("relation", o.file, "Relation JSON file, - for stdin")->required();
  auto* ver = app.add_subcommand("verify", "Run an invariant suite");
  common(ver);
  ver->add_option("--suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"projector", "associativity", "lemma", "prop", "theorem", "parser"}));
  ver->add_option("--count", o.count, "Samples per check family")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*define) return cmd_define_check(o, out);
    if (*dia) return cmd_diamond(o, out);
    if (*proj) return cmd_projector(o, out);
    if (*rel) return cmd_relation(o, out);
    if (*stab) return cmd_stabilize(o, out);
    if (*cutc) return cmd_cut(o, out);
    if (*ver) return cmd_verify(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kUsage;
  } catch (const ContextError& e) {
    err << "context error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidInput& e) {
    err << "rejected: " << e.what() << "\n";
    return kMathOutcome;
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    return kEngineError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kEngineError;
  }
  return kUsage;
}

}  // namespace redalg::cli
