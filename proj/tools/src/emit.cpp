#include "redalg/cli/emit.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "redalg/cli/expr.hpp"
#include "redalg/errors.hpp"

namespace redalg::cli {

namespace {

std::string latex_var(const std::string& name) {
  std::size_t i = 0;
  while (i < name.size() && std::isalpha(static_cast<unsigned char>(name[i]))) ++i;
  if (i == 0 || i == name.size()) return name;
  for (std::size_t k = i; k < name.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(name[k]))) return name;
  }
  return name.substr(0, i) + "_{" + name.substr(i) + "}";
}

std::string latex_poly(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = c < 0;
    const mpz_class a = abs(c);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << " ";
    for (int v = 0; v < kMaxVars; ++v) {
      const unsigned e = m.exponent(v);
      if (e == 0) continue;
      os << latex_var(v < static_cast<int>(names.size()) ? names[v] : "h" + std::to_string(v + 1));
      if (e > 1) os << "^{" << e << "}";
    }
  }
  return os.str();
}

std::string latex_letter(const std::string& name) {
  const auto br = name.find('[');
  const std::string prefix = name.substr(0, br);
  std::string index = br == std::string::npos ? "" : name.substr(br + 1, name.size() - br - 2);
  bool digits = true;
  for (char c : index) digits &= std::isdigit(static_cast<unsigned char>(c)) || c == ',';
  bool single = true;
  std::stringstream ss(index);
  std::string part;
  while (std::getline(ss, part, ',')) single &= part.size() == 1;
  if (digits && single) index.erase(std::remove(index.begin(), index.end(), ','), index.end());
  std::string base;
  if (prefix == "bE") base = "\\bar{E}";
  else if (prefix == "bF") base = "\\bar{F}";
  else if (prefix == "bH") base = "\\bar{H}";
  else if (prefix == "x") base = "\\bar{x}";
  else if (prefix == "d") base = "\\bar{\\partial}";
  else base = prefix;
  return base + "_{" + index + "}";
}

}  // namespace

json to_json(const CosetElement& z) {
  json out = json::array();
  if (z.is_zero()) return out;
  const Algebra& alg = z.algebra();
  for (const auto& [w, q] : z.terms()) {
    json bpart = json::array();
    for (std::size_t i = 0; i < w.size(); ++i) bpart.push_back(alg.letter(letter_at(w, i)).name);
    out.push_back({{"coeff", q.to_string(alg.var_names())}, {"bpart", bpart}});
  }
  return out;
}

CosetElement coset_from_json(const json& j, const std::shared_ptr<const Context>& ctx) {
  if (j.is_string()) return parse_coset(j.get<std::string>(), ctx);
  if (!j.is_array()) throw InvalidInput("a coset element is a term list or an expression string");
  const Algebra& alg = ctx->algebra();
  Element acc(ctx);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("bpart")) throw InvalidInput("term needs coeff and bpart");
    Element m = Element::scalar(ctx, RationalFn::parse(t.at("coeff").get<std::string>(), alg.var_names()));
    for (const auto& n : t.at("bpart")) {
      const std::string name = n.get<std::string>();
      const auto id = alg.find_letter(name);
      if (!id || alg.letter(*id).kind != LetterKind::B) throw InvalidInput("unknown B-generator " + name);
      m = m * Element::letter(ctx, *id);
    }
    acc += m;
  }
  return CosetElement(std::move(acc));
}

std::string latex(const RationalFn& q, const std::vector<std::string>& names) {
  if (q.den().is_one()) return latex_poly(q.num(), names);
  return "\\frac{" + latex_poly(q.num(), names) + "}{" + latex_poly(q.den(), names) + "}";
}

std::string latex(const Element& e) {
  if (e.is_zero()) return "0";
  const Algebra& alg = e.algebra();
  std::string out;
  bool first = true;
  for (const auto& [w, q] : e.terms()) {
    std::string word;
    for (std::size_t i = 0; i < w.size(); ++i) word += (i ? " " : "") + latex_letter(alg.letter(letter_at(w, i)).name);
    std::string coef;
    bool neg = false;
    if (q.is_one()) {
      coef = w.empty() ? "1" : "";
    } else if ((-q).is_one()) {
      neg = true;
      coef = w.empty() ? "1" : "";
    } else if (q.is_constant() && q.constant_value() < 0) {
      neg = true;
      coef = latex(-q, alg.var_names());
    } else {
      coef = latex(q, alg.var_names());
      if (q.den().is_one() && q.num().size() > 1) coef = "\\left(" + coef + "\\right)";
    }
    std::string t = coef + (coef.empty() || word.empty() ? "" : " ") + word;
    if (first) {
      out = (neg ? "-" : "") + t;
    } else {
      out += (neg ? " - " : " + ") + t;
    }
    first = false;
  }
  return out;
}

json relation_to_json(const Relation& rel, const std::string& context) {
  json pairs = json::array();
  for (const auto& [x, y] : rel.pairs()) pairs.push_back(json::array({to_json(x), to_json(y)}));
  return {{"context", context}, {"pairs", pairs}, {"rhs", to_json(rel.rhs())}};
}

Relation relation_from_json(const json& j, const std::shared_ptr<const Context>& ctx) {
  if (!j.is_object() || !j.contains("pairs")) throw InvalidInput("relation needs a pairs list");
  std::vector<Relation::Pair> pairs;
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) throw InvalidInput("each pair is a two-element list");
    pairs.emplace_back(coset_from_json(p[0], ctx), coset_from_json(p[1], ctx));
  }
  CosetElement rhs = j.contains("rhs") ? coset_from_json(j.at("rhs"), ctx) : CosetElement(ctx);
  return Relation(ctx, std::move(pairs), std::move(rhs));
}

}  // namespace redalg::cli
