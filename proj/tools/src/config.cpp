#include "redalg/cli/config.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "redalg/errors.hpp"

namespace redalg::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const int x = std::stoi(v, &used);
    if (used == v.size()) return x;
  } catch (const std::exception&) {
  }
  throw ConfigError("key '" + key + "' expects an integer, got '" + v + "'");
}

std::vector<int> to_ints(const std::string& key, const std::string& v) {
  std::vector<int> out;
  for (const auto& s : split(v)) out.push_back(to_int(key, s));
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

AlgebraConfig AlgebraConfig::parse(std::string_view text) {
  std::map<std::string, std::string> kv;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (kv.count(key)) throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    kv[key] = trim(line.substr(eq + 1));
  }
  auto take = [&](const std::string& key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };

  const auto version = take("version");
  if (!version) throw ConfigError("missing key 'version'");
  if (to_int("version", *version) != kVersion) throw ConfigError("unsupported config version " + *version);

  AlgebraConfig c;
  const auto family = take("family");
  if (!family) throw ConfigError("missing key 'family'");
  if (*family == "A") {
    c.family = Family::A;
  } else if (*family == "C") {
    c.family = Family::C;
  } else if (*family == "D") {
    c.family = Family::D;
  } else {
    throw ConfigError("family must be A, C or D, got '" + *family + "'");
  }
  const auto rank = take("rank");
  if (!rank) throw ConfigError("missing key 'rank'");
  c.rank = to_int("rank", *rank);
  if (c.rank < 1 || (c.family == Family::D && c.rank < 4)) throw ConfigError("rank out of range");

  const auto module = take("module");
  if (!module) throw ConfigError("missing key 'module'");
  if (*module == "adjoint") {
    c.module = ModuleKind::Adjoint;
  } else if (*module == "weyl") {
    c.module = ModuleKind::Weyl;
  } else {
    throw ConfigError("module must be adjoint or weyl, got '" + *module + "'");
  }
  if (c.module == ModuleKind::Weyl && c.family != Family::C) throw ConfigError("module = weyl requires family C");

  if (const auto s = take("parabolic")) {
    c.parabolic = to_ints("parabolic", *s);
    for (int i : *c.parabolic) {
      if (i < 1 || i > c.rank) throw ConfigError("parabolic index " + std::to_string(i) + " outside 1.." + std::to_string(c.rank));
    }
  }
  if (const auto v = take("variables")) c.variables = split(*v);
  if (const auto v = take("cache")) c.cache = *v;
  if (const auto v = take("embed_from")) c.embed_from = *v;
  if (const auto v = take("embed_index")) c.embed_index = to_ints("embed_index", *v);
  if (c.embed_from.empty() != c.embed_index.empty()) throw ConfigError("embed_from and embed_index go together");
  if (!kv.empty()) throw ConfigError("unknown key '" + kv.begin()->first + "'");
  return c;
}

AlgebraConfig AlgebraConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  AlgebraConfig c = parse(ss.str());
  c.base_dir = std::filesystem::path(path).parent_path().string();
  return c;
}

std::string AlgebraConfig::to_string() const {
  std::ostringstream os;
  os << "version = " << kVersion << "\n";
  os << "family = " << (family == Family::A ? "A" : family == Family::C ? "C" : "D") << "\n";
  os << "rank = " << rank << "\n";
  os << "module = " << (module == ModuleKind::Adjoint ? "adjoint" : "weyl") << "\n";
  if (parabolic) os << "parabolic = " << join(*parabolic) << "\n";
  if (!variables.empty()) {
    os << "variables = ";
    for (std::size_t i = 0; i < variables.size(); ++i) os << (i ? "," : "") << variables[i];
    os << "\n";
  }
  if (!cache.empty()) os << "cache = " << cache << "\n";
  if (!embed_from.empty()) os << "embed_from = " << embed_from << "\nembed_index = " << join(embed_index) << "\n";
  return os.str();
}

std::shared_ptr<const Algebra> AlgebraConfig::build() const {
  std::optional<std::vector<int>> S;
  if (parabolic) {
    S.emplace();
    for (int i : *parabolic) S->push_back(i - 1);
  }
  return Algebra::create(RootSystem::build(family, rank), module, std::move(S), variables);
}

std::string AlgebraConfig::resolve(const std::string& path) const {
  if (path.empty() || base_dir.empty() || std::filesystem::path(path).is_absolute()) return path;
  return (std::filesystem::path(base_dir) / path).string();
}

}  // namespace redalg::cli
