#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "redalg/smash.hpp"

namespace redalg::cli {

/// Flat `key = value` configuration, one key per line, `#` starts a comment.
///
///   version   = 1                 required
///   family    = A | C | D
///   rank      = 2                 rank of the root system (A2 is gl3)
///   module    = adjoint | weyl    weyl requires family C
///   parabolic = 1,3               simple roots kept in S, 1-based; omit for none
///   variables = a,b,c             names of h1..hn
///   cache     = path              projector cache file
///   embed_from  = other.cfg       algebra whose relations map into the Levi part
///   embed_index = 2,3             epsilon index of each source index, 1-based
struct AlgebraConfig {
  static constexpr int kVersion = 1;

  Family family = Family::A;
  int rank = 1;
  ModuleKind module = ModuleKind::Adjoint;
  std::optional<std::vector<int>> parabolic;
  std::vector<std::string> variables;
  std::string cache;
  std::string embed_from;
  std::vector<int> embed_index;
  /// Directory against which relative paths are resolved; not serialized.
  std::string base_dir;

  /// Throws ConfigError on unknown keys, bad values or a version mismatch.
  static AlgebraConfig parse(std::string_view text);
  static AlgebraConfig load(const std::string& path);
  std::string to_string() const;

  std::shared_ptr<const Algebra> build() const;
  std::string resolve(const std::string& path) const;

  friend bool operator==(const AlgebraConfig& a, const AlgebraConfig& b) {
    return a.family == b.family && a.rank == b.rank && a.module == b.module && a.parabolic == b.parabolic &&
           a.variables == b.variables && a.cache == b.cache && a.embed_from == b.embed_from &&
           a.embed_index == b.embed_index;
  }
};

}  // namespace redalg::cli
