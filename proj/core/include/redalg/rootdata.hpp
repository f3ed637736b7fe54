#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace redalg {

/// A vector of h* in epsilon coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t dim) : c_(dim) {}
  explicit Weight(std::vector<mpq_class> coords) : c_(std::move(coords)) {}
  static Weight from_ints(const std::vector<long>& coords);

  std::size_t dim() const { return c_.size(); }
  const mpq_class& operator[](std::size_t i) const { return c_[i]; }
  mpq_class& operator[](std::size_t i) { return c_[i]; }
  const std::vector<mpq_class>& coords() const { return c_; }
  bool is_zero() const;
  bool is_integral() const;
  /// Integer coordinates; throws if some coordinate is not an integer.
  std::vector<long> to_ints() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;
  Weight scaled(const mpq_class& s) const;
  friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }
  /// Lexicographic, for use as a map key only.
  friend bool operator<(const Weight& a, const Weight& b) { return a.c_ < b.c_; }

  std::string to_string() const;

 private:
  std::vector<mpq_class> c_;
};

enum class Family { A, C, D, Product };

enum class Parity { Even, Odd };

struct Root {
  Weight weight;
  std::vector<long> simple_coords;  // coefficients on Pi
  Parity parity = Parity::Even;
  int height() const;
};

/// Root data of gl_n (type A), sp_2n (C), so_2n (D) and direct sums thereof,
/// realised in epsilon coordinates. Immutable.
class RootSystem {
 public:
  /// A with rank r means gl_{r+1}; C and D with rank n mean sp_2n and so_2n.
  static RootSystem build(Family family, int rank);
  /// Concatenates epsilon coordinates of the summands.
  static RootSystem direct_sum(const std::vector<RootSystem>& parts);

  struct Component {
    Family family;
    int rank;
    int offset;  // first epsilon coordinate
    int dim;     // number of epsilon coordinates
  };

  Family family() const { return family_; }
  int rank() const { return static_cast<int>(simple_.size()); }
  int dim() const { return dim_; }
  const std::vector<Component>& components() const { return components_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  /// All roots: the positive ones followed by their negatives.
  std::vector<Weight> roots() const;
  const std::vector<Weight>& simple_roots() const { return simple_; }
  /// Symmetric bilinear form in epsilon coordinates (the identity).
  const std::vector<std::vector<mpq_class>>& form() const { return form_; }
  mpq_class pairing(const Weight& a, const Weight& b) const;
  std::string name() const;

  /// Coefficients on Pi, if the weight lies in the Q-span of Pi.
  std::optional<std::vector<mpq_class>> simple_coords(const Weight& w) const;
  /// Integer simple coordinates when w lies in the root lattice.
  std::optional<std::vector<long>> lattice_coords(const Weight& w) const;
  Weight from_simple_coords(const std::vector<long>& c) const;
  /// Index into positive_roots(), or -1.
  int positive_root_index(const Weight& w) const;
  bool is_root(const Weight& w) const;
  /// lambda <= mu iff mu - lambda is in Q_+ (restricted to simple roots in
  /// mask when given).
  bool leq(const Weight& lambda, const Weight& mu) const;
  bool in_qplus(const Weight& w, const std::vector<bool>* mask = nullptr) const;

  /// All lambda in Z_{>=0} Pi with lambda <= bound, by height then
  /// lexicographically (larger leading coefficients first). With a mask only
  /// simple roots flagged true are used.
  std::vector<Weight> enumerate_qplus(const Weight& bound, const std::vector<bool>* mask = nullptr) const;

 private:
  void finish();

  Family family_ = Family::A;
  int dim_ = 0;
  std::vector<Component> components_;
  std::vector<Root> positive_;
  std::vector<Weight> simple_;
  std::vector<std::vector<mpq_class>> form_;
};

/// Partition of the roots for a subset S of the simple roots.
struct ParabolicData {
  std::vector<int> S;           // indices into Pi, sorted
  std::vector<bool> in_S;       // mask over Pi
  std::vector<Weight> delta0;   // roots in Z S (both signs)
  std::vector<Weight> delta_plus_S;
  std::vector<Weight> delta_minus_S;
  /// For each positive root: true if it lies in Z S (a root of the Levi).
  std::vector<bool> positive_in_levi;
};

/// S given as 0-based indices into Pi. Throws ConfigError if not a subset.
ParabolicData parabolic(const RootSystem& rs, const std::vector<int>& S);

Family parse_family(const std::string& s);
std::string family_name(Family f);

}  // namespace redalg
