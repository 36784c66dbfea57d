#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "demazure/rational.hpp"

namespace demazure {

/// A finite Cartan type such as B3 or E6. Node numbering follows Bourbaki:
/// A/B/C/D are chains 1..n (B_n: α_n short, C_n: α_n long, D_n: nodes n-1
/// and n both attached to n-2), G2 has a[1][2] = -1 and a[2][1] = -3, F4 is
/// 1-2=>3-4, and in the E series node 2 hangs off node 4.
struct CartanType {
  char family = 'A';  // one of A B C D E F G
  int rank = 1;

  static CartanType parse(std::string_view s);
  bool admissible() const;
  std::string str() const { return std::string(1, family) + std::to_string(rank); }
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Integral weight in the fundamental-weight basis {ω_i}; coords[i-1] is
/// ⟨·, α_i^∨⟩. Dominant iff all coordinates are ≥ 0.
struct Weight {
  IntVec coords;

  bool dominant() const {
    for (Int c : coords)
      if (c < 0) return false;
    return true;
  }
  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend Weight operator*(Int k, const Weight& a);
  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }
  std::string str() const;
};

/// Rational coweight in the fundamental-coweight basis {x_i}; coords[i-1] is
/// ⟨α_i, ·⟩. Dominant iff all coordinates are ≥ 0.
struct Coweight {
  RatVec coords;

  bool dominant() const {
    for (const Rat& c : coords)
      if (c.sign() < 0) return false;
    return true;
  }
  friend bool operator==(const Coweight&, const Coweight&) = default;
  std::string str() const;
};

/// A root carried in three coordinate systems at once: as a weight (ω basis),
/// in the simple-root basis, and its coroot in the x basis. Simple reflections
/// act on all three consistently, so coroots of non-simple roots come for free
/// from orbit generation.
struct Root {
  Weight weight;  // ω coordinates
  IntVec simple;  // simple-root coordinates
  IntVec coroot;  // coroot in fundamental-coweight coordinates

  Int height() const {
    Int h = 0;
    for (Int c : simple) h += c;
    return h;
  }
  bool positive() const {
    for (Int c : simple)
      if (c < 0) return false;
    return true;
  }
  bool negative() const {
    for (Int c : simple)
      if (c > 0) return false;
    return true;
  }
  friend bool operator==(const Root&, const Root&) = default;
};

/// Immutable root datum for a simply connected simple group: Cartan matrix
/// (convention a[i][j] = ⟨α_i, α_j^∨⟩, so row i holds the ω-coordinates of
/// α_i and column j the x-coordinates of α_j^∨), the full positive root list
/// generated by reflection closure of the simple roots, and exact pairing /
/// reflection arithmetic. Safe to share across threads; every operation is
/// a pure function.
class RootDatum {
 public:
  explicit RootDatum(CartanType type);
  static RootDatum from_string(std::string_view s) { return RootDatum(CartanType::parse(s)); }

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  /// 1-based Cartan entry ⟨α_i, α_j^∨⟩.
  Int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }
  const std::vector<IntVec>& cartan_matrix() const { return cartan_; }
  const std::vector<std::vector<Rat>>& inverse_cartan() const { return inv_cartan_; }

  /// Positive roots ordered by (height, lexicographic simple coordinates);
  /// the first rank() entries are the simple roots in node order.
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& simple_root(int i) const { return positive_[simple_index_[i - 1]]; }

  Weight zero_weight() const { return Weight{IntVec(rank(), 0)}; }
  Weight fundamental_weight(int i) const;
  Weight rho() const { return Weight{IntVec(rank(), 1)}; }
  Coweight zero_coweight() const { return Coweight{RatVec(rank(), Rat(0))}; }
  Coweight fundamental_coweight(int i) const;

  /// ⟨w, c⟩ = wᵀ A⁻¹ c for w in ω coordinates and c in x coordinates.
  Rat pair(const Weight& w, const Coweight& c) const;
  /// ⟨w, α^∨⟩ for a coroot given in x coordinates (always an integer).
  Int pair_coroot(const Weight& w, const IntVec& coroot_x) const;
  /// ⟨α, c⟩ for a root in simple coordinates: Σ αⱼ cⱼ.
  Rat pair_root(const Root& alpha, const Coweight& c) const;

  Weight reflect(int i, const Weight& w) const;
  Coweight reflect(int i, const Coweight& c) const;
  Root reflect(int i, const Root& r) const;

  /// Index into positive_roots() if r or -r is listed; sign tells which.
  struct SignedIndex {
    int index;
    int sign;
  };
  std::optional<SignedIndex> classify(const Root& r) const;

  /// The Levi subsystem Φ_η = {α : ⟨α, η⟩ = 0} of a dominant coweight:
  /// its simple node set J and the indices of its positive roots.
  struct Levi {
    std::vector<int> simples;              // 1-based node indices
    std::vector<int> positive_root_index;  // indices into positive_roots()
  };
  Levi levi_subsystem(const Coweight& eta) const;

  /// Coordinates of w in the simple-root basis (solves Aᵀ c = w).
  RatVec simple_coords(const Weight& w) const;

  /// Orthogonal ("ε") coordinates used for plot output; the embedding is the
  /// standard rational realization per family (rows of ambient_simple_roots()
  /// are the simple roots). Exact, half-integers at worst.
  RatVec ambient_coords(const Weight& w) const;
  int ambient_dim() const { return static_cast<int>(ambient_[0].size()); }
  const std::vector<RatVec>& ambient_simple_roots() const { return ambient_; }

 private:
  void check_index(int i) const;

  CartanType type_;
  std::vector<IntVec> cartan_;
  std::vector<std::vector<Rat>> inv_cartan_;
  std::vector<Root> positive_;
  std::vector<int> simple_index_;
  std::map<IntVec, int> index_by_simple_;
  std::vector<RatVec> ambient_;
};

/// Known positive-root count per admissible type (A_n: n(n+1)/2, B_n/C_n: n²,
/// D_n: n(n-1), G2: 6, F4: 24, E6/7/8: 36/63/120).
std::size_t expected_positive_root_count(const CartanType& t);

}  // namespace demazure
