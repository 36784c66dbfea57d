#pragma once

#include "demazure/weyl.hpp"

namespace demazure {

/// Label (v, η) of the face F(v,η) = {μ ∈ P : ⟨λ, π^η(w⁻¹*v)η⟩ = ⟨μ, vη⟩}.
/// η is a dominant coweight and v a minimum-length representative in W^η.
struct FaceLabel {
  WeylElt v;
  Coweight eta;
};

/// The Demazure weight polytope P_λ^w = conv{xλ : x ≤ w}, carried both as
/// vertex candidates and as the facet inequality family
/// ⟨λ, (w⁻¹*v)x_i⟩ ≤ ⟨μ, vx_i⟩ over fundamental coweights x_i and v ∈ W^{P_i}.
/// All thresholds are exact rationals. Immutable after build.
class DemazurePolytope {
 public:
  struct Inequality {
    WeylElt v;
    int i = 0;       // fundamental coweight index
    Coweight v_xi;   // v·x_i, cached
    Rat rhs;         // ⟨λ, (w⁻¹*v)x_i⟩
  };

  static DemazurePolytope build(const RootDatum& d, const Weight& lambda, const WeylElt& w);

  const RootDatum& datum() const { return *datum_; }
  const Weight& lambda() const { return lambda_; }
  const WeylElt& weyl_elt() const { return w_; }
  /// {xλ : x ≤ w}, deduplicated, in lexicographic order.
  const std::vector<Weight>& vertex_candidates() const { return vertices_; }
  const std::vector<Inequality>& inequalities() const { return inequalities_; }

  bool contains(const Weight& mu) const;

  /// The defining value ⟨λ, π^η(w⁻¹*v)η⟩ of the face.
  Rat face_value(const FaceLabel& f) const;
  /// Exact face membership; throws std::invalid_argument if mu ∉ P or if
  /// f.v is not a minimum-length representative for f.eta.
  bool on_face(const Weight& mu, const FaceLabel& f) const;

  /// All labels (v, η) over the given η list (defaults to the fundamental
  /// coweights) whose face contains mu.
  std::vector<FaceLabel> faces_containing(const Weight& mu) const;
  std::vector<FaceLabel> faces_containing(const Weight& mu,
                                          std::span<const Coweight> etas) const;

  /// All μ ∈ λ + Q with contains(μ): box scan in simple-root coordinates
  /// bounded by the vertex candidates, filtered by the inequalities.
  std::vector<Weight> lattice_points() const;
  /// The sublist of lattice points lying on the face.
  std::vector<Weight> face_lattice_points(const FaceLabel& f) const;

 private:
  const RootDatum* datum_ = nullptr;
  Weight lambda_;
  WeylElt w_;
  std::vector<Weight> vertices_;
  std::vector<Inequality> inequalities_;

  DemazurePolytope() = default;
};

}  // namespace demazure
