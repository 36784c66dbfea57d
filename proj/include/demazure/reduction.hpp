#pragma once

#include "demazure/character.hpp"
#include "demazure/polytope.hpp"

namespace demazure {

/// Everything derived from an instance (λ, w, F(v,η)) of the reduction rule:
/// the intermediate element q with w⁻¹*v = q⁻¹v and q ≤ w, the conjugated
/// Levi data (w_L, λ_L) with w_Lλ_L = qλ, and the standardized pair
/// (u_L, λ') = (v⁻¹w_Lv, v⁻¹λ_L) living in the standard Levi W_J, which is
/// what the character computation actually consumes.
struct ReductionData {
  Weight lambda;
  WeylElt w, v;
  Coweight eta;

  WeylElt q;                      // v·(w⁻¹*v)⁻¹
  WeylElt w_L;                    // v·π_η(w⁻¹*v)⁻¹·v⁻¹
  Weight lambda_L;                // v·π^η(w⁻¹*v)⁻¹·λ
  std::vector<int> levi_simples;  // J = simple nodes of Φ_η
  WeylElt u_L;                    // π_η(w⁻¹*v)⁻¹, an element of W_J
  Weight lambda_std;              // λ' = π^η(w⁻¹*v)⁻¹·λ, J-dominant
};

/// Computes ReductionData and checks its structural identities
/// (q ≤ w, w_Lλ_L = qλ, λ' J-dominant, u_L ∈ W_J). Throws
/// std::invalid_argument if λ is not dominant or f.v ∉ W^η.
ReductionData reduction_data(const RootDatum& d, const Weight& lambda, const WeylElt& w,
                             const FaceLabel& f);

/// dim V_{λ_L}^{w_L}(μ), evaluated in the standard Levi as the multiplicity
/// of v⁻¹μ in the W_J Demazure character of (λ', u_L). Throws if μ is not on
/// the face.
Int levi_multiplicity(const RootDatum& d, const ReductionData& rd, const Weight& mu);

/// Per-(λ, ·) memo for characters, polytopes and lattice point sets, keyed by
/// the canonical form of the Weyl element. Not synchronized: use one instance
/// per thread.
class DemazureCache {
 public:
  DemazureCache(const RootDatum& d, Weight lambda)
      : datum_(&d), lambda_(std::move(lambda)) {}

  const RootDatum& datum() const { return *datum_; }
  const Weight& lambda() const { return lambda_; }
  const Character& character(const WeylElt& w);
  const DemazurePolytope& polytope(const WeylElt& w);
  const std::vector<Weight>& lattice_points(const WeylElt& w);

 private:
  const RootDatum* datum_;
  Weight lambda_;
  std::map<IntVec, Character> characters_;
  std::map<IntVec, DemazurePolytope> polytopes_;
  std::map<IntVec, std::vector<Weight>> lattices_;
};

struct VerificationRow {
  Weight mu;
  Int m_w = 0;  // multiplicity in ch(V_λ^w)
  Int m_q = 0;  // multiplicity in ch(V_λ^q)
  Int m_L = 0;  // Levi multiplicity dim V_{λ_L}^{w_L}(μ)
};

/// Result of checking both equalities of the reduction rule on every lattice
/// weight of a face. part1_flags collects rows with m_L ≠ m_q, part2_flags
/// rows with m_q ≠ m_w; the rule predicts both stay empty.
struct VerificationReport {
  CartanType type;
  Weight lambda;
  std::vector<int> w_word, v_word, q_word;
  Coweight eta;
  std::vector<VerificationRow> rows;
  std::vector<std::size_t> part1_flags, part2_flags;
  double seconds = 0;

  bool ok() const { return part1_flags.empty() && part2_flags.empty(); }
  std::vector<std::size_t> flags() const;
};

VerificationReport verify_theorem(const RootDatum& d, const Weight& lambda, const WeylElt& w,
                                  const FaceLabel& f);
VerificationReport verify_theorem(DemazureCache& cache, const WeylElt& w, const FaceLabel& f);

/// The connecting identity: for every lattice μ on F(v,η) of P_λ^w, the
/// multiplicity of μ in ch(V_λ^w) equals that of v⁻¹μ in ch(V_λ^{v⁻¹*w}),
/// and v⁻¹μ lies on F(e,η) of P_λ^{v⁻¹*w}.
bool connecting_multiplicity_check(const RootDatum& d, const Weight& lambda, const WeylElt& w,
                                   const FaceLabel& f);
bool connecting_multiplicity_check(DemazureCache& cache, const WeylElt& w, const FaceLabel& f);

/// One-step variant: if μ lies on some face F(v,η) with s_iv < v, the
/// multiplicity of μ in ch(V_λ^w) equals that of s_iμ in ch(V_λ^{s_i*w}).
/// Throws std::invalid_argument when no such face exists over the fundamental
/// coweights.
bool step_multiplicity_check(const RootDatum& d, const Weight& lambda, const WeylElt& w, int i,
                             const Weight& mu);
bool step_multiplicity_check(DemazureCache& cache, const WeylElt& w, int i, const Weight& mu);

/// Every β in the inversion set of q⁻¹ has v⁻¹β positive.
bool inversion_positivity_check(const RootDatum& d, const ReductionData& rd);

/// Support of ch(V_λ^w) equals the lattice points of P_λ^w.
bool saturation_check(const RootDatum& d, const Weight& lambda, const WeylElt& w);
bool saturation_check(DemazureCache& cache, const WeylElt& w);

/// All dominant weights with coordinates in {0,...,max_coord}.
std::vector<Weight> weight_box(const RootDatum& d, Int max_coord);

}  // namespace demazure
