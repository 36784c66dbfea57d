#pragma once

#include <map>
#include <span>

#include "demazure/weyl.hpp"

namespace demazure {

/// Element of R(T) = Z[X*(T)]: a finitely supported map from weights to
/// integer coefficients, keyed by ω coordinates. Terms iterate in
/// lexicographic order and zero coefficients are never stored. Negative
/// coefficients are allowed (the Demazure operator produces signed strings on
/// virtual characters); demazure_character checks final positivity itself.
class Character {
 public:
  Character() = default;
  static Character monomial(const Weight& w, Int coeff = 1) {
    Character c;
    c.add(w, coeff);
    return c;
  }

  void add(const Weight& w, Int coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(w.coords, coeff);
    if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
  }

  Int multiplicity(const Weight& w) const {
    auto it = terms_.find(w.coords);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Sum of coefficients; throws std::domain_error if any is negative
  /// (catches misuse on intermediate virtual characters).
  Int dimension() const;

  bool nonnegative() const {
    for (const auto& [w, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  std::size_t support_size() const { return terms_.size(); }
  const std::map<IntVec, Int>& terms() const { return terms_; }
  friend bool operator==(const Character&, const Character&) = default;

 private:
  std::map<IntVec, Int> terms_;
};

/// The divided-difference operator D_i = (1 - e^{-α_i} s_i)/(1 - e^{-α_i}).
/// On a monomial e^ν with k = ⟨ν, α_i^∨⟩ it yields the string
/// e^ν + e^{ν-α_i} + ... + e^{s_iν} for k ≥ 0, zero for k = -1, and
/// -(e^{ν+α_i} + ... + e^{s_iν-α_i}) for k < -1; extended linearly.
Character demazure_operator(const RootDatum& d, int i, const Character& f);

/// ch(V_λ^w) = D_{i1}∘···∘D_{ik}(e^λ) along the canonical reduced word of w.
/// λ must be dominant; the result is checked to be positivity-clean.
Character demazure_character(const RootDatum& d, const Weight& lambda, const WeylElt& w);

/// Same composition along an explicit word (applied verbatim, rightmost
/// operator first). Intended for reduced words of a fixed element; word
/// independence is a theorem, not an assumption, and is tested as such.
Character apply_word(const RootDatum& d, std::span<const int> word, const Character& f);

/// Demazure character for the standard Levi with simple node set J, computed
/// in ambient coordinates by applying only D_j, j ∈ J. lambda must be
/// J-dominant and u must lie in W_J.
Character levi_demazure_character(const RootDatum& d, std::span<const int> levi_simples,
                                  const Weight& lambda, const WeylElt& u);

/// s_i acting on characters by permuting exponents.
Character reflect_character(const RootDatum& d, int i, const Character& f);

}  // namespace demazure
