#pragma once

#include <span>
#include <vector>

#include "demazure/root_datum.hpp"

namespace demazure {

/// A Weyl group element in canonical form: the image of ρ (the all-ones
/// dominant weight) under the element, plus the deterministic reduced word
/// obtained by repeatedly taking the smallest left descent. ρ is regular, so
/// the canonical vector determines the element; equality and ordering compare
/// it directly. Immutable and freely shareable.
class WeylElt {
 public:
  /// Empty placeholder; any real element comes from identity/from_word.
  WeylElt() = default;

  static WeylElt identity(const RootDatum& d);
  /// Builds s_{i1}···s_{ik}; the word need not be reduced.
  static WeylElt from_word(const RootDatum& d, std::span<const int> word);
  static WeylElt from_word(const RootDatum& d, std::initializer_list<int> word) {
    return from_word(d, std::span<const int>(word.begin(), word.size()));
  }

  const RootDatum& datum() const { return *datum_; }
  const IntVec& canonical() const { return canonical_; }
  /// Reduced word, smallest descent first; w = s_{word[0]}···s_{word.back()}.
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  WeylElt operator*(const WeylElt& other) const;
  WeylElt inverse() const;
  /// Left action: (this)(x), word applied right to left.
  Weight apply(const Weight& w) const;
  Coweight apply(const Coweight& c) const;
  Root apply(const Root& r) const;

  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.canonical_ == b.canonical_; }
  friend bool operator<(const WeylElt& a, const WeylElt& b) { return a.canonical_ < b.canonical_; }
  std::string str() const;  // "s1 s3 s2", "e" for the identity

 private:
  WeylElt(const RootDatum* d, IntVec canonical);

  const RootDatum* datum_ = nullptr;
  IntVec canonical_;
  std::vector<int> word_;
};

/// {α ∈ Φ⁺ : wα ∈ −Φ⁺}; its size is ℓ(w).
std::vector<Root> inversion_set(const WeylElt& w);

/// Bruhat order by the descent recursion: with s w < w,
/// x ≤ w ⟺ (sx < x ? sx ≤ sw : x ≤ sw). Linear in ℓ(w).
bool bruhat_leq(const WeylElt& x, const WeylElt& w);

/// The full lower interval [e, w], ordered by (length, canonical vector).
/// Enumerated by closing {w} under single letter deletions in reduced words.
std::vector<WeylElt> lower_interval(const WeylElt& w);

/// w = min_rep · levi_part with ℓ adding, levi_part ∈ W_η.
struct CosetDecomposition {
  WeylElt min_rep;    // π^η(w)
  WeylElt levi_part;  // π_η(w)
};
CosetDecomposition coset_decompose(const WeylElt& w, const Coweight& eta);

/// Whether v is the minimum-length representative of vW_η, i.e. v(Φ_η⁺) ⊂ Φ⁺.
bool is_min_length_rep(const WeylElt& v, const Coweight& eta);

/// Every element of W, ordered by (length, canonical vector). Throws if the
/// group exceeds max_group; raise the bound explicitly for E types.
std::vector<WeylElt> all_elements(const RootDatum& d, std::size_t max_group = 1152);

/// W^η: one minimum-length representative per coset of W_η.
std::vector<WeylElt> min_length_reps(const RootDatum& d, const Coweight& eta,
                                     std::size_t max_group = 1152);

/// Demazure monoid product, by the recursion v*w = v'*(s_i*w) for v = v's_i
/// with base case s_i*w = s_iw when that is longer, else w.
WeylElt demazure_product(const WeylElt& v, const WeylElt& w);

/// All reduced words of w (for word-independence checks).
std::vector<std::vector<int>> all_reduced_words(const WeylElt& w);

}  // namespace demazure
