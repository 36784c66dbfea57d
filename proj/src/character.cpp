#include "demazure/character.hpp"

#include <algorithm>
#include <stdexcept>

namespace demazure {

Int Character::dimension() const {
  Int sum = 0;
  for (const auto& [w, c] : terms_) {
    if (c < 0)
      throw std::domain_error("Character::dimension: negative coefficient present");
    sum += c;
  }
  return sum;
}

Character demazure_operator(const RootDatum& d, int i, const Character& f) {
  const Weight alpha = d.simple_root(i).weight;
  Character out;
  for (const auto& [coords, coeff] : f.terms()) {
    Weight nu{coords};
    const Int k = nu.coords[i - 1];  // ⟨ν, α_i^∨⟩
    if (k >= 0) {
      Weight term = nu;
      for (Int t = 0; t <= k; ++t) {
        out.add(term, coeff);
        term = term - alpha;
      }
    } else if (k < -1) {
      Weight term = nu + alpha;
      for (Int t = 1; t <= -k - 1; ++t) {
        out.add(term, -coeff);
        term = term + alpha;
      }
    }
    // k == -1 contributes nothing.
  }
  return out;
}

Character apply_word(const RootDatum& d, std::span<const int> word, const Character& f) {
  Character out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = demazure_operator(d, *it, out);
  return out;
}

Character demazure_character(const RootDatum& d, const Weight& lambda, const WeylElt& w) {
  if (static_cast<int>(lambda.coords.size()) != d.rank())
    throw std::invalid_argument("demazure_character: dimension mismatch");
  if (!lambda.dominant())
    throw std::invalid_argument("demazure_character: highest weight must be dominant");
  Character ch = apply_word(d, w.word(), Character::monomial(lambda));
  if (!ch.nonnegative())
    throw std::logic_error("demazure_character: negative coefficient in final character");
  return ch;
}

Character levi_demazure_character(const RootDatum& d, std::span<const int> levi_simples,
                                  const Weight& lambda, const WeylElt& u) {
  auto in_levi = [&](int i) {
    return std::find(levi_simples.begin(), levi_simples.end(), i) != levi_simples.end();
  };
  for (int j : levi_simples)
    if (lambda.coords.at(j - 1) < 0)
      throw std::invalid_argument("levi_demazure_character: weight not dominant for the Levi");
  for (int i : u.word())
    if (!in_levi(i))
      throw std::invalid_argument("levi_demazure_character: element not in the Levi Weyl group");
  Character ch = apply_word(d, u.word(), Character::monomial(lambda));
  if (!ch.nonnegative())
    throw std::logic_error("levi_demazure_character: negative coefficient in final character");
  return ch;
}

Character reflect_character(const RootDatum& d, int i, const Character& f) {
  Character out;
  for (const auto& [coords, coeff] : f.terms()) out.add(d.reflect(i, Weight{coords}), coeff);
  return out;
}

}  // namespace demazure
