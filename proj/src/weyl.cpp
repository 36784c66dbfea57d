#include "demazure/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace demazure {

WeylElt::WeylElt(const RootDatum* d, IntVec canonical)
    : datum_(d), canonical_(std::move(canonical)) {
  // Greedy normalization: the smallest i with ⟨wρ, α_i^∨⟩ < 0 is a left
  // descent; strip it and repeat. Terminates at ρ itself.
  IntVec c = canonical_;
  const int n = d->rank();
  for (;;) {
    int descent = 0;
    for (int i = 1; i <= n; ++i)
      if (c[i - 1] < 0) {
        descent = i;
        break;
      }
    if (descent == 0) break;
    word_.push_back(descent);
    Weight w{std::move(c)};
    c = d->reflect(descent, w).coords;
  }
}

WeylElt WeylElt::identity(const RootDatum& d) { return WeylElt(&d, d.rho().coords); }

WeylElt WeylElt::from_word(const RootDatum& d, std::span<const int> word) {
  Weight w = d.rho();
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = d.reflect(*it, w);
  return WeylElt(&d, std::move(w.coords));
}

WeylElt WeylElt::operator*(const WeylElt& other) const {
  if (datum_ != other.datum_)
    throw std::invalid_argument("WeylElt: mixed root data");
  Weight w{other.canonical_};
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) w = datum_->reflect(*it, w);
  return WeylElt(datum_, std::move(w.coords));
}

WeylElt WeylElt::inverse() const {
  std::vector<int> rev(word_.rbegin(), word_.rend());
  return from_word(*datum_, rev);
}

Weight WeylElt::apply(const Weight& w) const {
  Weight out = w;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) out = datum_->reflect(*it, out);
  return out;
}

Coweight WeylElt::apply(const Coweight& c) const {
  Coweight out = c;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) out = datum_->reflect(*it, out);
  return out;
}

Root WeylElt::apply(const Root& r) const {
  Root out = r;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) out = datum_->reflect(*it, out);
  return out;
}

std::string WeylElt::str() const {
  if (word_.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < word_.size(); ++k) os << (k ? " " : "") << 's' << word_[k];
  return os.str();
}

std::vector<Root> inversion_set(const WeylElt& w) {
  std::vector<Root> out;
  for (const Root& alpha : w.datum().positive_roots())
    if (w.apply(alpha).negative()) out.push_back(alpha);
  return out;
}

bool bruhat_leq(const WeylElt& x, const WeylElt& w) {
  WeylElt a = x, b = w;
  const RootDatum& d = a.datum();
  while (!b.is_identity()) {
    if (a.is_identity()) return true;
    if (a.length() > b.length()) return false;
    const int i = b.word().front();  // left descent of b
    const WeylElt si = WeylElt::from_word(d, {i});
    const WeylElt sb = si * b;
    const WeylElt sa = si * a;
    if (sa.length() < a.length()) a = sa;
    b = sb;
  }
  return a.is_identity();
}

std::vector<WeylElt> lower_interval(const WeylElt& w) {
  std::set<WeylElt> seen{w};
  std::deque<WeylElt> queue{w};
  const RootDatum& d = w.datum();
  while (!queue.empty()) {
    WeylElt cur = queue.front();
    queue.pop_front();
    const auto& word = cur.word();
    for (std::size_t k = 0; k < word.size(); ++k) {
      std::vector<int> sub;
      sub.reserve(word.size() - 1);
      for (std::size_t j = 0; j < word.size(); ++j)
        if (j != k) sub.push_back(word[j]);
      WeylElt next = WeylElt::from_word(d, sub);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<WeylElt> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const WeylElt& a, const WeylElt& b) {
    return a.length() != b.length() ? a.length() < b.length() : a < b;
  });
  return out;
}

CosetDecomposition coset_decompose(const WeylElt& w, const Coweight& eta) {
  const RootDatum& d = w.datum();
  const auto levi = d.levi_subsystem(eta);  // validates dominance
  WeylElt rep = w;
  WeylElt u = WeylElt::identity(d);
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int j : levi.simples) {
      // j is a right descent of rep iff rep(α_j) < 0.
      if (rep.apply(d.simple_root(j)).negative()) {
        const WeylElt sj = WeylElt::from_word(d, {j});
        rep = rep * sj;
        u = sj * u;
        stripped = true;
        break;
      }
    }
  }
  return CosetDecomposition{rep, u};
}

bool is_min_length_rep(const WeylElt& v, const Coweight& eta) {
  const RootDatum& d = v.datum();
  const auto levi = d.levi_subsystem(eta);
  for (int j : levi.simples)
    if (v.apply(d.simple_root(j)).negative()) return false;
  return true;
}

std::vector<WeylElt> all_elements(const RootDatum& d, std::size_t max_group) {
  std::set<WeylElt> seen;
  std::deque<WeylElt> queue;
  seen.insert(WeylElt::identity(d));
  queue.push_back(WeylElt::identity(d));
  while (!queue.empty()) {
    WeylElt cur = queue.front();
    queue.pop_front();
    for (int i = 1; i <= d.rank(); ++i) {
      WeylElt next = cur * WeylElt::from_word(d, {i});
      if (seen.insert(next).second) {
        if (seen.size() > max_group)
          throw std::runtime_error("all_elements: |W| exceeds limit " +
                                   std::to_string(max_group) + " for " + d.type().str() +
                                   "; pass a larger max_group to opt in");
        queue.push_back(next);
      }
    }
  }
  std::vector<WeylElt> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const WeylElt& a, const WeylElt& b) {
    return a.length() != b.length() ? a.length() < b.length() : a < b;
  });
  return out;
}

std::vector<WeylElt> min_length_reps(const RootDatum& d, const Coweight& eta,
                                     std::size_t max_group) {
  std::vector<WeylElt> out;
  for (const WeylElt& v : all_elements(d, max_group))
    if (is_min_length_rep(v, eta)) out.push_back(v);
  return out;
}

WeylElt demazure_product(const WeylElt& v, const WeylElt& w) {
  const RootDatum& d = v.datum();
  WeylElt acc = w;
  const auto& word = v.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const WeylElt cand = WeylElt::from_word(d, {*it}) * acc;
    if (cand.length() > acc.length()) acc = cand;
  }
  return acc;
}

namespace {
void reduced_words_rec(const WeylElt& w, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out) {
  if (w.is_identity()) {
    out.push_back(prefix);
    return;
  }
  const RootDatum& d = w.datum();
  for (int i = 1; i <= d.rank(); ++i) {
    if (w.canonical()[i - 1] >= 0) continue;  // not a left descent
    prefix.push_back(i);
    reduced_words_rec(WeylElt::from_word(d, {i}) * w, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace

std::vector<std::vector<int>> all_reduced_words(const WeylElt& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  reduced_words_rec(w, prefix, out);
  return out;
}

}  // namespace demazure
