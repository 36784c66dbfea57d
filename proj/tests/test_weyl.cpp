#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "demazure/weyl.hpp"
#include "support/oracles.hpp"

using namespace demazure;

TEST_CASE("group basics") {
  const RootDatum d = RootDatum::from_string("B3");
  const WeylElt e = WeylElt::identity(d);
  CHECK(e.length() == 0);
  CHECK(e.str() == "e");
  CHECK(WeylElt::from_word(d, {2, 2}) == e);  // s_i² = e
  CHECK_THROWS_AS(WeylElt::from_word(d, {4}), std::out_of_range);
  CHECK_THROWS_AS(WeylElt::from_word(d, {0}), std::out_of_range);

  const WeylElt w = WeylElt::from_word(d, {1, 3, 2, 3, 1, 2, 3});
  CHECK(w.length() == 7);  // the word is reduced
  CHECK(w * w.inverse() == e);
  CHECK(w.inverse() * w == e);

  // from_word of a non-reduced word gives the correct element
  CHECK(WeylElt::from_word(d, {1, 1, 3, 2, 3, 1, 2, 3}) ==
        WeylElt::from_word(d, {3, 2, 3, 1, 2, 3}));

  // exchange consistency: every reduced word rebuilds the same element
  for (const auto& word : all_reduced_words(w)) {
    CHECK(static_cast<int>(word.size()) == w.length());
    CHECK(WeylElt::from_word(d, word) == w);
  }
}

TEST_CASE("length and inversion sets") {
  const RootDatum a2 = RootDatum::from_string("A2");
  CHECK(WeylElt::from_word(a2, {1, 2}).length() == 2);
  CHECK(inversion_set(WeylElt::identity(a2)).empty());
  const auto inv_s1 = inversion_set(WeylElt::from_word(a2, {1}));
  REQUIRE(inv_s1.size() == 1);
  CHECK(inv_s1[0] == a2.simple_root(1));
  CHECK(inversion_set(WeylElt::from_word(a2, {1, 2, 1})).size() == 3);  // w0

  const RootDatum b3 = RootDatum::from_string("B3");
  const auto elements = all_elements(b3);
  CHECK(elements.size() == 48);
  CHECK(elements.back().length() == 9);  // longest element has |Φ⁺| inversions
  for (const WeylElt& w : elements)
    CHECK(inversion_set(w).size() == static_cast<std::size_t>(w.length()));
}

TEST_CASE("bruhat order") {
  const RootDatum a2 = RootDatum::from_string("A2");
  const auto a2_elements = all_elements(a2);
  CHECK(a2_elements.size() == 6);
  for (const WeylElt& w : a2_elements) CHECK(bruhat_leq(WeylElt::identity(a2), w));
  CHECK_FALSE(bruhat_leq(WeylElt::from_word(a2, {1}), WeylElt::from_word(a2, {2})));

  // agrees with the subword characterization on all pairs in A2 and B2
  for (const char* name : {"A2", "B2"}) {
    const RootDatum d = RootDatum::from_string(name);
    for (const WeylElt& x : all_elements(d))
      for (const WeylElt& w : all_elements(d))
        CHECK(bruhat_leq(x, w) == oracles::subword_bruhat_leq(x, w));
  }

  // random pairs in B3
  const RootDatum b3 = RootDatum::from_string("B3");
  const auto elements = all_elements(b3);
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const WeylElt& x = elements[pick(rng)];
    const WeylElt& w = elements[pick(rng)];
    CHECK(bruhat_leq(x, w) == oracles::subword_bruhat_leq(x, w));
    if (bruhat_leq(x, w)) CHECK(x.length() <= w.length());
  }

  // the paper's B3 pair: q ≤ w
  CHECK(bruhat_leq(WeylElt::from_word(b3, {3, 2, 3, 1, 2, 3}),
                   WeylElt::from_word(b3, {1, 3, 2, 3, 1, 2, 3})));
}

TEST_CASE("lower intervals") {
  const RootDatum a2 = RootDatum::from_string("A2");
  CHECK(lower_interval(WeylElt::identity(a2)).size() == 1);
  CHECK(lower_interval(WeylElt::from_word(a2, {1})).size() == 2);
  CHECK(lower_interval(WeylElt::from_word(a2, {1, 2, 1})).size() == 6);  // all of W

  // matches the filter definition {x : x ≤ w} in B2
  const RootDatum b2 = RootDatum::from_string("B2");
  for (const WeylElt& w : all_elements(b2)) {
    std::set<WeylElt> expected;
    for (const WeylElt& x : all_elements(b2))
      if (bruhat_leq(x, w)) expected.insert(x);
    const auto interval = lower_interval(w);
    CHECK(interval.size() == expected.size());
    for (const WeylElt& x : interval) CHECK(expected.count(x) == 1);
  }

  // diamond-lemma consequence: s·[e,w] = [e,w] when sw < w
  const RootDatum b3 = RootDatum::from_string("B3");
  const WeylElt w = WeylElt::from_word(b3, {1, 3, 2, 3, 1, 2, 3});
  const int s = w.word().front();
  const auto interval = lower_interval(w);
  std::set<WeylElt> as_set(interval.begin(), interval.end());
  for (const WeylElt& x : interval)
    CHECK(as_set.count(WeylElt::from_word(b3, {s}) * x) == 1);
}

TEST_CASE("coset decomposition") {
  const RootDatum b3 = RootDatum::from_string("B3");
  const Coweight x1 = b3.fundamental_coweight(1);

  SUBCASE("w inside the Levi gives trivial min_rep") {
    const WeylElt w = WeylElt::from_word(b3, {2, 3, 2});
    const auto cd = coset_decompose(w, x1);
    CHECK(cd.min_rep == WeylElt::identity(b3));
    CHECK(cd.levi_part == w);
  }
  SUBCASE("strictly dominant eta gives trivial Levi part") {
    Coweight eta{{Rat(1), Rat(1), Rat(1)}};
    const WeylElt w = WeylElt::from_word(b3, {1, 3, 2, 3});
    const auto cd = coset_decompose(w, eta);
    CHECK(cd.min_rep == w);
    CHECK(cd.levi_part == WeylElt::identity(b3));
  }
  SUBCASE("non-dominant eta is rejected") {
    Coweight eta{{Rat(-1), Rat(0), Rat(0)}};
    CHECK_THROWS_AS(coset_decompose(WeylElt::identity(b3), eta), std::invalid_argument);
  }
  SUBCASE("invariants over the whole group") {
    const auto levi = b3.levi_subsystem(x1);
    for (const WeylElt& w : all_elements(b3)) {
      const auto cd = coset_decompose(w, x1);
      CHECK(cd.min_rep * cd.levi_part == w);
      CHECK(cd.min_rep.length() + cd.levi_part.length() == w.length());
      for (int i : cd.levi_part.word())
        CHECK((i == 2 || i == 3));
      // min_rep maps Φ_η⁺ into Φ⁺
      for (int idx : levi.positive_root_index)
        CHECK(cd.min_rep.apply(b3.positive_roots()[idx]).positive());
    }
  }
  SUBCASE("the paper's example recombines") {
    const WeylElt w = WeylElt::from_word(b3, {1, 3, 2, 3, 1, 2, 3});
    const WeylElt v = WeylElt::from_word(b3, {1});
    const WeylElt m = demazure_product(w.inverse(), v);  // = q⁻¹v
    const auto cd = coset_decompose(m, x1);
    CHECK(cd.min_rep * cd.levi_part == m);
    const WeylElt q = WeylElt::from_word(b3, {3, 2, 3, 1, 2, 3});
    CHECK(m == q.inverse() * v);
  }
}

TEST_CASE("minimum-length representatives") {
  const RootDatum b3 = RootDatum::from_string("B3");
  SUBCASE("strictly dominant eta gives all of W") {
    Coweight eta{{Rat(1), Rat(1), Rat(1)}};
    CHECK(min_length_reps(b3, eta).size() == 48);
  }
  SUBCASE("eta = 0 gives only the identity") {
    CHECK(min_length_reps(b3, b3.zero_coweight()).size() == 1);
  }
  SUBCASE("eta = x1 gives |W|/|W_B2| = 6 representatives") {
    const auto reps = min_length_reps(b3, b3.fundamental_coweight(1));
    CHECK(reps.size() == 6);
    const auto levi = b3.levi_subsystem(b3.fundamental_coweight(1));
    for (const WeylElt& v : reps)
      for (int idx : levi.positive_root_index)
        CHECK(v.apply(b3.positive_roots()[idx]).positive());
  }
  SUBCASE("E-type enumeration requires opting in") {
    const RootDatum e6 = RootDatum::from_string("E6");
    CHECK_THROWS_AS(all_elements(e6), std::runtime_error);
  }
}

TEST_CASE("demazure product") {
  const RootDatum b3 = RootDatum::from_string("B3");
  const WeylElt s1 = WeylElt::from_word(b3, {1});
  CHECK(demazure_product(s1, s1) == s1);
  // s_i * w ∈ {s_i w, w}
  for (const WeylElt& w : all_elements(b3))
    for (int i = 1; i <= 3; ++i) {
      const WeylElt si = WeylElt::from_word(b3, {i});
      const WeylElt prod = demazure_product(si, w);
      CHECK((prod == si * w || prod == w));
      CHECK(bruhat_leq(w, prod));
    }

  // the paper's example: w⁻¹ * s_1 = q⁻¹ s_1... realized as w⁻¹*v = q⁻¹v
  const WeylElt w = WeylElt::from_word(b3, {1, 3, 2, 3, 1, 2, 3});
  const WeylElt q = WeylElt::from_word(b3, {3, 2, 3, 1, 2, 3});
  CHECK(demazure_product(w.inverse(), s1) == q.inverse() * s1);

  // brute-force cross-check of v*w = max{xq : x ≤ v, q ≤ w} in A2
  const RootDatum a2 = RootDatum::from_string("A2");
  for (const WeylElt& v : all_elements(a2))
    for (const WeylElt& u : all_elements(a2)) {
      const WeylElt prod = demazure_product(v, u);
      CHECK(prod == oracles::brute_demazure_product(v, u));
      CHECK(bruhat_leq(v, prod));
      CHECK(bruhat_leq(u, prod));
      CHECK(demazure_product(WeylElt::identity(a2), u) == u);
      CHECK(demazure_product(v, WeylElt::identity(a2)) == v);
    }

  // associativity on a random sample in B2
  const RootDatum b2 = RootDatum::from_string("B2");
  const auto elts = all_elements(b2);
  for (const WeylElt& a : elts)
    for (const WeylElt& b : elts)
      for (const WeylElt& c : {elts[1], elts[3], elts.back()})
        CHECK(demazure_product(demazure_product(a, b), c) ==
              demazure_product(a, demazure_product(b, c)));
}

TEST_CASE("min reps send Levi positives to positives") {
  const RootDatum b3 = RootDatum::from_string("B3");
  for (int i = 1; i <= 3; ++i) {
    const Coweight eta = b3.fundamental_coweight(i);
    const auto levi = b3.levi_subsystem(eta);
    for (const WeylElt& v : min_length_reps(b3, eta))
      for (int idx : levi.positive_root_index)
        CHECK(v.apply(b3.positive_roots()[idx]).positive());
  }
}
