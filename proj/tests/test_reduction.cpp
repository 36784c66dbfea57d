#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "demazure/reduction.hpp"

using namespace demazure;

namespace {

const RootDatum& b3() {
  static RootDatum d = RootDatum::from_string("B3");
  return d;
}

FaceLabel paper_face() {
  return FaceLabel{WeylElt::from_word(b3(), {1}), b3().fundamental_coweight(1)};
}

WeylElt paper_w() { return WeylElt::from_word(b3(), {1, 3, 2, 3, 1, 2, 3}); }

}  // namespace

TEST_CASE("reduction data for the worked B3 example") {
  const ReductionData rd = reduction_data(b3(), b3().rho(), paper_w(), paper_face());
  CHECK(rd.q == WeylElt::from_word(b3(), {3, 2, 3, 1, 2, 3}));
  CHECK(rd.levi_simples == std::vector<int>{2, 3});
  CHECK(rd.u_L == WeylElt::from_word(b3(), {3, 2, 3}));
  CHECK(rd.u_L.length() == 3);
  // λ' has coroot pairings (2, 1) against the Levi simples
  CHECK(rd.lambda_std.coords[1] == 2);
  CHECK(rd.lambda_std.coords[2] == 1);
  // w_L λ_L = qλ, and w_L is u_L conjugated back by v
  CHECK(rd.w_L == rd.v * rd.u_L * rd.v.inverse());
  CHECK(rd.w_L.apply(rd.lambda_L) == rd.q.apply(b3().rho()));
  CHECK(rd.q.apply(b3().rho()) == Weight{{1, 1, -5}});
  CHECK(bruhat_leq(rd.q, paper_w()));
}

TEST_CASE("trivial faces") {
  SUBCASE("v = e forces q = w") {
    const FaceLabel f{WeylElt::identity(b3()), b3().fundamental_coweight(1)};
    const ReductionData rd = reduction_data(b3(), b3().rho(), paper_w(), f);
    CHECK(rd.q == paper_w());
    CHECK(rd.lambda_L == rd.lambda_std);
  }
  SUBCASE("strictly dominant eta gives the vertex face") {
    const Coweight eta{{Rat(1), Rat(1), Rat(1)}};
    const WeylElt v = WeylElt::from_word(b3(), {2, 1});
    const ReductionData rd = reduction_data(b3(), b3().rho(), paper_w(), FaceLabel{v, eta});
    CHECK(rd.w_L == WeylElt::identity(b3()));
    CHECK(rd.u_L == WeylElt::identity(b3()));
    CHECK(rd.lambda_L == rd.q.apply(b3().rho()));
    const VerificationReport rep = verify_theorem(b3(), b3().rho(), paper_w(), FaceLabel{v, eta});
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].mu == rd.q.apply(b3().rho()));
    CHECK(rep.rows[0].m_w == 1);
    CHECK(rep.rows[0].m_q == 1);
    CHECK(rep.rows[0].m_L == 1);
  }
  SUBCASE("v outside W^eta is rejected") {
    const FaceLabel bad{WeylElt::from_word(b3(), {2}), b3().fundamental_coweight(1)};
    CHECK_THROWS_AS(reduction_data(b3(), b3().rho(), paper_w(), bad), std::invalid_argument);
  }
  SUBCASE("non-dominant lambda is rejected") {
    CHECK_THROWS_AS(reduction_data(b3(), Weight{{-1, 0, 0}}, paper_w(), paper_face()),
                    std::invalid_argument);
  }
}

TEST_CASE("levi multiplicities on the worked face") {
  const ReductionData rd = reduction_data(b3(), b3().rho(), paper_w(), paper_face());
  SUBCASE("the lowest weight q·lambda has multiplicity one") {
    CHECK(levi_multiplicity(b3(), rd, rd.q.apply(b3().rho())) == 1);
  }
  SUBCASE("the six ringed weights have multiplicity two") {
    for (const Weight& mu : {Weight{{2, -3, 3}}, Weight{{2, -2, 1}}, Weight{{2, -1, -1}},
                             Weight{{2, 0, -3}}, Weight{{3, -2, 1}}, Weight{{3, -1, -1}}})
      CHECK(levi_multiplicity(b3(), rd, mu) == 2);
  }
  SUBCASE("the twelve plain weights have multiplicity one") {
    for (const Weight& mu :
         {Weight{{1, -4, 5}}, Weight{{1, -3, 3}}, Weight{{1, -2, 1}}, Weight{{1, -1, -1}},
          Weight{{1, 0, -3}}, Weight{{1, 1, -5}}, Weight{{2, -4, 5}}, Weight{{2, 1, -5}},
          Weight{{3, -3, 3}}, Weight{{3, 0, -3}}, Weight{{4, -2, 1}}, Weight{{4, -1, -1}}})
      CHECK(levi_multiplicity(b3(), rd, mu) == 1);
  }
  SUBCASE("weights off the face are rejected") {
    CHECK_THROWS_AS(levi_multiplicity(b3(), rd, b3().rho()), std::invalid_argument);
  }
}

TEST_CASE("verify_theorem") {
  SUBCASE("the worked example raises no flags") {
    const VerificationReport rep = verify_theorem(b3(), b3().rho(), paper_w(), paper_face());
    CHECK(rep.rows.size() == 18);
    CHECK(rep.ok());
    CHECK(rep.q_word == std::vector<int>{3, 2, 1, 3, 2, 3});  // canonical word of q
    int twos = 0;
    for (const auto& row : rep.rows) {
      CHECK(row.m_w == row.m_q);
      CHECK(row.m_q == row.m_L);
      if (row.m_w == 2) ++twos;
    }
    CHECK(twos == 6);
  }
  SUBCASE("w = e gives the single-weight report") {
    const FaceLabel f{WeylElt::identity(b3()), b3().fundamental_coweight(2)};
    const VerificationReport rep =
        verify_theorem(b3(), b3().rho(), WeylElt::identity(b3()), f);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].mu == b3().rho());
    CHECK(rep.rows[0].m_w == 1);
    CHECK(rep.rows[0].m_q == 1);
    CHECK(rep.rows[0].m_L == 1);
    CHECK(rep.ok());
  }
  SUBCASE("exhaustive A2 sweep raises no flags") {
    const RootDatum d = RootDatum::from_string("A2");
    for (const Weight& lambda : weight_box(d, 2)) {
      DemazureCache cache(d, lambda);
      for (const WeylElt& w : all_elements(d))
        for (int i = 1; i <= 2; ++i)
          for (const WeylElt& v : min_length_reps(d, d.fundamental_coweight(i))) {
            const FaceLabel f{v, d.fundamental_coweight(i)};
            CHECK(verify_theorem(cache, w, f).ok());
          }
    }
  }
}

TEST_CASE("connecting identity") {
  SUBCASE("v = e is a tautology") {
    const FaceLabel f{WeylElt::identity(b3()), b3().fundamental_coweight(1)};
    CHECK(connecting_multiplicity_check(b3(), b3().rho(), paper_w(), f));
  }
  SUBCASE("the worked example, where s1*w = w") {
    CHECK(demazure_product(WeylElt::from_word(b3(), {1}), paper_w()) == paper_w());
    CHECK(connecting_multiplicity_check(b3(), b3().rho(), paper_w(), paper_face()));
  }
  SUBCASE("A2 sweep") {
    const RootDatum d = RootDatum::from_string("A2");
    for (const Weight& lambda : weight_box(d, 2)) {
      DemazureCache cache(d, lambda);
      for (const WeylElt& w : all_elements(d))
        for (int i = 1; i <= 2; ++i)
          for (const WeylElt& v : min_length_reps(d, d.fundamental_coweight(i)))
            CHECK(connecting_multiplicity_check(cache, w, FaceLabel{v, d.fundamental_coweight(i)}));
    }
  }
}

TEST_CASE("single-step multiplicity transport") {
  SUBCASE("the worked example with i = 1") {
    DemazureCache cache(b3(), b3().rho());
    const auto& p = cache.polytope(paper_w());
    for (const Weight& mu : p.face_lattice_points(paper_face()))
      CHECK(step_multiplicity_check(cache, paper_w(), 1, mu));
  }
  SUBCASE("no qualifying face is an error") {
    Weight interior = b3().rho();
    for (int i = 1; i <= 3; ++i) interior = interior - b3().simple_root(i).weight;
    CHECK_THROWS_AS(step_multiplicity_check(b3(), b3().rho(), paper_w(), 1, interior),
                    std::invalid_argument);
  }
}

TEST_CASE("inversion positivity (q inverse against v)") {
  SUBCASE("v = e is vacuous") {
    const FaceLabel f{WeylElt::identity(b3()), b3().fundamental_coweight(1)};
    CHECK(inversion_positivity_check(b3(), reduction_data(b3(), b3().rho(), paper_w(), f)));
  }
  SUBCASE("the worked example has six inversions, all transported positive") {
    const ReductionData rd = reduction_data(b3(), b3().rho(), paper_w(), paper_face());
    CHECK(inversion_set(rd.q.inverse()).size() == 6);
    CHECK(inversion_positivity_check(b3(), rd));
  }
  SUBCASE("A2 sweep") {
    const RootDatum d = RootDatum::from_string("A2");
    for (const WeylElt& w : all_elements(d))
      for (int i = 1; i <= 2; ++i)
        for (const WeylElt& v : min_length_reps(d, d.fundamental_coweight(i)))
          CHECK(inversion_positivity_check(
              d, reduction_data(d, d.rho(), w, FaceLabel{v, d.fundamental_coweight(i)})));
  }
}

TEST_CASE("saturation") {
  CHECK(saturation_check(b3(), b3().rho(), WeylElt::identity(b3())));
  CHECK(saturation_check(b3(), b3().rho(), paper_w()));
  const RootDatum g2 = RootDatum::from_string("G2");
  for (const WeylElt& w : all_elements(g2)) CHECK(saturation_check(g2, Weight{{2, 1}}, w));
}

TEST_CASE("descent sign condition on face labels") {
  // For s_i v < v the transported simple root pairs strictly negative with η.
  for (const char* name : {"A2", "B2", "B3"}) {
    const RootDatum d = RootDatum::from_string(name);
    for (int i = 1; i <= d.rank(); ++i) {
      const Coweight eta = d.fundamental_coweight(i);
      for (const WeylElt& v : min_length_reps(d, eta)) {
        if (v.is_identity()) continue;
        for (int s = 1; s <= d.rank(); ++s) {
          const WeylElt sv = WeylElt::from_word(d, {s}) * v;
          if (sv.length() < v.length()) {
            const Root pulled = v.inverse().apply(d.simple_root(s));
            CHECK(d.pair_root(pulled, eta).sign() < 0);
          }
        }
      }
    }
  }
}

TEST_CASE("weight box enumerates the dominant grid") {
  const RootDatum d = RootDatum::from_string("A2");
  const auto box = weight_box(d, 2);
  CHECK(box.size() == 9);
  for (const Weight& w : box) CHECK(w.dominant());
  std::set<Weight> unique(box.begin(), box.end());
  CHECK(unique.size() == 9);
}
