#include <gtest/gtest.h>

#include "hurwitz/canonical.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/oracle.hpp"
#include "test_support.hpp"

using namespace hurwitz;
using namespace hurwitz::testing;

namespace {

void expect_replays(const Factorization &in, const CanonicalResult &r) {
  EXPECT_EQ(apply_certificate(in, r.certificate), r.canonical);
  EXPECT_EQ(signature(r.canonical), signature(in));
}

} // namespace

TEST(HurwitzEquivalent, WorkedPair) { EXPECT_TRUE(hurwitz_equivalent(worked_f1(), worked_f2())); }

TEST(HurwitzEquivalent, Reflexive) { EXPECT_TRUE(hurwitz_equivalent(worked_f1(), worked_f1())); }

TEST(HurwitzEquivalent, DifferentVertexSets) {
  Factorization a = fac(3, {T(1, 2), T(1, 2)}), b = fac(3, {T(1, 3), T(1, 3)});
  // Oracle: both orbits are singletons and distinct.
  EXPECT_EQ(naive_orbit(a).size(), 1u);
  EXPECT_EQ(naive_orbit(b).size(), 1u);
  EXPECT_FALSE(hurwitz_equivalent(a, b));
}

TEST(HurwitzEquivalent, PreconditionErrors) {
  EXPECT_THROW(hurwitz_equivalent(fac(3, {T(1, 2), T(2, 3)}), fac(3, {T(1, 2), T(1, 2)})),
               PreconditionError);
  EXPECT_THROW(hurwitz_equivalent(fac(3, {T(1, 2), T(1, 2)}), fac(3, {T(1, 2), T(1, 2), E})),
               PreconditionError);
  EXPECT_THROW(hurwitz_equivalent(fac(3, {T(1, 2), T(1, 2)}), fac(4, {T(1, 2), T(1, 2)})),
               PreconditionError);
}

TEST(PullEdgeToFront, ConnectedTriangle) {
  Factorization f = fac(3, {T(1, 2), T(2, 3), T(1, 3), T(2, 3)});
  CanonicalResult r = pull_edge_to_front(f, 1, 3);
  EXPECT_EQ(r.canonical[0], T(1, 3));
  expect_replays(f, r);
}

TEST(PullEdgeToFront, AlreadyInFront) {
  Factorization f = fac(3, {T(1, 2), T(1, 2)});
  CanonicalResult r = pull_edge_to_front(f, 1, 2);
  EXPECT_EQ(r.canonical, f);
  EXPECT_TRUE(r.certificate.empty());
}

TEST(PullEdgeToFront, BaseCaseBubblesWithInverseMoves) {
  Factorization f = fac(6, {T(1, 4), T(1, 5), T(4, 5), T(1, 5)});
  CanonicalResult r = pull_edge_to_front(f, 5, 4);
  EXPECT_EQ(r.canonical[0], T(4, 5));
  EXPECT_EQ(r.certificate, (MoveCertificate{{HurwitzMove::inverse(1), HurwitzMove::inverse(0)}}));
  expect_replays(f, r);
}

TEST(PullEdgeToFront, LongPathIsShortened) {
  // A path 1-2-3-4-5 doubled: (1,5) is not an edge and must be manufactured.
  Factorization f = fac(5, {T(1, 2), T(2, 3), T(3, 4), T(4, 5), T(4, 5), T(3, 4), T(2, 3), T(1, 2)});
  for (Point a = 1; a <= 5; ++a)
    for (Point b = 1; b <= 5; ++b) {
      if (a == b)
        continue;
      CanonicalResult r = pull_edge_to_front(f, a, b);
      ASSERT_EQ(r.canonical[0], T(a, b));
      expect_replays(f, r);
    }
}

TEST(PullEdgeToFront, Errors) {
  EXPECT_THROW(pull_edge_to_front(fac(4, {T(1, 2), T(1, 2), T(3, 4), T(3, 4)}), 1, 2),
               PreconditionError);
  EXPECT_THROW(pull_edge_to_front(fac(4, {T(1, 2), T(1, 2)}), 1, 3), PreconditionError);
  EXPECT_THROW(pull_edge_to_front(fac(4, {T(1, 2), E, T(1, 2)}), 1, 2), PreconditionError);
  EXPECT_THROW(pull_edge_to_front(fac(4, {T(1, 2), T(1, 2)}), 2, 2), PreconditionError);
}

TEST(PullEdgeToFront, RandomConnected) {
  std::mt19937_64 rng(41);
  int checked = 0;
  while (checked < 300) {
    Factorization f = random_factorization(rng, 2 + rng() % 6, 1 + rng() % 12, 0.0);
    ComponentSignature s = signature(f);
    if (s.components.size() != 1)
      continue;
    const auto &v = s.components[0].vertices;
    Point a = v[rng() % v.size()], b = v[rng() % v.size()];
    if (a == b)
      continue;
    CanonicalResult r = pull_edge_to_front(f, a, b);
    ASSERT_EQ(r.canonical[0], T(a, b));
    ASSERT_EQ(apply_certificate(f, r.certificate), r.canonical);
    ++checked;
  }
}

TEST(GroupComponents, WorkedF1) {
  CanonicalResult r = group_components(worked_f1());
  EXPECT_EQ(r.canonical, fac(6, {T(1, 4), T(1, 5), T(4, 5), T(1, 5),
                                 T(2, 6), T(3, 6), T(2, 3), T(3, 6)}));
  expect_replays(worked_f1(), r);
}

TEST(GroupComponents, AlreadyGrouped) {
  Factorization f = fac(6, {E, T(1, 4), T(1, 4), T(2, 3), T(2, 3)});
  CanonicalResult r = group_components(f);
  EXPECT_EQ(r.canonical, f);
  EXPECT_TRUE(r.certificate.empty());
  Factorization g = fac(3, {E, T(1, 2), T(1, 2)});
  EXPECT_TRUE(group_components(g).certificate.empty());
}

TEST(GroupComponents, IdentitiesMoveLeft) {
  Factorization f = fac(4, {T(3, 4), E, T(1, 2), T(3, 4), E, T(1, 2)});
  CanonicalResult r = group_components(f);
  EXPECT_EQ(r.canonical, fac(4, {E, E, T(1, 2), T(1, 2), T(3, 4), T(3, 4)}));
  expect_replays(f, r);
}

TEST(CanonicalForm, WorkedPairAgree) {
  Factorization expected = fac(6, {T(1, 4), T(1, 4), T(4, 5), T(4, 5),
                                   T(2, 3), T(2, 3), T(3, 6), T(3, 6)});
  CanonicalResult r1 = canonical_form(worked_f1());
  CanonicalResult r2 = canonical_form(worked_f2());
  EXPECT_EQ(r1.canonical, expected);
  EXPECT_EQ(r2.canonical, expected);
  expect_replays(worked_f1(), r1);
  expect_replays(worked_f2(), r2);
}

TEST(CanonicalForm, SmallCases) {
  Factorization dbl = fac(3, {T(1, 2), T(1, 2)});
  EXPECT_EQ(canonical_form(dbl).canonical, dbl);
  EXPECT_TRUE(canonical_form(dbl).certificate.empty());
  Factorization ee = fac(3, {E, E});
  EXPECT_EQ(canonical_form(ee).canonical, ee);
  EXPECT_EQ(canonical_form(fac(2, {})).canonical, fac(2, {}));
}

TEST(CanonicalForm, LeftoverCollapsesOntoFirstEdge) {
  Factorization f = fac(3, {T(2, 3), T(2, 3), T(1, 3), T(1, 2), T(1, 2), T(1, 3)});
  ASSERT_TRUE(is_identity_product(f));
  CanonicalResult r = canonical_form(f);
  EXPECT_EQ(r.canonical, fac(3, {T(1, 2), T(1, 2), T(2, 3), T(2, 3), T(1, 2), T(1, 2)}));
  expect_replays(f, r);
}

TEST(CanonicalForm, RejectsNonIdentityProduct) {
  EXPECT_THROW(canonical_form(fac(3, {T(1, 2), T(2, 3)})), PreconditionError);
  EXPECT_THROW(group_components(fac(3, {T(1, 2)})), PreconditionError);
}

TEST(CanonicalForm, DoubleMoveRewriteMatchesBruteForceSearch) {
  // (a,b)^2 (a,c)^2 ~ (a,b)^2 (b,c)^2 via I@1, F@2, I@1.
  Factorization f = fac(3, {T(1, 2), T(1, 2), T(1, 3), T(1, 3)});
  MoveCertificate cert{{HurwitzMove::inverse(1), HurwitzMove::forward(2), HurwitzMove::inverse(1)}};
  EXPECT_EQ(apply_certificate(f, cert), fac(3, {T(1, 2), T(1, 2), T(2, 3), T(2, 3)}));
  // (a,b)^2 (a,c)^2 ~ (a,c)^2 (a,b)^2 via F@1, F@0, F@2, F@1.
  MoveCertificate swap{{HurwitzMove::forward(1), HurwitzMove::forward(0), HurwitzMove::forward(2),
                        HurwitzMove::forward(1)}};
  EXPECT_EQ(apply_certificate(f, swap), fac(3, {T(1, 3), T(1, 3), T(1, 2), T(1, 2)}));
}

TEST(CanonicalForm, SoundIdempotentOnScrambledForms) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    Factorization f = scrambled_identity(rng, 200);
    CanonicalResult r = canonical_form(f);
    ASSERT_EQ(apply_certificate(f, r.certificate), r.canonical) << format_factorization(f);
    ASSERT_TRUE(has_canonical_shape(r.canonical)) << format_factorization(r.canonical);
    ASSERT_EQ(signature(r.canonical), signature(f));
    CanonicalResult again = canonical_form(r.canonical);
    ASSERT_TRUE(again.certificate.empty());
    ASSERT_EQ(again.canonical, r.canonical);
    // loose certificate-size bound: O(m^2 n)
    ASSERT_LE(r.certificate.size(), 8 * f.size() * f.size() * f.degree() + 8);
  }
}

TEST(CanonicalForm, CompleteOnSmallEnumerations) {
  for (auto [n, m] : std::vector<std::pair<Point, std::size_t>>{{3, 4}, {4, 4}, {3, 6}, {4, 6}}) {
    std::vector<Factorization> all = enumerate_identity_factorizations(n, m);
    std::map<std::vector<Factor>, Factorization> canon_of;
    for (const Factorization &f : all) {
      CanonicalResult r = canonical_form(f);
      ASSERT_EQ(apply_certificate(f, r.certificate), r.canonical);
      canon_of.emplace(std::vector<Factor>(f.factors().begin(), f.factors().end()), r.canonical);
    }
    // Same canonical form <=> same orbit, with orbits from the naive BFS.
    std::set<std::vector<Factor>> done;
    std::set<Factorization> seen_forms;
    for (const Factorization &f : all) {
      std::vector<Factor> key(f.factors().begin(), f.factors().end());
      if (done.contains(key))
        continue;
      auto orbit = naive_orbit(f);
      const Factorization &form = canon_of.at(key);
      ASSERT_TRUE(seen_forms.insert(form).second) << "two orbits share a canonical form";
      for (const auto &member : orbit) {
        ASSERT_EQ(canon_of.at(member), form);
        ASSERT_EQ(hurwitz_equivalent(f, fac(n, member)), true);
        done.insert(member);
      }
    }
  }
}

TEST(CanonicalFromSignature, RejectsImpossibleWeights) {
  ComponentSignature s;
  s.degree = 4;
  s.components = {{{1, 2, 3}, 2}};
  s.total_factors = 2;
  EXPECT_THROW(canonical_from_signature(s), PreconditionError);
  s.components = {{{1, 2}, 3}};
  EXPECT_THROW(canonical_from_signature(s), PreconditionError);
}
