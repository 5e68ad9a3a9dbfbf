#include <gtest/gtest.h>

#include "hurwitz/error.hpp"
#include "hurwitz/oracle.hpp"
#include "test_support.hpp"

using namespace hurwitz;
using namespace hurwitz::testing;

namespace {

/// Brute-force count over every m-tuple, independent of the pruned DFS.
std::size_t brute_identity_count(Point n, std::size_t m) {
  std::vector<Factor> all;
  for (Point a = 1; a <= n; ++a)
    for (Point b = a + 1; b <= n; ++b)
      all.push_back(T(a, b));
  std::vector<std::size_t> idx(m, 0);
  std::size_t count = 0;
  for (;;) {
    std::vector<Factor> fs;
    for (std::size_t i : idx)
      fs.push_back(all[i]);
    count += naive_is_identity(n, fs);
    std::size_t d = 0;
    while (d < m && ++idx[d] == all.size())
      idx[d++] = 0;
    if (d == m)
      break;
  }
  return count;
}

} // namespace

TEST(EnumerateOrbit, FixedPoint) {
  OrbitReport r = enumerate_orbit(fac(3, {T(1, 2), T(1, 2)}), {100, 1, true});
  EXPECT_EQ(r.orbit_size, 1u);
  EXPECT_FALSE(r.truncated);
}

TEST(EnumerateOrbit, ThreeCycleOfPairs) {
  Factorization f = fac(3, {T(1, 2), T(2, 3)});
  OrbitReport r = enumerate_orbit(f, {100, 1, true});
  EXPECT_EQ(r.orbit_size, 3u);
  std::vector<Factorization> expected{fac(3, {T(1, 2), T(2, 3)}), fac(3, {T(1, 3), T(1, 2)}),
                                      fac(3, {T(2, 3), T(1, 3)})};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(r.sorted_members(), expected);
}

TEST(EnumerateOrbit, ConnectedS3LengthFourIsOneOrbit) {
  OrbitReport r = enumerate_orbit(fac(3, {T(1, 2), T(1, 2), T(1, 3), T(1, 3)}), {100, 1, true});
  EXPECT_EQ(r.orbit_size, 24u);
  std::size_t connected = 0;
  for (const Factorization &f : enumerate_identity_factorizations(3, 4))
    connected += signature(f).components.size() == 1 && signature(f).components[0].vertices.size() == 3;
  EXPECT_EQ(connected, 24u);
  for (const Factorization &m : r.sorted_members())
    ASSERT_EQ(signature(m).components[0].vertices.size(), 3u);
}

TEST(EnumerateOrbit, MatchesNaiveBfs) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    Factorization f = random_factorization(rng, 2 + rng() % 3, 2 + rng() % 4, 0.2);
    OrbitReport r = enumerate_orbit(f, {100000, 1, true});
    auto naive = naive_orbit(f);
    ASSERT_EQ(r.orbit_size, naive.size());
    std::vector<Factorization> expected;
    for (const auto &v : naive)
      expected.push_back(fac(f.degree(), v));
    ASSERT_EQ(r.sorted_members(), expected);
  }
}

TEST(EnumerateOrbit, CapTruncates) {
  Factorization f = fac(3, {T(1, 2), T(1, 2), T(1, 3), T(1, 3)});
  OrbitReport r = enumerate_orbit(f, {5, 1, false});
  EXPECT_TRUE(r.truncated);
  EXPECT_EQ(r.orbit_size, 5u);
  OrbitReport exact = enumerate_orbit(f, {24, 1, false});
  EXPECT_FALSE(exact.truncated);
  EXPECT_EQ(exact.orbit_size, 24u);
  EXPECT_THROW(enumerate_orbit(f, {0, 1, false}), PreconditionError);
}

TEST(EnumerateOrbit, ParentEdgesReplayToSeed) {
  Factorization f = fac(4, {T(1, 2), T(2, 3), T(3, 4), T(3, 4), T(2, 3), T(1, 2)});
  OrbitReport r = enumerate_orbit(f, {kDefaultOrbitCap, 1, true});
  ASSERT_EQ(r.nodes.size(), r.orbit_size);
  for (std::size_t i = 0; i < r.nodes.size(); i += 7) {
    MoveCertificate cert = r.certificate_from_seed(i);
    ASSERT_EQ(apply_certificate(f, cert), r.nodes[i].state);
    ASSERT_EQ(apply_certificate(r.nodes[i].state, invert_certificate(cert)), f);
  }
}

TEST(EnumerateOrbit, DeterministicAcrossWorkerCounts) {
  Factorization f = fac(4, {T(1, 2), T(2, 3), T(3, 4), T(3, 4), T(2, 3), T(1, 2)});
  OrbitReport one = enumerate_orbit(f, {kDefaultOrbitCap, 1, true});
  for (unsigned workers : {2u, 3u, 8u}) {
    OrbitReport many = enumerate_orbit(f, {kDefaultOrbitCap, workers, true});
    ASSERT_EQ(many.orbit_size, one.orbit_size);
    ASSERT_EQ(many.sorted_members(), one.sorted_members());
    for (std::size_t i = 0; i < one.nodes.size(); ++i) {
      ASSERT_EQ(many.nodes[i].state, one.nodes[i].state);
      ASSERT_EQ(many.nodes[i].parent, one.nodes[i].parent);
    }
  }
  OrbitReport capped1 = enumerate_orbit(f, {100, 1, true});
  OrbitReport capped4 = enumerate_orbit(f, {100, 4, true});
  EXPECT_EQ(capped1.sorted_members(), capped4.sorted_members());
}

TEST(EnumerateIdentity, SmallCounts) {
  auto n2m2 = enumerate_identity_factorizations(2, 2);
  ASSERT_EQ(n2m2.size(), 1u);
  EXPECT_EQ(n2m2[0], fac(2, {T(1, 2), T(1, 2)}));
  auto n3m2 = enumerate_identity_factorizations(3, 2);
  EXPECT_EQ(n3m2.size(), 3u);
  for (const auto &f : n3m2)
    EXPECT_EQ(f[0], f[1]);
  EXPECT_EQ(enumerate_identity_factorizations(3, 4).size(), 27u);
  EXPECT_EQ(enumerate_identity_factorizations(4, 0).size(), 1u);
  EXPECT_EQ(enumerate_identity_factorizations(4, 1).size(), 0u);
}

TEST(EnumerateIdentity, MatchesBruteForceAndIsLexicographic) {
  for (Point n = 2; n <= 4; ++n)
    for (std::size_t m = 0; m <= 5; ++m) {
      auto all = enumerate_identity_factorizations(n, m);
      ASSERT_EQ(all.size(), brute_identity_count(n, m)) << "n=" << n << " m=" << m;
      ASSERT_TRUE(std::is_sorted(all.begin(), all.end()));
      ASSERT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
    }
}

TEST(EnumerateIdentity, Guards) {
  EXPECT_THROW(enumerate_identity_factorizations(1, 2), PreconditionError);
  EXPECT_THROW(enumerate_identity_factorizations(10, 8), PreconditionError);
}

TEST(OrbitPartition, Checkpoints) {
  PartitionReport r34 = orbit_partition(3, 4);
  EXPECT_EQ(r34.factorization_count, 27u);
  EXPECT_EQ(r34.classes.size(), 4u);
  EXPECT_EQ(r34.orbit_sizes(), (std::vector<std::size_t>{1, 1, 1, 24}));
  EXPECT_TRUE(r34.theorem_holds());

  PartitionReport r24 = orbit_partition(2, 4);
  EXPECT_EQ(r24.orbit_sizes(), (std::vector<std::size_t>{1}));

  PartitionReport r32 = orbit_partition(3, 2);
  EXPECT_EQ(r32.orbit_sizes(), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(r32.classes.size(), 3u);
}

TEST(OrbitPartition, TheoremAcrossTestMatrix) {
  // Frozen from an independent brute-force BFS (pure Python, relabeling moves).
  struct Row {
    Point n;
    std::size_t m, count;
    std::vector<std::size_t> sizes;
  };
  std::vector<Row> rows{
      {2, 2, 1, {1}},
      {2, 4, 1, {1}},
      {3, 2, 3, {1, 1, 1}},
      {3, 4, 27, {1, 1, 1, 24}},
      {3, 6, 243, {1, 1, 1, 240}},
      {4, 2, 6, {1, 1, 1, 1, 1, 1}},
      {4, 4, 120, {1, 1, 1, 1, 1, 1, 6, 6, 6, 24, 24, 24, 24}},
      {4, 6, 3936, {1, 1, 1, 1, 1, 1, 15, 15, 15, 15, 15, 15, 240, 240, 240, 240, 2880}},
  };
  for (const Row &row : rows) {
    PartitionReport r = orbit_partition(row.n, row.m);
    EXPECT_EQ(r.factorization_count, row.count) << "n=" << row.n << " m=" << row.m;
    EXPECT_EQ(r.orbit_sizes(), row.sizes) << "n=" << row.n << " m=" << row.m;
    EXPECT_EQ(r.classes.size(), row.sizes.size());
    EXPECT_TRUE(r.theorem_holds());
  }
}

TEST(OrbitPartition, TruncationIsFlagged) {
  PartitionReport r = orbit_partition(3, 4, {10, 1, false});
  EXPECT_TRUE(r.any_truncated);
  EXPECT_FALSE(r.theorem_holds());
}

TEST(OrbitReports, TextAndJson) {
  PartitionReport r = orbit_partition(3, 2);
  EXPECT_EQ(format_partition_report(r),
            "n=3 m=2 factorizations=3 orbits=3 signatures=3\n"
            "orbit 0 size=1 truncated=false signature=n=3 m=2 e=0 {1,2}:2\n"
            "orbit 1 size=1 truncated=false signature=n=3 m=2 e=0 {1,3}:2\n"
            "orbit 2 size=1 truncated=false signature=n=3 m=2 e=0 {2,3}:2\n"
            "theorem: holds\n");
  std::string json = partition_report_json(r);
  EXPECT_NE(json.find("\"signature\": \"n=3 m=2 e=0 {1,2}:2\""), std::string::npos);
  EXPECT_NE(json.find("\"truncated\": false"), std::string::npos);
}
