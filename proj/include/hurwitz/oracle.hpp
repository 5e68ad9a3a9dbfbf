#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/factorization.hpp"
#include "hurwitz/graph.hpp"

namespace hurwitz {

inline constexpr std::size_t kDefaultOrbitCap = 1'000'000;

struct OrbitOptions {
  std::size_t cap = kDefaultOrbitCap;
  unsigned workers = 1;       ///< 0 = hardware concurrency
  bool keep_members = false;  ///< store states and BFS parent edges
};

/// One visited state and the edge it was discovered through.
struct OrbitNode {
  Factorization state;
  std::size_t parent = 0; ///< index into OrbitReport::nodes; seed points at itself
  HurwitzMove via;        ///< applied to nodes[parent] gives state
};

struct OrbitReport {
  Factorization seed;
  std::size_t orbit_size = 0;
  bool truncated = false;
  /// BFS discovery order, seed first; empty unless keep_members.
  std::vector<OrbitNode> nodes;

  /// Moves carrying the seed to nodes[i]. Requires keep_members.
  MoveCertificate certificate_from_seed(std::size_t i) const;

  /// States sorted ascending. Requires keep_members.
  std::vector<Factorization> sorted_members() const;
};

/// Breadth-first closure of f under all R_k and R_k^-1. Frontier expansion
/// may fan out across workers; the result does not depend on the count.
OrbitReport enumerate_orbit(const Factorization &f, const OrbitOptions &options = {});

/// Upper bound on (n(n-1)/2)^(m-1) tuples examined by the enumerator.
inline constexpr std::uint64_t kEnumerationBudget = 50'000'000;

/// Visits every m-tuple of transpositions of {1..n} with identity product,
/// in lexicographic order. Throws PreconditionError if n < 2 or the search
/// would exceed kEnumerationBudget.
void for_each_identity_factorization(
    Point n, std::size_t m, const std::function<void(const Factorization &)> &visit);

std::vector<Factorization> enumerate_identity_factorizations(Point n, std::size_t m);

struct OrbitRecord {
  ComponentSignature signature;
  std::size_t size = 0;
  bool truncated = false;
};

struct SignatureClass {
  ComponentSignature signature;
  std::vector<std::size_t> orbit_sizes; ///< ascending
};

struct PartitionReport {
  Point degree = 2;
  std::size_t length = 0;
  std::size_t factorization_count = 0;
  std::vector<OrbitRecord> orbits;    ///< in order of first (lexicographic) member
  std::vector<SignatureClass> classes; ///< ordered by signature
  bool any_truncated = false;
  /// An orbit whose members do not all share one signature.
  std::size_t mixed_orbits = 0;

  /// Orbits and signature classes coincide one-to-one.
  bool theorem_holds() const noexcept;
  std::vector<std::size_t> orbit_sizes() const; ///< ascending
};

PartitionReport orbit_partition(Point n, std::size_t m, const OrbitOptions &options = {});

/// Line-oriented text report.
std::string format_orbit_report(const OrbitReport &r, bool with_members);
std::string format_partition_report(const PartitionReport &r);

/// One JSON record per orbit: {"signature", "size", "truncated"}.
std::string partition_report_json(const PartitionReport &r);
std::string orbit_report_json(const OrbitReport &r);

} // namespace hurwitz
