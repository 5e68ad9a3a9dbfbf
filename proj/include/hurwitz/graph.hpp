#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hurwitz/factorization.hpp"

namespace hurwitz {

/// Disjoint-set forest over points 1..n: union by size, path halving.
class DisjointSets {
public:
  explicit DisjointSets(Point degree);

  Point find(Point x) noexcept;
  /// Returns false if x and y were already joined.
  bool unite(Point x, Point y) noexcept;
  std::uint32_t set_size(Point x) noexcept { return size_[find(x)]; }

private:
  std::vector<Point> parent_;
  std::vector<std::uint32_t> size_;
};

struct WeightedEdge {
  Point a = 0; ///< a < b
  Point b = 0;
  std::uint64_t weight = 0;

  friend bool operator==(const WeightedEdge &, const WeightedEdge &) = default;
};

/// The factorization graph: one edge per distinct transposition, weighted by
/// its multiplicity. Edges are sorted lexicographically.
struct FactorizationGraph {
  Point degree = 1;
  std::vector<WeightedEdge> edges;

  std::uint64_t total_weight() const noexcept;
  /// 0 when {a,b} is not an edge.
  std::uint64_t weight(Point a, Point b) const noexcept;
};

FactorizationGraph build_graph(const Factorization &f);

/// One edge-bearing connected component.
struct Component {
  std::vector<Point> vertices; ///< ascending
  std::uint64_t weight = 0;

  Point min_vertex() const noexcept { return vertices.front(); }

  friend bool operator==(const Component &, const Component &) = default;
  friend auto operator<=>(const Component &, const Component &) = default;
};

/// The complete Hurwitz invariant of an identity factorization. Components
/// are ordered by minimal vertex; isolated points are omitted.
struct ComponentSignature {
  Point degree = 1;
  std::vector<Component> components;
  std::uint64_t identity_factor_count = 0;
  std::uint64_t total_factors = 0;

  friend bool operator==(const ComponentSignature &, const ComponentSignature &) = default;
  friend auto operator<=>(const ComponentSignature &, const ComponentSignature &) = default;
};

/// Union-find over the factor list; O(n + m) time, O(n) extra memory.
ComponentSignature signature(const Factorization &f);

/// `n=6 m=8 e=0 {1,4,5}:4 {2,3,6}:4`
std::string to_string(const ComponentSignature &sig);

/// Component index (into signature(f).components) of every point, -1 for
/// isolated points. Indexed by point, slot 0 unused.
std::vector<std::int32_t> component_of_points(const ComponentSignature &sig);

/// Undirected DOT graph; edges labelled `w=<weight>`, output byte-stable.
std::string to_dot(const FactorizationGraph &g);

} // namespace hurwitz
