#include "hurwitz/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hurwitz {

DisjointSets::DisjointSets(Point degree) : parent_(degree + 1), size_(degree + 1, 1) {
  std::iota(parent_.begin(), parent_.end(), Point{0});
}

Point DisjointSets::find(Point x) noexcept {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(Point x, Point y) noexcept {
  x = find(x);
  y = find(y);
  if (x == y)
    return false;
  if (size_[x] < size_[y])
    std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  return true;
}

std::uint64_t FactorizationGraph::total_weight() const noexcept {
  std::uint64_t total = 0;
  for (const WeightedEdge &e : edges)
    total += e.weight;
  return total;
}

std::uint64_t FactorizationGraph::weight(Point a, Point b) const noexcept {
  if (a > b)
    std::swap(a, b);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{a, b},
                             [](const WeightedEdge &e, const std::pair<Point, Point> &key) {
                               return std::pair{e.a, e.b} < key;
                             });
  if (it == edges.end() || it->a != a || it->b != b)
    return 0;
  return it->weight;
}

FactorizationGraph build_graph(const Factorization &f) {
  std::vector<std::uint32_t> codes;
  codes.reserve(f.size());
  for (const Factor &t : f.factors())
    if (t.is_transposition())
      codes.push_back(t.code());
  std::sort(codes.begin(), codes.end());

  FactorizationGraph g;
  g.degree = f.degree();
  for (std::size_t i = 0; i < codes.size();) {
    std::size_t j = i;
    while (j < codes.size() && codes[j] == codes[i])
      ++j;
    g.edges.push_back({codes[i] >> 16, codes[i] & 0xFFFF, j - i});
    i = j;
  }
  return g;
}

ComponentSignature signature(const Factorization &f) {
  const Point n = f.degree();
  DisjointSets sets(n);
  std::vector<std::uint64_t> incident(n + 1, 0);
  ComponentSignature sig;
  sig.degree = n;
  sig.total_factors = f.size();
  for (const Factor &t : f.factors()) {
    if (t.is_identity()) {
      ++sig.identity_factor_count;
      continue;
    }
    sets.unite(t.first(), t.second());
    ++incident[t.first()];
  }

  // Scanning points in ascending order meets every component at its minimal
  // vertex first, which fixes the output order.
  std::vector<std::int32_t> slot(n + 1, -1);
  std::vector<std::uint64_t> weight_at_root(n + 1, 0);
  for (Point x = 1; x <= n; ++x)
    weight_at_root[sets.find(x)] += incident[x];
  for (Point x = 1; x <= n; ++x) {
    Point root = sets.find(x);
    if (weight_at_root[root] == 0)
      continue;
    if (slot[root] < 0) {
      slot[root] = static_cast<std::int32_t>(sig.components.size());
      sig.components.push_back({{}, weight_at_root[root]});
      sig.components.back().vertices.reserve(sets.set_size(root));
    }
    sig.components[slot[root]].vertices.push_back(x);
  }
  return sig;
}

std::string to_string(const ComponentSignature &sig) {
  std::ostringstream os;
  os << "n=" << sig.degree << " m=" << sig.total_factors << " e="
     << sig.identity_factor_count;
  for (const Component &c : sig.components) {
    os << " {";
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
      os << (i ? "," : "") << c.vertices[i];
    os << "}:" << c.weight;
  }
  return os.str();
}

std::vector<std::int32_t> component_of_points(const ComponentSignature &sig) {
  std::vector<std::int32_t> of(sig.degree + 1, -1);
  for (std::size_t i = 0; i < sig.components.size(); ++i)
    for (Point v : sig.components[i].vertices)
      of[v] = static_cast<std::int32_t>(i);
  return of;
}

std::string to_dot(const FactorizationGraph &g) {
  std::ostringstream os;
  os << "graph factorization {\n";
  for (Point v = 1; v <= g.degree; ++v)
    os << "  " << v << " [label=\"" << v << "\"];\n";
  for (const WeightedEdge &e : g.edges)
    os << "  " << e.a << " -- " << e.b << " [label=\"w=" << e.weight << "\"];\n";
  os << "}\n";
  return os.str();
}

} // namespace hurwitz
