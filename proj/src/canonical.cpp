#include "hurwitz/canonical.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

/// Mutable factor list plus the certificate of every move applied to it.
///
/// Doubled blocks: inside a component window [lo, hi) the planner lays out
/// pairs X X at lo, lo + 2, ...; block j occupies slots lo + 2j and lo + 2j + 1.
class Planner {
public:
  explicit Planner(const Factorization &f)
      : degree_(f.degree()), work_(f.factors().begin(), f.factors().end()) {}

  const std::vector<Factor> &work() const noexcept { return work_; }

  CanonicalResult finish() && {
    return {Factorization(degree_, std::move(work_)), std::move(cert_)};
  }

  void forward(std::size_t k) { apply(HurwitzMove::forward(k)); }
  void inverse(std::size_t k) { apply(HurwitzMove::inverse(k)); }

  /// Moves the factor at `from` down to `to` with Inverse moves; the factor
  /// itself is unchanged, every factor it passes is conjugated by it.
  void bubble_left(std::size_t from, std::size_t to) {
    for (std::size_t k = from; k > to; --k)
      inverse(k - 1);
  }

  /// Brings (u v) to slot lo, touching only slots in [lo, hi). Requires a
  /// u-v path in the graph of the window.
  void pull_to_front(std::size_t lo, std::size_t hi, Point u, Point v) {
    const Factor target = Factor::transposition(u, v);
    std::size_t previous = std::numeric_limits<std::size_t>::max();
    for (;;) {
      std::vector<Point> path = shortest_path(lo, hi, u, v);
      if (path.empty())
        throw InternalError("no path " + std::to_string(u) + "-" + std::to_string(v) +
                            " inside factor window [" + std::to_string(lo) + "," +
                            std::to_string(hi) + ")");
      const std::size_t length = path.size() - 1;
      if (length >= previous)
        throw InternalError("path shortening made no progress");
      previous = length;

      if (length == 1) {
        auto it = std::find(work_.begin() + lo, work_.begin() + hi, target);
        bubble_left(static_cast<std::size_t>(it - work_.begin()), lo);
        return;
      }
      shorten(lo, hi, Factor::transposition(path[0], path[1]),
              Factor::transposition(path[1], path[2]));
    }
  }

  /// Stable sort by `key` using swaps of commuting neighbours.
  void sort_by_key(std::vector<std::uint32_t> key) {
    for (std::size_t i = 1; i < work_.size(); ++i)
      for (std::size_t j = i; j > 0 && key[j - 1] > key[j]; --j) {
        forward(j - 1);
        std::swap(key[j - 1], key[j]);
      }
  }

  void canonicalize_block(std::size_t lo, std::size_t hi, const std::vector<Point> &verts);

private:
  void apply(const HurwitzMove &mv) {
    apply_move_in_place(work_, mv);
    cert_.moves.push_back(mv);
  }

  /// a1-a2 and a2-a3 are the first two edges of a minimal path. Walks a copy
  /// of one toward a nearest copy of the other and merges them into (a1 a3),
  /// shortening the path by one.
  void shorten(std::size_t lo, std::size_t hi, Factor first, Factor second) {
    std::vector<std::size_t> ps, qs;
    for (std::size_t i = lo; i < hi; ++i) {
      if (work_[i] == first)
        ps.push_back(i);
      else if (work_[i] == second)
        qs.push_back(i);
    }
    std::size_t best_p = ps.front(), best_q = qs.front();
    std::size_t best_gap = std::numeric_limits<std::size_t>::max();
    for (std::size_t a = 0, b = 0; a < ps.size() && b < qs.size();) {
      std::size_t gap = ps[a] < qs[b] ? qs[b] - ps[a] : ps[a] - qs[b];
      if (gap < best_gap) {
        best_gap = gap;
        best_p = ps[a];
        best_q = qs[b];
      }
      (ps[a] < qs[b] ? a : b)++;
    }

    if (best_p < best_q) {
      for (std::size_t k = best_p; k + 1 < best_q; ++k)
        forward(k);
      // (a1 a2)(a2 a3) -> (a1 a3)(a1 a2)
      forward(best_q - 1);
    } else {
      for (std::size_t k = best_p - 1; k > best_q; --k)
        inverse(k);
      // (a2 a3)(a1 a2) -> (a1 a3)(a2 a3)
      forward(best_q);
    }
  }

  /// Minimal u-v path in the graph of work_[lo, hi); among minimal paths the
  /// lexicographically smallest vertex sequence. Empty if none exists.
  std::vector<Point> shortest_path(std::size_t lo, std::size_t hi, Point u, Point v) const {
    Window g = window_graph(lo, hi);
    auto iu = g.index(u), iv = g.index(v);
    if (iu < 0 || iv < 0)
      return {};
    std::vector<std::int32_t> dist = g.distances_from(iv);
    if (dist[iu] < 0)
      return {};
    std::vector<Point> path{u};
    for (std::int32_t at = iu; at != iv;) {
      // neighbours are ascending, so the first one on a shortest path wins
      for (std::int32_t nb : g.neighbours(at))
        if (dist[nb] == dist[at] - 1) {
          at = nb;
          break;
        }
      path.push_back(g.vertices[at]);
    }
    return path;
  }

  /// Among verts[0..k) the index of a vertex nearest to verts[k] in the
  /// graph of work_[lo, hi); ties go to the smaller index. -1 if unreachable.
  std::int32_t nearest_prefix_vertex(std::size_t lo, std::size_t hi,
                                     const std::vector<Point> &verts, std::size_t k) const {
    Window g = window_graph(lo, hi);
    auto src = g.index(verts[k]);
    if (src < 0)
      return -1;
    std::vector<std::int32_t> dist = g.distances_from(src);
    std::int32_t best = -1, best_dist = std::numeric_limits<std::int32_t>::max();
    for (std::size_t s = 0; s < k; ++s) {
      auto at = g.index(verts[s]);
      if (at >= 0 && dist[at] >= 0 && dist[at] < best_dist) {
        best = static_cast<std::int32_t>(s);
        best_dist = dist[at];
      }
    }
    return best;
  }

  /// Compressed adjacency (CSR) of the distinct edges in a slot window.
  struct Window {
    std::vector<Point> vertices; // ascending
    std::vector<std::uint32_t> offsets;
    std::vector<std::int32_t> targets;

    std::int32_t index(Point x) const {
      auto it = std::lower_bound(vertices.begin(), vertices.end(), x);
      if (it == vertices.end() || *it != x)
        return -1;
      return static_cast<std::int32_t>(it - vertices.begin());
    }

    std::span<const std::int32_t> neighbours(std::int32_t i) const {
      return std::span(targets).subspan(offsets[i], offsets[i + 1] - offsets[i]);
    }

    std::vector<std::int32_t> distances_from(std::int32_t src) const {
      std::vector<std::int32_t> dist(vertices.size(), -1);
      std::deque<std::int32_t> queue{src};
      dist[src] = 0;
      while (!queue.empty()) {
        std::int32_t at = queue.front();
        queue.pop_front();
        for (std::int32_t nb : neighbours(at))
          if (dist[nb] < 0) {
            dist[nb] = dist[at] + 1;
            queue.push_back(nb);
          }
      }
      return dist;
    }
  };

  Window window_graph(std::size_t lo, std::size_t hi) const {
    std::vector<std::pair<Point, Point>> arcs;
    for (std::size_t i = lo; i < hi; ++i) {
      const Factor &t = work_[i];
      if (t.is_identity())
        continue;
      arcs.emplace_back(t.first(), t.second());
      arcs.emplace_back(t.second(), t.first());
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    Window g;
    for (const auto &[a, b] : arcs)
      if (g.vertices.empty() || g.vertices.back() != a)
        g.vertices.push_back(a);
    g.offsets.assign(g.vertices.size() + 1, 0);
    g.targets.reserve(arcs.size());
    std::size_t at = 0;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      while (at < arcs.size() && arcs[at].first == g.vertices[i]) {
        g.targets.push_back(g.index(arcs[at].second));
        ++at;
      }
      g.offsets[i + 1] = static_cast<std::uint32_t>(g.targets.size());
    }
    return g;
  }

  // Doubled-block rewrites. `lo` is the window start, indices count blocks.

  Factor block_label(std::size_t lo, std::size_t j) const { return work_[lo + 2 * j]; }

  /// X X Y Y -> Y Y X X for blocks j, j + 1 (any X, Y).
  void swap_blocks(std::size_t lo, std::size_t j) {
    std::size_t p = lo + 2 * j;
    forward(p + 1);
    forward(p);
    forward(p + 2);
    forward(p + 1);
  }

  /// X X Y Y -> X X Y' Y' with Y' = X Y X, for blocks j - 1, j sharing
  /// exactly one point; e.g. (a,b)^2 (a,c)^2 -> (a,b)^2 (b,c)^2.
  void relabel_block(std::size_t lo, std::size_t j) {
    const Factor x = block_label(lo, j - 1), y = block_label(lo, j);
    const bool share_one = (x.touches(y.first()) != x.touches(y.second()));
    if (!share_one)
      throw InternalError("relabel needs blocks " + to_string(x) + " and " + to_string(y) +
                          " to share exactly one point");
    std::size_t p = lo + 2 * (j - 1);
    inverse(p + 1);
    forward(p + 2);
    inverse(p + 1);
    const Factor expected = conjugate(y, x);
    if (work_[p + 2] != expected || work_[p + 3] != expected || work_[p] != x ||
        work_[p + 1] != x)
      throw InternalError("double-pair rewrite did not produce " + to_string(expected));
  }

  /// Moves block `cur` by adjacent swaps until it sits right after a block
  /// labelled `left`, among blocks [0, count). Returns its new index.
  std::size_t bring_after(std::size_t lo, std::size_t cur, std::size_t count, Factor left) {
    std::size_t found = count;
    std::size_t best_gap = std::numeric_limits<std::size_t>::max();
    for (std::size_t j = 0; j < count; ++j) {
      if (j == cur || block_label(lo, j) != left)
        continue;
      std::size_t gap = j < cur ? cur - j : j - cur;
      if (gap < best_gap) {
        best_gap = gap;
        found = j;
      }
    }
    if (found == count)
      throw InternalError("no doubled block " + to_string(left) + " to rewrite against");
    if (found < cur) {
      for (; cur > found + 1; --cur)
        swap_blocks(lo, cur - 1);
    } else {
      for (; cur < found; ++cur)
        swap_blocks(lo, cur);
    }
    return cur;
  }

  std::size_t move_block(std::size_t lo, std::size_t cur, std::size_t to) {
    for (; cur > to; --cur)
      swap_blocks(lo, cur - 1);
    for (; cur < to; ++cur)
      swap_blocks(lo, cur);
    return cur;
  }

  Point degree_;
  std::vector<Factor> work_;
  MoveCertificate cert_;
};

void Planner::canonicalize_block(std::size_t lo, std::size_t hi,
                                 const std::vector<Point> &verts) {
  const std::size_t l = verts.size();
  const std::size_t weight = hi - lo;
  if (l < 2 || weight < 2 * (l - 1) || weight % 2 != 0)
    throw InternalError("component of " + std::to_string(l) + " vertices has weight " +
                        std::to_string(weight) + "; the canonical shape needs an even " +
                        "weight of at least 2(l-1)");

  auto index_of = [&](Point x) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), x) -
                                    verts.begin());
  };
  auto path_edge = [&](std::size_t t) { return Factor::transposition(verts[t], verts[t + 1]); };

  // (v0 v1)^2
  pull_to_front(lo, hi, verts[0], verts[1]);
  pull_to_front(lo + 1, hi, verts[0], verts[1]);
  std::size_t pos = lo + 2;

  // (v_{k-1} v_k)^2 for k = 2 .. l-1
  for (std::size_t k = 2; k < l; ++k) {
    std::int32_t s = nearest_prefix_vertex(pos, hi, verts, k);
    if (s < 0)
      throw InternalError("vertex " + std::to_string(verts[k]) +
                          " disconnected from the canonical prefix");
    pull_to_front(pos, hi, verts[s], verts[k]);
    pull_to_front(pos + 1, hi, verts[s], verts[k]);

    // Walk the new block's far endpoint along the prefix path v_s .. v_{k-1}.
    std::size_t cur = k - 1;
    for (std::size_t t = static_cast<std::size_t>(s); t + 1 < k; ++t) {
      cur = bring_after(lo, cur, k, path_edge(t));
      relabel_block(lo, cur);
    }
    move_block(lo, cur, k - 1);
    pos += 2;
  }

  // Leftover pairs, each rewritten to (v0 v1)^2.
  while (pos < hi) {
    if (hi - pos < 2)
      throw InternalError("odd leftover in component window");
    const Factor head = work_[pos];
    if (head.is_identity())
      throw InternalError("identity factor inside component window");
    pull_to_front(pos + 1, hi, head.first(), head.second());

    const std::size_t home = (pos - lo) / 2;
    const std::size_t count = home + 1;
    std::size_t cur = home;
    std::size_t i = index_of(head.first()), j = index_of(head.second());
    for (; i > 0; --i) {
      cur = bring_after(lo, cur, count, path_edge(i - 1));
      relabel_block(lo, cur);
    }
    for (; j > 1; --j) {
      cur = bring_after(lo, cur, count, path_edge(j - 1));
      relabel_block(lo, cur);
    }
    move_block(lo, cur, home);
    pos += 2;
  }
}

void require_identity_product(const Factorization &f) {
  if (!is_identity_product(f))
    throw PreconditionError("theorem precondition violated: product " +
                            eval_product(f).to_cycle_string() + " is not the identity");
}

[[maybe_unused]] void verify_replay(const Factorization &input, const CanonicalResult &r) {
  if (apply_certificate(input, r.certificate) != r.canonical)
    throw InternalError("certificate does not replay onto the planner output");
}

void maybe_verify(const Factorization &input, const CanonicalResult &r) {
#ifdef HURWITZ_VERIFY_REPLAY
  verify_replay(input, r);
#else
  (void)input;
  (void)r;
#endif
}

std::vector<std::uint32_t> grouping_keys(const Factorization &f, const ComponentSignature &sig) {
  std::vector<std::int32_t> of = component_of_points(sig);
  std::vector<std::uint32_t> key(f.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i].is_transposition())
      key[i] = sig.components[of[f[i].first()]].min_vertex();
  return key;
}

} // namespace

bool hurwitz_equivalent(const Factorization &f1, const Factorization &f2) {
  if (f1.degree() != f2.degree())
    throw PreconditionError("factorizations live in S_" + std::to_string(f1.degree()) +
                            " and S_" + std::to_string(f2.degree()));
  if (f1.size() != f2.size())
    throw PreconditionError("factorizations have " + std::to_string(f1.size()) + " and " +
                            std::to_string(f2.size()) + " factors; equal length is required");
  require_identity_product(f1);
  require_identity_product(f2);
  return signature(f1) == signature(f2);
}

CanonicalResult pull_edge_to_front(const Factorization &f, Point v1, Point v2) {
  if (v1 == v2)
    throw PreconditionError("pull_edge_to_front needs two distinct points");
  if (!f.all_transpositions())
    throw PreconditionError("pull_edge_to_front needs a transposition-only factorization");
  ComponentSignature sig = signature(f);
  if (sig.components.size() != 1)
    throw PreconditionError("factorization graph has " +
                            std::to_string(sig.components.size()) +
                            " components; exactly one is required");
  const auto &vs = sig.components.front().vertices;
  for (Point v : {v1, v2})
    if (!std::binary_search(vs.begin(), vs.end(), v))
      throw PreconditionError("point " + std::to_string(v) + " is not in the component");

  Planner planner(f);
  planner.pull_to_front(0, f.size(), v1, v2);
  CanonicalResult r = std::move(planner).finish();
  maybe_verify(f, r);
  return r;
}

CanonicalResult group_components(const Factorization &f) {
  require_identity_product(f);
  Planner planner(f);
  planner.sort_by_key(grouping_keys(f, signature(f)));
  CanonicalResult r = std::move(planner).finish();
  maybe_verify(f, r);
  return r;
}

CanonicalResult canonical_form(const Factorization &f) {
  require_identity_product(f);
  const ComponentSignature sig = signature(f);

  Planner planner(f);
  planner.sort_by_key(grouping_keys(f, sig));
  std::size_t lo = sig.identity_factor_count;
  for (const Component &c : sig.components) {
    const std::size_t hi = lo + c.weight;
    planner.canonicalize_block(lo, hi, c.vertices);
    lo = hi;
  }
  CanonicalResult r = std::move(planner).finish();
  maybe_verify(f, r);
  if (r.canonical != canonical_from_signature(sig))
    throw InternalError("planner output is not in canonical shape");
  return r;
}

Factorization canonical_from_signature(const ComponentSignature &sig) {
  std::vector<Factor> out(sig.identity_factor_count, Factor::identity());
  for (const Component &c : sig.components) {
    const std::size_t l = c.vertices.size();
    if (l < 2 || c.weight % 2 != 0 || c.weight < 2 * (l - 1))
      throw PreconditionError("component of " + std::to_string(l) + " vertices cannot have " +
                              "weight " + std::to_string(c.weight) +
                              " in an identity factorization");
    for (std::size_t t = 0; t + 1 < l; ++t) {
      Factor e = Factor::transposition(c.vertices[t], c.vertices[t + 1]);
      out.push_back(e);
      out.push_back(e);
    }
    Factor base = Factor::transposition(c.vertices[0], c.vertices[1]);
    out.insert(out.end(), c.weight - 2 * (l - 1), base);
  }
  return Factorization(sig.degree, std::move(out));
}

} // namespace hurwitz
