#include "hurwitz/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

using Key = std::vector<std::uint32_t>;

struct KeyHash {
  std::size_t operator()(const Key &k) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint32_t c : k) {
      h ^= c;
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

Factor decode(std::uint32_t code) {
  return code == 0 ? Factor::identity() : Factor::transposition(code >> 16, code & 0xFFFF);
}

Key encode(const Factorization &f) {
  Key k;
  k.reserve(f.size());
  for (const Factor &t : f.factors())
    k.push_back(t.code());
  return k;
}

Factorization to_factorization(Point degree, const Key &k) {
  std::vector<Factor> factors;
  factors.reserve(k.size());
  for (std::uint32_t c : k)
    factors.push_back(decode(c));
  return Factorization(degree, std::move(factors));
}

Key moved(const Key &k, const HurwitzMove &mv) {
  Key out = k;
  Factor pair[2] = {decode(k[mv.position]), decode(k[mv.position + 1])};
  apply_move_in_place(pair, {0, mv.direction});
  out[mv.position] = pair[0].code();
  out[mv.position + 1] = pair[1].code();
  return out;
}

struct Candidate {
  Key key;
  std::size_t parent; // frontier slot
  HurwitzMove via;
};

using KeySet = std::unordered_set<Key, KeyHash>;

/// Neighbours of frontier[first, last) not already in `visited`, in
/// (frontier slot, position, Forward-before-Inverse) order.
std::vector<Candidate> expand(const std::vector<Key> &frontier, std::size_t first,
                              std::size_t last, const KeySet &visited) {
  std::vector<Candidate> out;
  for (std::size_t i = first; i < last; ++i) {
    const Key &k = frontier[i];
    for (std::size_t pos = 0; pos + 1 < k.size(); ++pos)
      for (Direction d : {Direction::Forward, Direction::Inverse}) {
        HurwitzMove mv{pos, d};
        Key next = moved(k, mv);
        if (!visited.contains(next))
          out.push_back({std::move(next), i, mv});
      }
  }
  return out;
}

unsigned resolve_workers(unsigned requested) {
  if (requested != 0)
    return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace

MoveCertificate OrbitReport::certificate_from_seed(std::size_t i) const {
  if (i >= nodes.size())
    throw PreconditionError("orbit node " + std::to_string(i) + " not stored");
  MoveCertificate cert;
  while (i != 0) {
    cert.moves.push_back(nodes[i].via);
    i = nodes[i].parent;
  }
  std::reverse(cert.moves.begin(), cert.moves.end());
  return cert;
}

std::vector<Factorization> OrbitReport::sorted_members() const {
  std::vector<Factorization> out;
  out.reserve(nodes.size());
  for (const OrbitNode &n : nodes)
    out.push_back(n.state);
  std::sort(out.begin(), out.end());
  return out;
}

OrbitReport enumerate_orbit(const Factorization &f, const OrbitOptions &options) {
  if (options.cap == 0)
    throw PreconditionError("orbit cap must be at least 1");
  const unsigned workers = resolve_workers(options.workers);

  OrbitReport report{f, 1, false, {}};
  KeySet visited;
  std::vector<Key> frontier{encode(f)};
  std::vector<std::size_t> frontier_nodes{0};
  visited.insert(frontier.front());
  if (options.keep_members)
    report.nodes.push_back({f, 0, {}});

  while (!frontier.empty() && !report.truncated) {
    // Generation reads `visited` only; merging below is serial and in
    // frontier order, so the outcome does not depend on `workers`.
    std::vector<std::vector<Candidate>> chunks;
    if (workers <= 1 || frontier.size() < 64) {
      chunks.push_back(expand(frontier, 0, frontier.size(), visited));
    } else {
      const std::size_t parts = std::min<std::size_t>(workers, frontier.size());
      chunks.resize(parts);
      std::vector<std::thread> pool;
      for (std::size_t p = 0; p < parts; ++p) {
        std::size_t first = frontier.size() * p / parts;
        std::size_t last = frontier.size() * (p + 1) / parts;
        pool.emplace_back([&, p, first, last] {
          chunks[p] = expand(frontier, first, last, visited);
        });
      }
      for (std::thread &t : pool)
        t.join();
    }

    std::vector<Key> next;
    std::vector<std::size_t> next_nodes;
    for (auto &chunk : chunks) {
      for (Candidate &c : chunk) {
        if (visited.contains(c.key))
          continue;
        if (visited.size() >= options.cap) {
          report.truncated = true;
          break;
        }
        visited.insert(c.key);
        if (options.keep_members) {
          next_nodes.push_back(report.nodes.size());
          report.nodes.push_back(
              {to_factorization(f.degree(), c.key), frontier_nodes[c.parent], c.via});
        }
        next.push_back(std::move(c.key));
      }
      if (report.truncated)
        break;
    }
    frontier = std::move(next);
    frontier_nodes = std::move(next_nodes);
    if (!options.keep_members)
      frontier_nodes.assign(frontier.size(), 0);
  }
  report.orbit_size = visited.size();
  return report;
}

void for_each_identity_factorization(
    Point n, std::size_t m, const std::function<void(const Factorization &)> &visit) {
  if (n < 2)
    throw PreconditionError("enumeration needs n >= 2");
  const std::uint64_t choices = std::uint64_t{n} * (n - 1) / 2;
  std::uint64_t cost = 1;
  for (std::size_t i = 1; i < m; ++i) {
    cost *= choices;
    if (cost > kEnumerationBudget)
      throw PreconditionError("enumerating n=" + std::to_string(n) + " m=" +
                              std::to_string(m) + " exceeds the search budget; " +
                              "try smaller parameters");
  }
  if (m == 0) {
    visit(Factorization(n));
    return;
  }

  std::vector<Factor> all;
  for (Point a = 1; a <= n; ++a)
    for (Point b = a + 1; b <= n; ++b)
      all.push_back(Factor::transposition(a, b));

  // Depth-first over the first m - 1 factors; the last factor is forced to
  // be the inverse of the prefix product, which must itself be a transposition.
  std::vector<Factor> chosen(m);
  std::vector<std::vector<Point>> images(m, std::vector<Point>(n + 1));
  for (Point x = 0; x <= n; ++x)
    images[0][x] = x;

  auto recurse = [&](auto &&self, std::size_t depth) -> void {
    const std::vector<Point> &p = images[depth];
    if (depth + 1 == m) {
      Point a = 0, b = 0;
      for (Point x = 1; x <= n; ++x) {
        if (p[x] == x)
          continue;
        if (a == 0)
          a = x;
        else if (b == 0)
          b = x;
        else
          return;
      }
      if (a == 0 || p[a] != b)
        return;
      chosen[depth] = Factor::transposition(a, b);
      visit(Factorization(n, chosen));
      return;
    }
    for (const Factor &t : all) {
      chosen[depth] = t;
      std::vector<Point> &q = images[depth + 1];
      for (Point x = 1; x <= n; ++x)
        q[x] = t.apply(p[x]);
      self(self, depth + 1);
    }
  };
  recurse(recurse, 0);
}

std::vector<Factorization> enumerate_identity_factorizations(Point n, std::size_t m) {
  std::vector<Factorization> out;
  for_each_identity_factorization(n, m, [&](const Factorization &f) { out.push_back(f); });
  return out;
}

bool PartitionReport::theorem_holds() const noexcept {
  if (any_truncated || mixed_orbits != 0)
    return false;
  return std::all_of(classes.begin(), classes.end(),
                     [](const SignatureClass &c) { return c.orbit_sizes.size() == 1; });
}

std::vector<std::size_t> PartitionReport::orbit_sizes() const {
  std::vector<std::size_t> sizes;
  for (const OrbitRecord &o : orbits)
    sizes.push_back(o.size);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

PartitionReport orbit_partition(Point n, std::size_t m, const OrbitOptions &options) {
  PartitionReport report;
  report.degree = n;
  report.length = m;

  std::vector<Factorization> all = enumerate_identity_factorizations(n, m);
  report.factorization_count = all.size();
  std::unordered_map<Key, std::size_t, KeyHash> orbit_of;

  OrbitOptions orbit_options = options;
  orbit_options.keep_members = true;
  std::map<ComponentSignature, std::vector<std::size_t>> by_signature;

  for (const Factorization &f : all) {
    if (orbit_of.contains(encode(f)))
      continue;
    const std::size_t id = report.orbits.size();
    OrbitReport orbit = enumerate_orbit(f, orbit_options);
    ComponentSignature sig = signature(f);
    bool mixed = false;
    for (const OrbitNode &node : orbit.nodes) {
      orbit_of.emplace(encode(node.state), id);
      if (!mixed && signature(node.state) != sig)
        mixed = true;
    }
    report.mixed_orbits += mixed;
    report.any_truncated |= orbit.truncated;
    by_signature[sig].push_back(orbit.orbit_size);
    report.orbits.push_back({std::move(sig), orbit.orbit_size, orbit.truncated});
  }
  for (auto &[sig, sizes] : by_signature) {
    std::sort(sizes.begin(), sizes.end());
    report.classes.push_back({sig, sizes});
  }
  return report;
}

std::string format_orbit_report(const OrbitReport &r, bool with_members) {
  std::ostringstream os;
  os << "seed: " << format_factorization(r.seed) << '\n'
     << "orbit_size: " << r.orbit_size << '\n'
     << "truncated: " << (r.truncated ? "true" : "false") << '\n';
  if (with_members && !r.nodes.empty())
    for (const Factorization &f : r.sorted_members())
      os << format_factorization(f) << '\n';
  return os.str();
}

std::string format_partition_report(const PartitionReport &r) {
  std::ostringstream os;
  os << "n=" << r.degree << " m=" << r.length << " factorizations=" << r.factorization_count
     << " orbits=" << r.orbits.size() << " signatures=" << r.classes.size() << '\n';
  for (std::size_t i = 0; i < r.orbits.size(); ++i) {
    const OrbitRecord &o = r.orbits[i];
    os << "orbit " << i << " size=" << o.size << " truncated=" << (o.truncated ? "true" : "false")
       << " signature=" << to_string(o.signature) << '\n';
  }
  os << "theorem: " << (r.theorem_holds() ? "holds" : "VIOLATED") << '\n';
  return os.str();
}

std::string partition_report_json(const PartitionReport &r) {
  nlohmann::json j;
  j["n"] = r.degree;
  j["m"] = r.length;
  j["factorizations"] = r.factorization_count;
  j["theorem_holds"] = r.theorem_holds();
  j["orbits"] = nlohmann::json::array();
  for (const OrbitRecord &o : r.orbits)
    j["orbits"].push_back(
        {{"signature", to_string(o.signature)}, {"size", o.size}, {"truncated", o.truncated}});
  return j.dump(2) + "\n";
}

std::string orbit_report_json(const OrbitReport &r) {
  nlohmann::json j;
  j["seed"] = format_factorization(r.seed);
  j["signature"] = to_string(signature(r.seed));
  j["size"] = r.orbit_size;
  j["truncated"] = r.truncated;
  return j.dump(2) + "\n";
}

} // namespace hurwitz
