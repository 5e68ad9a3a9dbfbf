#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hurwitz {

/// A point of {1..n}. Points are 1-based throughout the library.
using Point = std::uint32_t;

class Factor;

/// A permutation of {1..n}. Composition is left-to-right: `compose(p, q)`
/// applies p first, then q.
class Permutation {
public:
  /// The identity of S_n.
  explicit Permutation(Point degree);

  /// From an image table: images[i - 1] is the image of point i. Throws
  /// PreconditionError unless the table is a bijection of {1..n}.
  static Permutation from_images(std::vector<Point> images);

  /// The transposition (a b) in S_n.
  static Permutation transposition(Point degree, Point a, Point b);

  /// The identity for an identity factor, (a b) otherwise.
  static Permutation from_factor(Point degree, const Factor &f);

  Point degree() const noexcept { return static_cast<Point>(images_.size()); }
  Point operator()(Point x) const { return images_[x - 1]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  /// Number of points moved.
  std::size_t support_size() const noexcept;

  /// The factor this permutation equals, if it is the identity or a
  /// transposition.
  std::optional<Factor> as_factor() const;

  /// Cycle notation with fixed points omitted, e.g. "(1 3 2)"; "()" for id.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;

private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// p then q. Throws PreconditionError on degree mismatch.
Permutation compose(const Permutation &p, const Permutation &q);

Permutation inverse(const Permutation &p);

} // namespace hurwitz
