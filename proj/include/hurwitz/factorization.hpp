#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/perm.hpp"

namespace hurwitz {

/// Either the identity element or a transposition (a b), stored with a < b.
class Factor {
public:
  /// The identity factor.
  constexpr Factor() noexcept = default;

  static constexpr Factor identity() noexcept { return Factor(); }

  /// (a b), normalized so that first() < second(). Throws
  /// PreconditionError if a == b or either point is 0.
  static Factor transposition(Point a, Point b);

  constexpr bool is_identity() const noexcept { return a_ == 0; }
  constexpr bool is_transposition() const noexcept { return a_ != 0; }
  constexpr Point first() const noexcept { return a_; }
  constexpr Point second() const noexcept { return b_; }

  constexpr bool touches(Point x) const noexcept {
    return a_ != 0 && (a_ == x || b_ == x);
  }

  /// Image of x under this factor.
  constexpr Point apply(Point x) const noexcept {
    if (x == a_) return b_;
    if (x == b_) return a_;
    return x;
  }

  /// Dense 32-bit code; identity is 0. Order-preserving w.r.t. operator<=>.
  constexpr std::uint32_t code() const noexcept { return (a_ << 16) | b_; }

  friend constexpr auto operator<=>(const Factor &, const Factor &) = default;

private:
  constexpr Factor(Point a, Point b) noexcept : a_(a), b_(b) {}

  Point a_ = 0;
  Point b_ = 0;
};

/// `by * f * by^-1`: f with its points relabeled through `by`.
Factor conjugate(const Factor &f, const Factor &by) noexcept;

std::string to_string(const Factor &f);

/// Degree n plus an ordered sequence of factors t_1 ... t_m.
class Factorization {
public:
  /// Throws PreconditionError if degree is 0, above 65535, or a
  /// transposition leaves {1..n}.
  explicit Factorization(Point degree, std::vector<Factor> factors = {});

  Point degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return factors_.size(); }
  bool empty() const noexcept { return factors_.empty(); }
  std::span<const Factor> factors() const noexcept { return factors_; }
  const Factor &operator[](std::size_t i) const { return factors_[i]; }

  std::size_t identity_count() const noexcept;
  bool all_transpositions() const noexcept;

  friend bool operator==(const Factorization &, const Factorization &) = default;
  friend auto operator<=>(const Factorization &, const Factorization &) = default;

private:
  Point degree_;
  std::vector<Factor> factors_;
};

/// Left-to-right product of all factors; identity for the empty factorization.
Permutation eval_product(const Factorization &f);

bool is_identity_product(const Factorization &f);

enum class Direction : std::uint8_t { Forward, Inverse };

/// R_k (Forward) or R_k^-1 (Inverse) acting on 0-based slots (k, k+1).
struct HurwitzMove {
  std::size_t position = 0;
  Direction direction = Direction::Forward;

  static HurwitzMove forward(std::size_t k) { return {k, Direction::Forward}; }
  static HurwitzMove inverse(std::size_t k) { return {k, Direction::Inverse}; }

  HurwitzMove inverted() const noexcept {
    return {position, direction == Direction::Forward ? Direction::Inverse
                                                      : Direction::Forward};
  }

  friend bool operator==(const HurwitzMove &, const HurwitzMove &) = default;
};

/// An ordered list of moves, positions relative to the evolving factorization.
struct MoveCertificate {
  std::vector<HurwitzMove> moves;

  std::size_t size() const noexcept { return moves.size(); }
  bool empty() const noexcept { return moves.empty(); }

  friend bool operator==(const MoveCertificate &, const MoveCertificate &) = default;
};

/// Applies one move in place on a factor span. Caller checks the range.
void apply_move_in_place(std::span<Factor> factors, const HurwitzMove &mv) noexcept;

/// Throws MoveRangeError unless 0 <= position <= m - 2.
Factorization apply_move(const Factorization &f, const HurwitzMove &mv);

/// Left fold of apply_move. On an out-of-range move throws MoveRangeError
/// whose move_index() names the offending entry.
Factorization apply_certificate(const Factorization &f, const MoveCertificate &cert);

/// Reversed, each direction flipped.
MoveCertificate invert_certificate(const MoveCertificate &cert);

// Text forms.

/// `F@k` or `I@k`.
std::string to_string(const HurwitzMove &mv);

/// Parses `F@k` / `I@k` (surrounding whitespace allowed).
HurwitzMove parse_move(std::string_view text);

/// One move per line, trailing newline after each.
std::string format_certificate(const MoveCertificate &cert);

/// One move per line; blank lines and lines starting with '#' are skipped.
MoveCertificate parse_certificate(std::string_view text);

/// `n=6; [(2,6),(1,4),e]`.
std::string format_factorization(const Factorization &f);

/// Whitespace-insensitive inverse of format_factorization; transpositions
/// are normalized. Throws ParseError (with offset) on malformed text and on
/// a == b or points outside {1..n}.
Factorization parse_factorization(std::string_view text);

} // namespace hurwitz
