#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/factorization.hpp"
#include "hurwitz/perm.hpp"

namespace hurwitz {

/// A free word in sigma_1 .. sigma_{n-1}: letter +i is sigma_i, -i its
/// inverse. Words are never reduced.
class BraidWord {
public:
  /// Throws PreconditionError unless 1 <= |g| <= n - 1 for every letter.
  BraidWord(Point degree, std::vector<int> letters);

  Point degree() const noexcept { return degree_; }
  const std::vector<int> &letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }

  /// Reverse with negated letters.
  BraidWord inverse() const;

  friend BraidWord operator*(const BraidWord &u, const BraidWord &v);
  friend bool operator==(const BraidWord &, const BraidWord &) = default;

private:
  Point degree_;
  std::vector<int> letters_;
};

struct BraidTuple {
  Point degree = 2;
  std::vector<BraidWord> words;
};

/// phi: sigma_i -> (i i+1), applied left to right.
Permutation project_word(const BraidWord &w);

/// Throws PreconditionError naming the first word whose projection is
/// neither a transposition nor the identity.
Factorization project_tuple(const BraidTuple &t);

/// Word-level Hurwitz move: Forward maps (b_k, b_k+1) to
/// (b_k b_k+1 b_k^-1, b_k). Throws MoveRangeError when out of range.
BraidTuple braid_hurwitz_move(const BraidTuple &t, const HurwitzMove &mv);

/// `n=3; [1 2 -1 | 1]`
std::string format_braid_tuple(const BraidTuple &t);
BraidTuple parse_braid_tuple(std::string_view text);

} // namespace hurwitz
