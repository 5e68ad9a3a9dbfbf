#include "hurwitz/braid.hpp"

#include <cstdlib>

#include "hurwitz/error.hpp"
#include "text_scanner.hpp"

namespace hurwitz {

BraidWord::BraidWord(Point degree, std::vector<int> letters)
    : degree_(degree), letters_(std::move(letters)) {
  if (degree_ < 2)
    throw PreconditionError("braid group degree must be at least 2");
  for (int g : letters_)
    if (g == 0 || static_cast<Point>(std::abs(g)) >= degree_)
      throw PreconditionError("generator " + std::to_string(g) + " outside B_" +
                              std::to_string(degree_));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int &g : out)
    g = -g;
  return BraidWord(degree_, std::move(out));
}

BraidWord operator*(const BraidWord &u, const BraidWord &v) {
  if (u.degree_ != v.degree_)
    throw PreconditionError("cannot concatenate braid words of different degree");
  std::vector<int> out = u.letters_;
  out.insert(out.end(), v.letters_.begin(), v.letters_.end());
  return BraidWord(u.degree_, std::move(out));
}

Permutation project_word(const BraidWord &w) {
  // images[x] tracks where x currently sits; sigma_i swaps the points that
  // currently occupy positions i and i+1 of the image.
  std::vector<Point> images(w.degree());
  std::vector<Point> where(w.degree() + 1);
  for (Point x = 1; x <= w.degree(); ++x) {
    images[x - 1] = x;
    where[x] = x;
  }
  for (int g : w.letters()) {
    const Point i = static_cast<Point>(std::abs(g));
    Point xa = where[i], xb = where[i + 1];
    images[xa - 1] = i + 1;
    images[xb - 1] = i;
    std::swap(where[i], where[i + 1]);
  }
  return Permutation::from_images(std::move(images));
}

Factorization project_tuple(const BraidTuple &t) {
  std::vector<Factor> factors;
  factors.reserve(t.words.size());
  for (std::size_t i = 0; i < t.words.size(); ++i) {
    if (t.words[i].degree() != t.degree)
      throw PreconditionError("word " + std::to_string(i) + " has degree " +
                              std::to_string(t.words[i].degree()) + ", tuple has " +
                              std::to_string(t.degree));
    Permutation p = project_word(t.words[i]);
    auto f = p.as_factor();
    if (!f)
      throw PreconditionError("word " + std::to_string(i) + " projects to " +
                              p.to_cycle_string() +
                              ", neither a transposition nor the identity");
    factors.push_back(*f);
  }
  return Factorization(t.degree, std::move(factors));
}

BraidTuple braid_hurwitz_move(const BraidTuple &t, const HurwitzMove &mv) {
  if (t.words.size() < 2 || mv.position > t.words.size() - 2)
    throw MoveRangeError("move " + to_string(mv) + " out of range for " +
                             std::to_string(t.words.size()) + " words",
                         0);
  BraidTuple out = t;
  const BraidWord &left = t.words[mv.position];
  const BraidWord &right = t.words[mv.position + 1];
  if (mv.direction == Direction::Forward) {
    out.words[mv.position] = left * right * left.inverse();
    out.words[mv.position + 1] = left;
  } else {
    out.words[mv.position] = right;
    out.words[mv.position + 1] = right.inverse() * left * right;
  }
  return out;
}

std::string format_braid_tuple(const BraidTuple &t) {
  std::string out = "n=" + std::to_string(t.degree) + "; [";
  for (std::size_t i = 0; i < t.words.size(); ++i) {
    if (i)
      out += " | ";
    const auto &letters = t.words[i].letters();
    for (std::size_t j = 0; j < letters.size(); ++j) {
      if (j)
        out += ' ';
      out += std::to_string(letters[j]);
    }
  }
  out += ']';
  return out;
}

BraidTuple parse_braid_tuple(std::string_view text) {
  detail::Scanner in(text);
  in.expect('n');
  in.expect('=');
  std::size_t degree_at = in.offset();
  std::int64_t n = in.integer();
  if (n < 2 || n > 0xFFFF)
    in.fail_at("braid degree must lie in 2..65535", degree_at);
  in.expect(';');
  in.expect('[');

  BraidTuple t;
  t.degree = static_cast<Point>(n);
  if (!in.accept(']')) {
    std::vector<int> letters;
    for (;;) {
      char c = in.peek();
      if (c == '|' || c == ']') {
        in.accept(c);
        t.words.emplace_back(t.degree, std::move(letters));
        letters.clear();
        if (c == ']')
          break;
        continue;
      }
      std::size_t at = in.offset();
      std::int64_t g = in.integer();
      if (g == 0 || g >= n || g <= -n)
        in.fail_at("generator " + std::to_string(g) + " outside B_" + std::to_string(n), at);
      letters.push_back(static_cast<int>(g));
    }
  }
  if (!in.at_end())
    in.fail("trailing characters after braid tuple");
  return t;
}

} // namespace hurwitz
