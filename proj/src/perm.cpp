#include "hurwitz/perm.hpp"

#include <numeric>
#include <sstream>

#include "hurwitz/error.hpp"
#include "hurwitz/factorization.hpp"

namespace hurwitz {

Permutation::Permutation(Point degree) : images_(degree) {
  if (degree == 0)
    throw PreconditionError("permutation degree must be at least 1");
  std::iota(images_.begin(), images_.end(), Point{1});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  if (images.empty())
    throw PreconditionError("permutation degree must be at least 1");
  std::vector<bool> seen(images.size() + 1, false);
  for (Point x : images) {
    if (x == 0 || x > images.size() || seen[x])
      throw PreconditionError("image table is not a bijection of {1..n}");
    seen[x] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(Point degree, Point a, Point b) {
  if (a == 0 || b == 0 || a > degree || b > degree || a == b)
    throw PreconditionError("transposition (" + std::to_string(a) + "," +
                            std::to_string(b) + ") invalid in S_" +
                            std::to_string(degree));
  Permutation p(degree);
  p.images_[a - 1] = b;
  p.images_[b - 1] = a;
  return p;
}

Permutation Permutation::from_factor(Point degree, const Factor &f) {
  if (f.is_identity())
    return Permutation(degree);
  return transposition(degree, f.first(), f.second());
}

bool Permutation::is_identity() const noexcept {
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i + 1)
      return false;
  return true;
}

std::size_t Permutation::support_size() const noexcept {
  std::size_t moved = 0;
  for (Point i = 0; i < images_.size(); ++i)
    moved += images_[i] != i + 1;
  return moved;
}

std::optional<Factor> Permutation::as_factor() const {
  Point a = 0, b = 0;
  std::size_t moved = 0;
  for (Point x = 1; x <= degree(); ++x) {
    if ((*this)(x) == x)
      continue;
    if (++moved > 2)
      return std::nullopt;
    (a == 0 ? a : b) = x;
  }
  if (moved == 0)
    return Factor::identity();
  if ((*this)(a) != b)
    return std::nullopt;
  return Factor::transposition(a, b);
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> done(images_.size() + 1, false);
  bool any = false;
  for (Point start = 1; start <= degree(); ++start) {
    if (done[start] || (*this)(start) == start)
      continue;
    any = true;
    os << '(';
    Point x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first)
        os << ' ';
      os << x;
      first = false;
      x = (*this)(x);
    }
    os << ')';
  }
  if (!any)
    os << "()";
  return os.str();
}

Permutation compose(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw PreconditionError("cannot compose permutations of degree " +
                            std::to_string(p.degree()) + " and " +
                            std::to_string(q.degree()));
  std::vector<Point> images(p.degree());
  for (Point x = 1; x <= p.degree(); ++x)
    images[x - 1] = q(p(x));
  return Permutation::from_images(std::move(images));
}

Permutation inverse(const Permutation &p) {
  std::vector<Point> images(p.degree());
  for (Point x = 1; x <= p.degree(); ++x)
    images[p(x) - 1] = x;
  return Permutation::from_images(std::move(images));
}

} // namespace hurwitz
