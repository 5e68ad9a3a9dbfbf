#include "hurwitz/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hurwitz/error.hpp"
#include "text_scanner.hpp"

namespace hurwitz {

namespace {

constexpr Point kMaxDegree = 0xFFFF;

} // namespace

Factor Factor::transposition(Point a, Point b) {
  if (a == 0 || b == 0)
    throw PreconditionError("transposition points are 1-based");
  if (a == b)
    throw PreconditionError("transposition (" + std::to_string(a) + "," +
                            std::to_string(b) + ") needs two distinct points");
  if (a > kMaxDegree || b > kMaxDegree)
    throw PreconditionError("transposition point exceeds 65535");
  return a < b ? Factor(a, b) : Factor(b, a);
}

Factor conjugate(const Factor &f, const Factor &by) noexcept {
  if (f.is_identity() || by.is_identity())
    return f;
  Point a = by.apply(f.first());
  Point b = by.apply(f.second());
  return Factor::transposition(a, b);
}

std::string to_string(const Factor &f) {
  if (f.is_identity())
    return "e";
  return "(" + std::to_string(f.first()) + "," + std::to_string(f.second()) + ")";
}

Factorization::Factorization(Point degree, std::vector<Factor> factors)
    : degree_(degree), factors_(std::move(factors)) {
  if (degree_ == 0 || degree_ > kMaxDegree)
    throw PreconditionError("degree must lie in 1..65535");
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].is_transposition() && factors_[i].second() > degree_)
      throw PreconditionError("factor " + std::to_string(i) + " " +
                              to_string(factors_[i]) + " leaves {1.." +
                              std::to_string(degree_) + "}");
}

std::size_t Factorization::identity_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(factors_.begin(), factors_.end(),
                    [](const Factor &f) { return f.is_identity(); }));
}

bool Factorization::all_transpositions() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const Factor &f) { return f.is_transposition(); });
}

Permutation eval_product(const Factorization &f) {
  // images[x] = current image of x; where[y] = preimage of y.
  const Point n = f.degree();
  std::vector<Point> images(n + 1), where(n + 1);
  std::iota(images.begin(), images.end(), Point{0});
  std::iota(where.begin(), where.end(), Point{0});
  for (const Factor &t : f.factors()) {
    if (t.is_identity())
      continue;
    Point xa = where[t.first()], xb = where[t.second()];
    images[xa] = t.second();
    images[xb] = t.first();
    std::swap(where[t.first()], where[t.second()]);
  }
  images.erase(images.begin());
  return Permutation::from_images(std::move(images));
}

bool is_identity_product(const Factorization &f) {
  return eval_product(f).is_identity();
}

void apply_move_in_place(std::span<Factor> factors, const HurwitzMove &mv) noexcept {
  Factor &left = factors[mv.position];
  Factor &right = factors[mv.position + 1];
  if (mv.direction == Direction::Forward) {
    Factor moved = left;
    left = conjugate(right, moved);
    right = moved;
  } else {
    Factor moved = right;
    right = conjugate(left, moved);
    left = moved;
  }
}

namespace {

void check_range(std::size_t length, const HurwitzMove &mv, std::size_t index) {
  if (length < 2 || mv.position > length - 2)
    throw MoveRangeError("move " + std::to_string(index) + " (" + to_string(mv) +
                             ") out of range for " + std::to_string(length) +
                             " factors",
                         index);
}

} // namespace

Factorization apply_move(const Factorization &f, const HurwitzMove &mv) {
  check_range(f.size(), mv, 0);
  std::vector<Factor> factors(f.factors().begin(), f.factors().end());
  apply_move_in_place(factors, mv);
  return Factorization(f.degree(), std::move(factors));
}

Factorization apply_certificate(const Factorization &f, const MoveCertificate &cert) {
  std::vector<Factor> factors(f.factors().begin(), f.factors().end());
  for (std::size_t i = 0; i < cert.moves.size(); ++i) {
    check_range(factors.size(), cert.moves[i], i);
    apply_move_in_place(factors, cert.moves[i]);
  }
  return Factorization(f.degree(), std::move(factors));
}

MoveCertificate invert_certificate(const MoveCertificate &cert) {
  MoveCertificate out;
  out.moves.reserve(cert.moves.size());
  for (auto it = cert.moves.rbegin(); it != cert.moves.rend(); ++it)
    out.moves.push_back(it->inverted());
  return out;
}

std::string to_string(const HurwitzMove &mv) {
  return (mv.direction == Direction::Forward ? "F@" : "I@") + std::to_string(mv.position);
}

HurwitzMove parse_move(std::string_view text) {
  detail::Scanner in(text);
  HurwitzMove mv;
  char c = in.peek();
  if (c == 'F' || c == 'f')
    mv.direction = Direction::Forward;
  else if (c == 'I' || c == 'i')
    mv.direction = Direction::Inverse;
  else
    in.fail("expected 'F' or 'I'");
  in.accept(c);
  in.expect('@');
  std::size_t at = in.offset();
  std::int64_t k = in.integer();
  if (k < 0)
    in.fail_at("move position must be non-negative", at);
  mv.position = static_cast<std::size_t>(k);
  if (!in.at_end())
    in.fail("trailing characters after move");
  return mv;
}

std::string format_certificate(const MoveCertificate &cert) {
  std::string out;
  for (const HurwitzMove &mv : cert.moves) {
    out += to_string(mv);
    out += '\n';
  }
  return out;
}

MoveCertificate parse_certificate(std::string_view text) {
  MoveCertificate cert;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos)
      line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      try {
        cert.moves.push_back(parse_move(line));
      } catch (const ParseError &e) {
        throw ParseError("certificate line " + std::to_string(cert.moves.size() + 1) +
                             ": " + e.what(),
                         line_start + e.position());
      }
    }
    line_start = line_end + 1;
  }
  return cert;
}

std::string format_factorization(const Factorization &f) {
  std::string out = "n=" + std::to_string(f.degree()) + "; [";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i)
      out += ',';
    out += to_string(f[i]);
  }
  out += ']';
  return out;
}

Factorization parse_factorization(std::string_view text) {
  detail::Scanner in(text);
  in.expect('n');
  in.expect('=');
  std::size_t degree_at = in.offset();
  std::int64_t n = in.integer();
  if (n < 1 || n > kMaxDegree)
    in.fail_at("degree must lie in 1..65535", degree_at);
  in.expect(';');
  in.expect('[');

  std::vector<Factor> factors;
  auto point = [&]() {
    std::size_t at = in.offset();
    std::int64_t x = in.integer();
    if (x < 1 || x > n)
      in.fail_at("point " + std::to_string(x) + " outside {1.." + std::to_string(n) + "}",
                 at);
    return static_cast<Point>(x);
  };

  if (!in.accept(']')) {
    do {
      if (in.accept('e')) {
        factors.push_back(Factor::identity());
        continue;
      }
      std::size_t at = in.offset();
      in.expect('(');
      Point a = point();
      in.expect(',');
      Point b = point();
      in.expect(')');
      if (a == b)
        in.fail_at("transposition needs two distinct points", at);
      factors.push_back(Factor::transposition(a, b));
    } while (in.accept(','));
    in.expect(']');
  }
  if (!in.at_end())
    in.fail("trailing characters after factorization");
  return Factorization(static_cast<Point>(n), std::move(factors));
}

} // namespace hurwitz
