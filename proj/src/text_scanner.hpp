#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "hurwitz/error.hpp"

namespace hurwitz::detail {

/// Minimal cursor over a text buffer for the hand-written grammars.
class Scanner {
public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t offset() const noexcept { return pos_; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  std::int64_t integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::string_view digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+')
      digits.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      pos_ = start;
      fail("expected an integer");
    }
    return value;
  }

  [[noreturn]] void fail(const std::string &what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string &what, std::size_t at) const {
    throw ParseError(what, at);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace hurwitz::detail
