#include "sgr/bigint.hpp"

#include <cctype>

#include "sgr/errors.hpp"

namespace sgr {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  // Each partial product is itself a binomial coefficient, so the division is exact.
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt from_decimal(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) throw ParseError("empty integer literal: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("not a decimal integer: '" + text + "'");
    }
  }
  BigInt magnitude(text.substr(start));
  return text[0] == '-' ? BigInt(-magnitude) : magnitude;
}

}  // namespace sgr
