#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sgr {

using BigInt = boost::multiprecision::cpp_int;

// Exact C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

std::string to_decimal(const BigInt& value);

// Throws ParseError on anything but an optionally signed run of decimal digits.
BigInt from_decimal(const std::string& text);

}  // namespace sgr
