#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "sgr/bigint.hpp"
#include "sgr/polyring.hpp"

namespace sgr {

// JSON schemas
//   Polynomial   ["1", "3", "6"]          decimal strings, index = degree, zero = []
//   BiSeries     [["1","1"], ["0","1"]]   outer index = power of t
//   small vectors (points, tableaux, partitions, permutations) as integer arrays
using Json = nlohmann::ordered_json;

Json to_json(const BigInt& value);
Json to_json(const Polynomial& p);
Json to_json(const BiSeries& s);
Json to_json(std::span<const std::uint32_t> values);

/// Throws ParseError on schema violations.
BigInt bigint_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
BiSeries biseries_from_json(const Json& j);
std::vector<std::uint32_t> uint_vector_from_json(const Json& j);

}  // namespace sgr
