#include "sgr/serialize.hpp"

#include <limits>

#include "sgr/errors.hpp"

namespace sgr {

Json to_json(const BigInt& value) { return to_decimal(value); }

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_decimal(c));
  return out;
}

Json to_json(const BiSeries& s) {
  Json out = Json::array();
  for (std::size_t i = 0; i <= s.max_t(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j <= s.max_z(); ++j) row.push_back(to_decimal(s.at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(std::span<const std::uint32_t> values) {
  Json out = Json::array();
  for (auto v : values) out.push_back(v);
  return out;
}

BigInt bigint_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a decimal string, got " + j.dump());
  return from_decimal(j.get<std::string>());
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array");
  std::vector<BigInt> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(bigint_from_json(c));
  return Polynomial(std::move(coeffs));
}

BiSeries biseries_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("series must be a nonempty JSON array of rows");
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) throw ParseError("series rows must be nonempty arrays");
  BiSeries s(j.size() - 1, cols - 1);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError("series rows must all have the same length");
    for (std::size_t k = 0; k < cols; ++k) s.at(i, k) = bigint_from_json(j[i][k]);
  }
  return s;
}

std::vector<std::uint32_t> uint_vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an integer array");
  std::vector<std::uint32_t> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max()) {
      throw ParseError("expected a nonnegative 32-bit integer, got " + v.dump());
    }
    out.push_back(v.get<std::uint32_t>());
  }
  return out;
}

}  // namespace sgr
