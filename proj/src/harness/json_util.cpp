#include "explab/harness/json_util.hpp"

namespace explab {

nlohmann::json to_json(const Integer& x) {
  if (x.is_small()) return x.small_value();
  return x.to_string();
}

nlohmann::json to_json(const Rational& x) { return x.to_string(); }

nlohmann::json to_json(std::span<const Integer> v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

nlohmann::json to_json(std::span<const Rational> v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

nlohmann::json to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

}  // namespace explab
