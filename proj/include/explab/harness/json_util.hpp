#pragma once

#include <span>

#include "json.hpp"

#include "explab/exactla/matrix.hpp"

namespace explab {

// Integers become JSON numbers while they fit in int64 and decimal strings
// otherwise; rationals are always "p/q" strings.
nlohmann::json to_json(const Integer& x);
nlohmann::json to_json(const Rational& x);
nlohmann::json to_json(std::span<const Integer> v);
nlohmann::json to_json(std::span<const Rational> v);
nlohmann::json to_json(const IntMatrix& m);

}  // namespace explab
