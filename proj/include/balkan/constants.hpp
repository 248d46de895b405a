#pragma once

#include <string>

#include "balkan/hpreal.hpp"

namespace balkan {

enum class ConstantName { CatalanG, Log2, Pi };

ConstantName parse_constant_name(const std::string& name);
std::string constant_name_string(ConstantName name);

constexpr long kConstantDigitsCap = 20000;

/// G, log 2 or pi to `digits` places.  Values are cached; concurrent callers
/// share the cache.  Throws DomainError above kConstantDigitsCap.
HPReal constant_value(ConstantName name, long digits);
HPReal constant_value(const std::string& name, long digits);

}  // namespace balkan
