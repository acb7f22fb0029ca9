#pragma once

#include "fullow/types.hpp"

#include <span>
#include <string_view>

namespace fullow::detail {

struct ScalableDef {
  std::string_view name;
  double (*value)(const Vector&);
  Vector (*start)(int n);
  bool (*accepts)(int n);
};

/// The twelve variable-dimension classics, by upper-case name.
const ScalableDef* find_scalable(std::string_view upper_name);
std::span<const ScalableDef> scalable_defs();

}  // namespace fullow::detail
