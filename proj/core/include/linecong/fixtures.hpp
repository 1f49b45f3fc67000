#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "linecong/scene.hpp"

namespace linecong {

/// Names of the built-in scenes, in a fixed order.
const std::vector<std::string>& fixture_names();

bool is_fixture(std::string_view name);

/// Source text of a built-in scene in the congruence-file format.
/// Throws std::invalid_argument for an unknown name.
const std::string& fixture_source(std::string_view name);

CongruenceScene fixture(std::string_view name);

}  // namespace linecong
