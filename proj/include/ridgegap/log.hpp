#pragma once

#include <string_view>

namespace ridgegap::log {

enum class Level { Quiet = 0, Info = 1, Debug = 2 };

/// From RIDGEGAP_LOG (quiet | info | debug); info when unset or unrecognized.
Level level();

void info(std::string_view msg);
void debug(std::string_view msg);
/// Printed unless the level is quiet.
void warn(std::string_view msg);

}  // namespace ridgegap::log
