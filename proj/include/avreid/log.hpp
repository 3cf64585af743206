#pragma once

#include <functional>
#include <string>

namespace avreid {

using WarnHandler = std::function<void(const std::string&)>;

// Warnings go to stderr by default; tests install a capturing handler.
void warn(const std::string& msg);
void set_warn_handler(WarnHandler handler);

}  // namespace avreid
