#include "avreid/log.hpp"

#include <iostream>
#include <mutex>

namespace avreid {

namespace {
std::mutex g_mutex;
WarnHandler g_handler;
}  // namespace

void warn(const std::string& msg) {
  std::lock_guard<std::mutex> lock(g_mutex);
  if (g_handler) {
    g_handler(msg);
  } else {
    std::cerr << "[avreid] warning: " << msg << "\n";
  }
}

void set_warn_handler(WarnHandler handler) {
  std::lock_guard<std::mutex> lock(g_mutex);
  g_handler = std::move(handler);
}

}  // namespace avreid
