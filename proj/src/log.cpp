#include "ridgegap/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

namespace ridgegap::log {

namespace {

std::mutex g_mutex;

void emit(const char* tag, std::string_view msg) {
  std::lock_guard lock(g_mutex);
  std::cerr << "ridgegap " << tag << ": " << msg << '\n';
}

}  // namespace

Level level() {
  static const Level lvl = [] {
    const char* env = std::getenv("RIDGEGAP_LOG");
    const std::string v = env ? env : "";
    if (v == "quiet") return Level::Quiet;
    if (v == "debug") return Level::Debug;
    return Level::Info;
  }();
  return lvl;
}

void info(std::string_view msg) {
  if (level() >= Level::Info) emit("info", msg);
}

void debug(std::string_view msg) {
  if (level() >= Level::Debug) emit("debug", msg);
}

void warn(std::string_view msg) {
  if (level() != Level::Quiet) emit("warning", msg);
}

}  // namespace ridgegap::log
