#include "config.hpp"

#include <cstdlib>
#include <string>

namespace varkit {

namespace {

long long env_ll(const char* name, long long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    long long parsed = std::stoll(v);
    return parsed > 0 ? parsed : fallback;
  } catch (...) {
    return fallback;
  }
}

Config load() {
  Config c;
  c.max_group = static_cast<long>(env_ll("VARKIT_MAX_GROUP", c.max_group));
  c.max_degree = static_cast<int>(env_ll("VARKIT_MAX_DEGREE", c.max_degree));
  c.max_assign = env_ll("VARKIT_MAX_ASSIGN", c.max_assign);
  return c;
}

} // namespace

int Config::cutoff_cap(int letters) const {
  if (letters <= 1) return 16;
  if (letters == 2) return 8;
  if (letters == 3) return 6;
  return 4;
}

Config& config() {
  static Config instance = load();
  return instance;
}

} // namespace varkit
