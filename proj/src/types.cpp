#include "manetsim/types.hpp"

#include <cstdio>

namespace manetsim {

std::string format_seconds(SimTime t) {
  const char* sign = t.us < 0 ? "-" : "";
  const std::int64_t abs_us = t.us < 0 ? -t.us : t.us;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%s%lld.%06lld", sign,
                static_cast<long long>(abs_us / 1000000),
                static_cast<long long>(abs_us % 1000000));
  return buf;
}

}  // namespace manetsim
