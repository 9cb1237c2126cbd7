#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

namespace manetsim {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = 0xffffffffu;

// Virtual time on a fixed microsecond grid. Integer ticks keep event
// ordering and trace bytes identical across platforms.
struct SimTime {
  std::int64_t us = 0;

  static constexpr SimTime from_us(std::int64_t v) { return SimTime{v}; }
  static SimTime from_seconds(double s) {
    return SimTime{static_cast<std::int64_t>(std::llround(s * 1e6))};
  }
  double seconds() const { return static_cast<double>(us) * 1e-6; }

  friend constexpr bool operator==(SimTime a, SimTime b) = default;
  friend constexpr auto operator<=>(SimTime a, SimTime b) = default;
  friend constexpr SimTime operator+(SimTime a, SimTime b) { return SimTime{a.us + b.us}; }
  friend constexpr SimTime operator-(SimTime a, SimTime b) { return SimTime{a.us - b.us}; }
};

// "12.345678" with exactly six fractional digits, integer arithmetic only.
std::string format_seconds(SimTime t);

}  // namespace manetsim
