#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hvac::sim {

// Binary occupancy per (zone, timestep).
class OccupancySchedule {
 public:
  OccupancySchedule() = default;
  OccupancySchedule(std::size_t zones, std::size_t steps)
      : zones_(zones), steps_(steps), occupied_(zones * steps, 0) {}

  std::size_t zones() const { return zones_; }
  std::size_t steps() const { return steps_; }
  bool at(std::size_t zone, std::size_t t) const { return occupied_[t * zones_ + zone] != 0; }
  void set(std::size_t zone, std::size_t t, bool value) { occupied_[t * zones_ + zone] = value ? 1 : 0; }
  // All zones at step t, contiguous.
  const std::uint8_t* row(std::size_t t) const { return occupied_.data() + t * zones_; }

  bool operator==(const OccupancySchedule&) const = default;

 private:
  std::size_t zones_ = 0;
  std::size_t steps_ = 0;
  std::vector<std::uint8_t> occupied_;
};

// Weekday 08:00-18:00 office profile with per-zone, per-day arrival and
// departure jitter of up to an hour and a small chance of an empty day.
OccupancySchedule generate_occupancy(std::uint64_t seed, std::size_t zones, std::size_t steps,
                                     int start_month);

}  // namespace hvac::sim
