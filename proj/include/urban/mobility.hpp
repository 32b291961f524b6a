#pragma once

#include <optional>
#include <stdexcept>

#include "urban/geometry.hpp"
#include "urban/rng.hpp"
#include "urban/types.hpp"

namespace urban {

enum class MobilityKind { Static, RandomWaypoint };

struct MobilityModelConfig {
  MobilityKind kind = MobilityKind::Static;
  double v_min = 1.0;   // m/s
  double v_max = 1.0;   // m/s
  double pause = 0.0;   // seconds at each waypoint

  void validate() const {
    if (kind == MobilityKind::RandomWaypoint && !(0.0 < v_min && v_min <= v_max))
      throw std::invalid_argument("mobility: requires 0 < v_min <= v_max");
    if (pause < 0.0) throw std::invalid_argument("mobility: pause must be >= 0");
  }
};

struct MovementLeg {
  Position from;
  Position to;
  double speed = 0.0;
  SimTime depart_at = 0.0;

  SimTime arrive_at() const {
    const double d = distance(from, to);
    return speed > 0.0 ? depart_at + d / speed : depart_at;
  }
};

// Position state of one node. Waypoints and speeds come from the mobility rng
// stream; positions in between are interpolated on demand, so there is no
// tick rate to configure.
class NodeMobility {
 public:
  void init(Position start, const MobilityModelConfig& cfg) {
    cfg.validate();
    anchor_ = start;
    cfg_ = cfg;
    leg_.reset();
  }

  const MobilityModelConfig& config() const { return cfg_; }
  const std::optional<MovementLeg>& leg() const { return leg_; }

  Position position_at(SimTime t) const {
    if (!leg_) return anchor_;
    const MovementLeg& l = *leg_;
    if (t <= l.depart_at) return l.from;
    const SimTime arr = l.arrive_at();
    if (t >= arr) return l.to;
    const double f = (t - l.depart_at) / (arr - l.depart_at);
    return Position{l.from.x + (l.to.x - l.from.x) * f, l.from.y + (l.to.y - l.from.y) * f};
  }

  // Draw order is fixed (dest.x, dest.y, speed) so waypoint sequences are
  // reproducible per stream.
  const MovementLeg& begin_leg(const Area& area, RngStream& rng, SimTime now) {
    Position dest{rng.uniform(0.0, area.width), rng.uniform(0.0, area.height)};
    const double speed = rng.uniform(cfg_.v_min, cfg_.v_max);
    leg_ = MovementLeg{anchor_, dest, speed, now};
    return *leg_;
  }

  void arrive() {
    if (leg_) {
      anchor_ = leg_->to;
      leg_.reset();
    }
  }

  // Pins the node at p: teleports in tests, freezes position at death.
  void pin(Position p) {
    anchor_ = p;
    leg_.reset();
  }

 private:
  MobilityModelConfig cfg_;
  Position anchor_;
  std::optional<MovementLeg> leg_;
};

}  // namespace urban
