#pragma once

#include <cmath>

namespace urban {

struct Position {
  double x = 0.0;
  double y = 0.0;
};

struct Area {
  double width = 0.0;
  double height = 0.0;

  bool contains(Position p) const {
    return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
  }
};

inline double distance(Position a, Position b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Unit-disk connectivity, boundary inclusive.
inline bool in_range(Position a, Position b, double range) {
  return distance(a, b) <= range;
}

}  // namespace urban
