// Copyright 2026 The roadchange Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROADCHANGE_GEOMETRY_HPP_
#define ROADCHANGE_GEOMETRY_HPP_

#include <cmath>
#include <span>

namespace roadchange {

// A point in the working planar frame (meters, y grows northwards).
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

inline Point midpoint(Point a, Point b) {
  return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
}

// Point on segment [a, b] nearest to p. Degenerate segments collapse to a.
inline Point closest_point_on_segment(Point p, Point a, Point b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return a;
  double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
  if (t < 0.0) t = 0.0;
  if (t > 1.0) t = 1.0;
  return {a.x + t * dx, a.y + t * dy};
}

inline double point_segment_distance(Point p, Point a, Point b) {
  return distance(p, closest_point_on_segment(p, a, b));
}

// Distance from p to a polyline. An empty polyline is infinitely far away; a
// single point is treated as a degenerate segment.
double point_polyline_distance(Point p, std::span<const Point> polyline);

// Sum of consecutive point distances.
double polyline_length(std::span<const Point> polyline);

}  // namespace roadchange

#endif  // ROADCHANGE_GEOMETRY_HPP_
