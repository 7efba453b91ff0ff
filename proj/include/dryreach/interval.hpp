#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "dryreach/errors.hpp"

namespace dryreach {

using Vec = std::vector<double>;

// Closed interval [lo, hi]. Graph edge labels additionally require
// 0 <= lo <= hi < inf, which the graph validator enforces.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double l, double h) : lo(l), hi(h) {}

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool valid() const { return lo <= hi && std::isfinite(lo) && std::isfinite(hi); }
  bool contains(double x, double eps = 0.0) const { return x >= lo - eps && x <= hi + eps; }
  bool contains(const Interval& o, double eps = 0.0) const {
    return o.lo >= lo - eps && o.hi <= hi + eps;
  }
  bool intersects(const Interval& o, double eps = 0.0) const {
    return o.hi >= lo - eps && o.lo <= hi + eps;
  }
  Interval hull(const Interval& o) const {
    return Interval(std::min(lo, o.lo), std::max(hi, o.hi));
  }
  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

// True when the union of the (closed) intervals in `parts` covers `target`.
// Touching endpoints merge; `tol` absorbs float dust at the seams.
bool interval_union_covers(const Interval& target, std::vector<Interval> parts,
                           double tol = 1e-9);

// Axis-aligned box: one interval per state dimension.
struct Box {
  std::vector<Interval> dims;

  Box() = default;
  explicit Box(std::vector<Interval> d) : dims(std::move(d)) {}
  explicit Box(const Vec& point) {
    dims.reserve(point.size());
    for (double v : point) dims.emplace_back(v, v);
  }

  std::size_t size() const { return dims.size(); }
  bool empty() const { return dims.empty(); }

  Vec center() const {
    Vec c(dims.size());
    for (std::size_t i = 0; i < dims.size(); ++i) c[i] = dims[i].mid();
    return c;
  }

  // Euclidean distance from the center to any corner: the norm of the
  // half-width vector. This is the bloat seed radius r0.
  double corner_radius() const {
    double s = 0.0;
    for (const Interval& d : dims) {
      double h = 0.5 * d.width();
      s += h * h;
    }
    return std::sqrt(s);
  }

  double max_width() const {
    double w = 0.0;
    for (const Interval& d : dims) w = std::max(w, d.width());
    return w;
  }

  // Widest dimension; ties break toward the lowest index.
  std::size_t widest_dim() const {
    std::size_t best = 0;
    double w = -1.0;
    for (std::size_t i = 0; i < dims.size(); ++i)
      if (dims[i].width() > w) { w = dims[i].width(); best = i; }
    return best;
  }

  bool contains(const Vec& x, double eps = 0.0) const {
    if (x.size() != dims.size()) return false;
    for (std::size_t i = 0; i < dims.size(); ++i)
      if (!dims[i].contains(x[i], eps)) return false;
    return true;
  }

  bool contains(const Box& o, double eps = 0.0) const {
    if (o.dims.size() != dims.size()) return false;
    for (std::size_t i = 0; i < dims.size(); ++i)
      if (!dims[i].contains(o.dims[i], eps)) return false;
    return true;
  }

  Box hull(const Box& o) const {
    if (o.dims.size() != dims.size())
      fail(ErrorCode::DimensionMismatch, "box hull of mismatched dimensions");
    Box r = *this;
    for (std::size_t i = 0; i < dims.size(); ++i) r.dims[i] = dims[i].hull(o.dims[i]);
    return r;
  }

  void cover(const Vec& x) {
    if (dims.empty()) {
      for (double v : x) dims.emplace_back(v, v);
      return;
    }
    for (std::size_t i = 0; i < dims.size(); ++i) {
      dims[i].lo = std::min(dims[i].lo, x[i]);
      dims[i].hi = std::max(dims[i].hi, x[i]);
    }
  }

  // All dims widened by the same amount (the L-inf enclosure of a Euclidean ball).
  Box inflated(double r) const {
    Box b = *this;
    for (Interval& d : b.dims) { d.lo -= r; d.hi += r; }
    return b;
  }

  bool operator==(const Box& o) const { return dims == o.dims; }
};

// Split `b` along its widest dimension into `parts` equal slices.
// A box whose widest dimension has zero width is returned unchanged.
std::vector<Box> partition_box(const Box& b, int parts);

inline double euclidean_distance(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    fail(ErrorCode::DimensionMismatch, "distance of mismatched vectors");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

std::string format_interval(const Interval& iv);

}  // namespace dryreach
