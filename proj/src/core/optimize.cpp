#include "core/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "core/errors.hpp"

namespace zalcman {

namespace {

void validate(const GridSpec& spec) {
  if (spec.resolution < 8) throw argument_error("grid resolution must be >= 8");
  if (spec.refinement_rounds < 0) throw argument_error("refinement rounds must be >= 0");
  if (!(spec.zoom > 1.0)) throw argument_error("zoom must exceed 1");
}

double lattice(double lo, double hi, int i, int count) {
  return std::lerp(lo, hi, static_cast<double>(i) / (count - 1));
}

constexpr double kCollarFraction = 1e-3;
constexpr double kSlopeSafety = 1.5;
constexpr int kSubPoints = 17;

}  // namespace

MaxResult grid_max(const std::function<double(double, double)>& fn, Rect d,
                   GridSpec spec) {
  validate(spec);
  if (!(d.x_lo < d.x_hi) || !(d.y_lo < d.y_hi))
    throw argument_error("grid_max: degenerate rectangle");

  const int m = spec.resolution;
  const double hx = (d.x_hi - d.x_lo) / (m - 1);
  const double hy = (d.y_hi - d.y_lo) / (m - 1);
  const double collar_x = kCollarFraction * (d.x_hi - d.x_lo);
  const double collar_y = kCollarFraction * (d.y_hi - d.y_lo);

  double best = -std::numeric_limits<double>::infinity();
  double bx = d.x_lo, by = d.y_lo;
  double slope = 0.0;

  // x-major scan: first strictly-greater hit is the lexicographically
  // smallest location among ties.
  std::vector<double> prev_col(m);
  for (int i = 0; i < m; ++i) {
    const double x = lattice(d.x_lo, d.x_hi, i, m);
    const bool x_inner = x - d.x_lo >= collar_x && d.x_hi - x >= collar_x;
    double below = 0.0;
    for (int j = 0; j < m; ++j) {
      const double y = lattice(d.y_lo, d.y_hi, j, m);
      const double v = fn(x, y);
      if (v > best) {
        best = v;
        bx = x;
        by = y;
      }
      const bool y_inner = y - d.y_lo >= collar_y && d.y_hi - y >= collar_y;
      if (x_inner && y_inner) {
        if (j > 0) slope = std::max(slope, std::fabs(v - below) / hy);
        if (i > 0) slope = std::max(slope, std::fabs(v - prev_col[j]) / hx);
      }
      below = v;
      prev_col[j] = v;
    }
  }

  double half_x = hx, half_y = hy;
  for (int round = 0; round < spec.refinement_rounds; ++round) {
    const double cx = bx, cy = by;
    const double xl = std::max(d.x_lo, cx - half_x), xh = std::min(d.x_hi, cx + half_x);
    const double yl = std::max(d.y_lo, cy - half_y), yh = std::min(d.y_hi, cy + half_y);
    for (int i = 0; i < kSubPoints; ++i) {
      const double x = lattice(xl, xh, i, kSubPoints);
      for (int j = 0; j < kSubPoints; ++j) {
        const double y = lattice(yl, yh, j, kSubPoints);
        const double v = fn(x, y);
        if (v > best) {
          best = v;
          bx = x;
          by = y;
        }
      }
    }
    half_x /= spec.zoom;
    half_y /= spec.zoom;
  }

  MaxResult r;
  r.value = best;
  r.x = bx;
  r.y = by;
  r.certified_gap = kSlopeSafety * slope * 0.5 * std::hypot(hx, hy);
  return r;
}

EdgeMaxResult edge_max(const std::function<double(double)>& fn, double lo, double hi,
                       GridSpec spec) {
  validate(spec);
  if (!(lo < hi)) throw argument_error("edge_max: degenerate interval");

  const int m = spec.resolution;
  const double h = (hi - lo) / (m - 1);
  const double collar = kCollarFraction * (hi - lo);

  double best = -std::numeric_limits<double>::infinity();
  double bx = lo;
  double slope = 0.0;
  double prev = 0.0;
  for (int i = 0; i < m; ++i) {
    const double x = lattice(lo, hi, i, m);
    const double v = fn(x);
    if (v > best) {
      best = v;
      bx = x;
    }
    if (i > 0 && x - lo >= collar && hi - x >= collar)
      slope = std::max(slope, std::fabs(v - prev) / h);
    prev = v;
  }

  double half = h;
  for (int round = 0; round < spec.refinement_rounds; ++round) {
    const double c = bx;
    const double xl = std::max(lo, c - half), xh = std::min(hi, c + half);
    for (int i = 0; i < 2 * kSubPoints + 1; ++i) {
      const double x = lattice(xl, xh, i, 2 * kSubPoints + 1);
      const double v = fn(x);
      if (v > best) {
        best = v;
        bx = x;
      }
    }
    half /= spec.zoom;
  }

  EdgeMaxResult r;
  r.value = best;
  r.x = bx;
  r.certified_gap = kSlopeSafety * slope * 0.5 * h;
  return r;
}

}  // namespace zalcman
