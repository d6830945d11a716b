#pragma once

#include <functional>

namespace zalcman {

/// Lattice density and refinement schedule for the brute-force oracles.
struct GridSpec {
  int resolution = 512;       // points per axis, endpoints included
  int refinement_rounds = 6;  // zoom rounds around the incumbent
  double zoom = 8.0;          // window shrink factor per round
};

struct Rect {
  double x_lo, x_hi, y_lo, y_hi;
};

struct MaxResult {
  double value;
  double x, y;
  /// Upper estimate of how far the true maximum can sit above `value`,
  /// from a sampled slope bound on the lattice. The slope is sampled away
  /// from a 1e-3 boundary collar; edges are the edge_max oracle's job.
  double certified_gap;
};

/// Dense lattice scan plus refinement. Deterministic: ties break toward the
/// lexicographically smallest (x, y); the value never decreases across rounds.
MaxResult grid_max(const std::function<double(double, double)>& fn, Rect domain,
                   GridSpec spec = {});

struct EdgeMaxResult {
  double value;
  double x;
  double certified_gap;
};

/// One-dimensional analogue of grid_max on [lo, hi].
EdgeMaxResult edge_max(const std::function<double(double)>& fn, double lo, double hi,
                       GridSpec spec = {});

}  // namespace zalcman
