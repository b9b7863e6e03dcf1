#pragma once

#include <vector>

#include "critline/complex.hpp"

namespace critline {

// Interval on the critical line with a strict sign change of xi(1/2 + it)
// across it -- the constructive witness that a zero lies inside.
struct Bracket {
  double t_lo = 0.0;
  double t_hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;
};

struct ZeroRecord {
  double t = 0.0;         // refined ordinate
  double residual = 0.0;  // |xi(1/2 + it)| at convergence
  int iterations = 0;
  Bracket bracket;
};

struct Region {
  double re_lo = 0.0;
  double re_hi = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;
};

// Strip-scan summary.  Magnitudes are completion-normalized: the reported
// field is |xi(z)| divided by |z(1-z)gamma(z/2)pi^{-z/2}/2|, which removes
// the gamma-driven exponential decay in t so one threshold is meaningful
// across the whole grid (see README).
struct GridReport {
  Region region;
  double step = 0.0;
  double min_abs_xi_offline = 0.0;  // min over cells with |re - 0.5| >= margin
  Complex argmin_point;             // grid argmin over all cells
  double max_sym_residual = 0.0;
  std::vector<Complex> candidate_cells;
};

enum class LocusKind { V_ZERO, W_ZERO, V_EQ_W };

struct CurveSegment {
  LocusKind locus_kind = LocusKind::V_ZERO;
  std::vector<Complex> points;
};

// Level-curve extraction output: the traced polylines for the three locus
// kinds plus the zero-root candidates where a V_ZERO and a W_ZERO segment
// pass within one grid cell of each other.
struct CurveReport {
  std::vector<CurveSegment> segments;
  std::vector<Complex> candidates;
};

enum class ScanFunction { EXP, COS, GAMMA, XI };

/// Samples xi(1/2 + it) at t_lo, t_lo + step, ... and returns one Bracket
/// per sign change at this sampling.  Exact-zero samples (|v| < 1e-13) are
/// nudged by step/100 and resampled.  0 <= t_lo < t_hi <= 60, step <= 0.5.
std::vector<Bracket> bracket_line(double t_lo, double t_hi, double step);

/// Bisects the bracket until its width is below 1e-12 (at most 60 steps)
/// and certifies the result by |xi(1/2 + it)| < 1e-9, else ConvergenceError.
ZeroRecord refine(const Bracket& bracket);

/// Evaluates the normalized |xi| and the symmetry residuals on the grid.
/// threads = 0 means all hardware threads; the report is bitwise identical
/// for every thread count.  When raster is non-null it receives the whole
/// field row-major (t rows outward, re columns inward).
GridReport scan_strip(const Region& region, double step, double offline_margin,
                      unsigned threads = 0, std::vector<double>* raster = nullptr);

/// Marching-squares extraction of the loci v = 0, w = 0, v - w = 0 of the
/// chosen function over the region, each vertex refined along its grid edge
/// until the locus equation holds to 1e-8.
CurveReport extract_curves(ScanFunction fn, const Region& region, double step);

}  // namespace critline
