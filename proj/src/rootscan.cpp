#include "critline/rootscan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

#include "critline/elem.hpp"
#include "critline/errors.hpp"
#include "critline/gamma.hpp"
#include "critline/parallel.hpp"
#include "critline/xi.hpp"
#include "critline/zeta.hpp"

namespace critline {

namespace {

constexpr double kResidTol = 1e-9;
constexpr double kCandidateTol = 1e-4;
constexpr double kCurveTol = 1e-8;
constexpr double kExactZero = 1e-13;

int grid_count(double lo, double hi, double step) {
  return static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

// |z (1-z) gamma(z/2) pi^{-z/2} / 2|: modulus of the factor completing zeta
// into xi.  Dividing it out removes the exponential decay in t.
double completion_scale(Complex z) {
  return 0.5 * abs(z) * abs(Complex{1.0 - z.re, -z.im}) * abs(cgamma(0.5 * z).value) *
         std::exp(-0.5 * z.re * kLnPi);
}

struct Sample {
  double t;
  double value;
};

Sample sample_off_zero(double t, double nudge) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    const double v = xi_on_line(t);
    if (std::fabs(v) >= kExactZero) return {t, v};
    t += nudge;
  }
  throw ConvergenceError("bracket_line: could not nudge a sample off an exact zero");
}

Complex eval_scan_function(ScanFunction fn, Complex z) {
  switch (fn) {
    case ScanFunction::EXP:
      return cexp(z);
    case ScanFunction::COS:
      return ccos(z);
    case ScanFunction::GAMMA:
      return cgamma(z).value;
    case ScanFunction::XI:
      return xi_eval(z).value;
  }
  throw DomainError("extract_curves: unknown function identifier");
}

double locus_field(LocusKind kind, Complex f) {
  switch (kind) {
    case LocusKind::V_ZERO:
      return f.re;
    case LocusKind::W_ZERO:
      return f.im;
    case LocusKind::V_EQ_W:
      return f.re - f.im;
  }
  return 0.0;
}

}  // namespace

std::vector<Bracket> bracket_line(double t_lo, double t_hi, double step) {
  if (!(0.0 <= t_lo && t_lo < t_hi && t_hi <= 60.0)) {
    throw DomainError("bracket_line: requires 0 <= t_lo < t_hi <= 60");
  }
  if (!(step > 0.0 && step <= 0.5)) throw DomainError("bracket_line: requires 0 < step <= 0.5");

  const int count = grid_count(t_lo, t_hi, step);
  std::vector<Bracket> brackets;
  // the nudge runs backwards on the last sample so it stays inside [0, 60]
  Sample prev = sample_off_zero(t_lo, step / 100.0);
  for (int i = 1; i < count; ++i) {
    const double t = t_lo + i * step;
    const Sample cur = sample_off_zero(t, i + 1 < count ? step / 100.0 : -step / 100.0);
    if ((prev.value < 0.0) != (cur.value < 0.0)) {
      brackets.push_back({prev.t, cur.t, prev.value, cur.value});
    }
    prev = cur;
  }
  return brackets;
}

ZeroRecord refine(const Bracket& bracket) {
  if (!(bracket.t_lo < bracket.t_hi) || !(bracket.f_lo * bracket.f_hi < 0.0)) {
    throw DomainError("refine: bracket must satisfy t_lo < t_hi and f_lo * f_hi < 0");
  }
  double lo = bracket.t_lo;
  double hi = bracket.t_hi;
  double f_lo = bracket.f_lo;
  int iterations = 0;
  while (hi - lo >= 1e-12 && iterations < 60) {
    ++iterations;
    const double mid = 0.5 * (lo + hi);
    const double f_mid = xi_on_line(mid);
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((f_lo < 0.0) != (f_mid < 0.0)) {
      hi = mid;
    } else {
      lo = mid;
      f_lo = f_mid;
    }
  }
  const double t = 0.5 * (lo + hi);
  const double residual = std::fabs(xi_on_line(t));
  if (residual >= kResidTol) {
    throw ConvergenceError("refine: residual above tolerance after bisection");
  }
  return {t, residual, iterations, bracket};
}

GridReport scan_strip(const Region& region, double step, double offline_margin,
                      unsigned threads, std::vector<double>* raster) {
  if (!(0.0 < region.re_lo && region.re_lo < region.re_hi && region.re_hi < 1.0)) {
    throw DomainError("scan_strip: region must satisfy 0 < re_lo < re_hi < 1");
  }
  if (!(0.0 <= region.t_lo && region.t_lo < region.t_hi && region.t_hi <= 60.0)) {
    throw DomainError("scan_strip: region must satisfy 0 <= t_lo < t_hi <= 60");
  }
  if (!(step > 0.0 && step <= 0.1)) throw DomainError("scan_strip: requires 0 < step <= 0.1");
  if (!(offline_margin > 0.0 && offline_margin < 0.5)) {
    throw DomainError("scan_strip: requires 0 < offline_margin < 0.5");
  }

  const int nx = grid_count(region.re_lo, region.re_hi, step);
  const int nt = grid_count(region.t_lo, region.t_hi, step);

  struct CellValues {
    double field;
    double sym_re;
    double sym_im;
  };
  std::vector<CellValues> cells(static_cast<std::size_t>(nx) * nt);

  detail::parallel_for(static_cast<std::size_t>(nt), threads, [&](std::size_t j) {
    const double t = region.t_lo + static_cast<double>(j) * step;
    for (int i = 0; i < nx; ++i) {
      const double x = region.re_lo + i * step;
      const Complex here = xi_eval({x, t}).value;
      const Complex mirror = xi_eval({1.0 - x, t}).value;
      cells[j * nx + i] = {abs(here) / completion_scale({x, t}),
                          std::fabs(mirror.re - here.re), std::fabs(mirror.im + here.im)};
    }
  });

  GridReport report;
  report.region = region;
  report.step = step;
  report.min_abs_xi_offline = std::numeric_limits<double>::infinity();
  report.max_sym_residual = 0.0;
  double global_min = std::numeric_limits<double>::infinity();
  for (int j = 0; j < nt; ++j) {
    const double t = region.t_lo + j * step;
    for (int i = 0; i < nx; ++i) {
      const double x = region.re_lo + i * step;
      const CellValues& c = cells[static_cast<std::size_t>(j) * nx + i];
      if (c.field < global_min) {
        global_min = c.field;
        report.argmin_point = {x, t};
      }
      if (std::fabs(x - 0.5) >= offline_margin && c.field < report.min_abs_xi_offline) {
        report.min_abs_xi_offline = c.field;
      }
      report.max_sym_residual = std::max({report.max_sym_residual, c.sym_re, c.sym_im});
      if (c.field < kCandidateTol) report.candidate_cells.push_back({x, t});
    }
  }
  if (raster) {
    raster->resize(cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k) (*raster)[k] = cells[k].field;
  }
  return report;
}

namespace {

// -- marching-squares machinery for extract_curves --------------------------

struct CurveGrid {
  ScanFunction fn;
  Region region;
  double step;
  int nx, ny;
  std::vector<Complex> values;  // f at the nodes, row-major (j * nx + i)

  Complex node(int i, int j) const {
    return {region.re_lo + i * step, region.t_lo + j * step};
  }
};

struct Crossing {
  Complex position;
  double field_abs;  // |locus field| after refinement
};

// Illinois-variant false position along the straight segment [a, b];
// endpoint fields must have opposite signs under the (>= 0) convention.
Complex refine_on_edge(const CurveGrid& grid, LocusKind kind, Complex a, double fa, Complex b,
                       double fb) {
  Complex pa = a, pb = b;
  double va = fa, vb = fb;
  Complex p = pa + (pb - pa) * (va / (va - vb));
  for (int iter = 0; iter < 12; ++iter) {
    const double g = locus_field(kind, eval_scan_function(grid.fn, p));
    if (std::fabs(g) <= kCurveTol) return p;
    if ((g < 0.0) == (va < 0.0)) {
      pa = p;
      va = g;
      vb *= 0.5;  // Illinois: shrink the stale endpoint
    } else {
      pb = p;
      vb = g;
      va *= 0.5;
    }
    p = pa + (pb - pa) * (va / (va - vb));
  }
  return p;
}

struct LocusCurves {
  std::vector<std::vector<Complex>> polylines;
  // per grid cell, index of the best (smallest |f|) crossing, or -1
  std::vector<int> best_crossing_in_cell;
  std::vector<Crossing> crossings;
};

LocusCurves trace_locus(const CurveGrid& grid, LocusKind kind) {
  const int nx = grid.nx;
  const int ny = grid.ny;
  std::vector<double> s(static_cast<std::size_t>(nx) * ny);
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = locus_field(kind, grid.values[k]);

  LocusCurves out;
  out.best_crossing_in_cell.assign(static_cast<std::size_t>(nx - 1) * (ny - 1), -1);

  // edge ids: horizontal(i,j) = 2*(j*nx+i), vertical(i,j) = 2*(j*nx+i)+1
  std::map<long, int> vertex_of_edge;
  std::vector<std::pair<int, int>> chains_segments;

  auto field_at = [&](int i, int j) { return s[static_cast<std::size_t>(j) * nx + i]; };
  auto vertex_for = [&](long edge_id, int i, int j, bool horizontal) {
    const auto found = vertex_of_edge.find(edge_id);
    if (found != vertex_of_edge.end()) return found->second;
    const Complex a = grid.node(i, j);
    const Complex b = horizontal ? grid.node(i + 1, j) : grid.node(i, j + 1);
    const double fa = field_at(i, j);
    const double fb = horizontal ? field_at(i + 1, j) : field_at(i, j + 1);
    const Complex p = refine_on_edge(grid, kind, a, fa, b, fb);
    const double residual = std::fabs(locus_field(kind, eval_scan_function(grid.fn, p)));
    const int idx = static_cast<int>(out.crossings.size());
    out.crossings.push_back({p, residual});
    vertex_of_edge.emplace(edge_id, idx);
    return idx;
  };

  for (int j = 0; j + 1 < ny; ++j) {
    for (int i = 0; i + 1 < nx; ++i) {
      const bool pa = field_at(i, j) >= 0.0;
      const bool pb = field_at(i + 1, j) >= 0.0;
      const bool pc = field_at(i + 1, j + 1) >= 0.0;
      const bool pd = field_at(i, j + 1) >= 0.0;
      const int config = (pa ? 1 : 0) | (pb ? 2 : 0) | (pc ? 4 : 0) | (pd ? 8 : 0);
      if (config == 0 || config == 15) continue;

      const long bottom = 2L * (static_cast<long>(j) * nx + i);
      const long top = 2L * (static_cast<long>(j + 1) * nx + i);
      const long left = 2L * (static_cast<long>(j) * nx + i) + 1;
      const long right = 2L * (static_cast<long>(j) * nx + i + 1) + 1;

      auto emit = [&](long e1, bool h1, int i1, int j1, long e2, bool h2, int i2, int j2) {
        const int v1 = vertex_for(e1, i1, j1, h1);
        const int v2 = vertex_for(e2, i2, j2, h2);
        chains_segments.emplace_back(v1, v2);
        const std::size_t cell = static_cast<std::size_t>(j) * (nx - 1) + i;
        int& best = out.best_crossing_in_cell[cell];
        for (int v : {v1, v2}) {
          if (best < 0 || out.crossings[v].field_abs < out.crossings[best].field_abs) best = v;
        }
      };
      auto emit_bottom_left = [&] { emit(bottom, true, i, j, left, false, i, j); };
      auto emit_bottom_right = [&] { emit(bottom, true, i, j, right, false, i + 1, j); };
      auto emit_top_left = [&] { emit(top, true, i, j + 1, left, false, i, j); };
      auto emit_top_right = [&] { emit(top, true, i, j + 1, right, false, i + 1, j); };
      auto emit_left_right = [&] { emit(left, false, i, j, right, false, i + 1, j); };
      auto emit_bottom_top = [&] { emit(bottom, true, i, j, top, true, i, j + 1); };

      switch (config) {
        case 1:
        case 14:
          emit_bottom_left();
          break;
        case 2:
        case 13:
          emit_bottom_right();
          break;
        case 4:
        case 11:
          emit_top_right();
          break;
        case 8:
        case 7:
          emit_top_left();
          break;
        case 3:
        case 12:
          emit_left_right();
          break;
        case 6:
        case 9:
          emit_bottom_top();
          break;
        case 5:
        case 10: {
          // saddle: the center sample decides the pairing
          const Complex center = grid.node(i, j) + Complex{0.5 * grid.step, 0.5 * grid.step};
          const bool pcenter =
              locus_field(kind, eval_scan_function(grid.fn, center)) >= 0.0;
          if (pcenter == pa) {
            emit_bottom_right();
            emit_top_left();
          } else {
            emit_bottom_left();
            emit_top_right();
          }
          break;
        }
        default:
          break;
      }
    }
  }

  // chain the per-cell segments into polylines
  std::vector<std::vector<std::pair<int, int>>> incident(out.crossings.size());
  for (int sidx = 0; sidx < static_cast<int>(chains_segments.size()); ++sidx) {
    const auto [u, v] = chains_segments[sidx];
    incident[u].emplace_back(sidx, v);
    incident[v].emplace_back(sidx, u);
  }
  std::vector<bool> used(chains_segments.size(), false);

  auto walk = [&](int start) {
    std::vector<Complex> line;
    line.push_back(out.crossings[start].position);
    int current = start;
    while (true) {
      int next = -1;
      for (const auto& [sidx, other] : incident[current]) {
        if (!used[sidx]) {
          used[sidx] = true;
          next = other;
          break;
        }
      }
      if (next < 0) break;
      line.push_back(out.crossings[next].position);
      current = next;
    }
    return line;
  };

  for (int v = 0; v < static_cast<int>(out.crossings.size()); ++v) {
    if (incident[v].size() == 1) {
      const auto& [sidx, other] = incident[v][0];
      (void)other;
      if (!used[sidx]) out.polylines.push_back(walk(v));
    }
  }
  for (int sidx = 0; sidx < static_cast<int>(chains_segments.size()); ++sidx) {
    if (!used[sidx]) out.polylines.push_back(walk(chains_segments[sidx].first));
  }
  return out;
}

}  // namespace

CurveReport extract_curves(ScanFunction fn, const Region& region, double step) {
  if (!(std::isfinite(region.re_lo) && std::isfinite(region.re_hi) &&
        std::isfinite(region.t_lo) && std::isfinite(region.t_hi)) ||
      !(region.re_lo < region.re_hi) || !(region.t_lo < region.t_hi)) {
    throw DomainError("extract_curves: region must be finite and ordered");
  }
  if (!(step > 0.0)) throw DomainError("extract_curves: step must be positive");

  CurveGrid grid;
  grid.fn = fn;
  grid.region = region;
  grid.step = step;
  grid.nx = grid_count(region.re_lo, region.re_hi, step);
  grid.ny = grid_count(region.t_lo, region.t_hi, step);
  if (grid.nx < 2 || grid.ny < 2) throw DomainError("extract_curves: region narrower than step");
  grid.values.resize(static_cast<std::size_t>(grid.nx) * grid.ny);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      grid.values[static_cast<std::size_t>(j) * grid.nx + i] =
          eval_scan_function(fn, grid.node(i, j));
    }
  }

  CurveReport report;
  LocusCurves v_curves = trace_locus(grid, LocusKind::V_ZERO);
  LocusCurves w_curves = trace_locus(grid, LocusKind::W_ZERO);
  LocusCurves vw_curves = trace_locus(grid, LocusKind::V_EQ_W);
  for (const auto* traced : {&v_curves, &w_curves, &vw_curves}) {
    const LocusKind kind = traced == &v_curves   ? LocusKind::V_ZERO
                           : traced == &w_curves ? LocusKind::W_ZERO
                                                 : LocusKind::V_EQ_W;
    for (const auto& line : traced->polylines) report.segments.push_back({kind, line});
  }

  // candidates: a V_ZERO and a W_ZERO crossing within one cell of each other
  struct Entry {
    Complex p;
    double score;  // |f| at the candidate point
  };
  std::vector<Entry> entries;
  const int cx = grid.nx - 1;
  const int cy = grid.ny - 1;
  auto abs_f = [&](Complex p) { return abs(eval_scan_function(fn, p)); };
  for (int j = 0; j < cy; ++j) {
    for (int i = 0; i < cx; ++i) {
      const int v_idx = v_curves.best_crossing_in_cell[static_cast<std::size_t>(j) * cx + i];
      if (v_idx < 0) continue;
      int w_idx = -1;
      for (int dj = -1; dj <= 1 && w_idx < 0; ++dj) {
        for (int di = -1; di <= 1 && w_idx < 0; ++di) {
          const int ii = i + di;
          const int jj = j + dj;
          if (ii < 0 || jj < 0 || ii >= cx || jj >= cy) continue;
          w_idx = w_curves.best_crossing_in_cell[static_cast<std::size_t>(jj) * cx + ii];
        }
      }
      if (w_idx < 0) continue;
      const Complex pv = v_curves.crossings[v_idx].position;
      const Complex pw = w_curves.crossings[w_idx].position;
      const double sv = abs_f(pv);
      const double sw = abs_f(pw);
      entries.push_back(sv <= sw ? Entry{pv, sv} : Entry{pw, sw});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.score != b.score) return a.score < b.score;
    if (a.p.re != b.p.re) return a.p.re < b.p.re;
    return a.p.im < b.p.im;
  });
  std::vector<Complex> accepted;
  for (const Entry& e : entries) {
    bool merged = false;
    for (const Complex& c : accepted) {
      if (std::max(std::fabs(c.re - e.p.re), std::fabs(c.im - e.p.im)) <= 2.0 * step) {
        merged = true;
        break;
      }
    }
    if (!merged) accepted.push_back(e.p);
  }
  std::sort(accepted.begin(), accepted.end(), [](Complex a, Complex b) {
    if (a.im != b.im) return a.im < b.im;
    return a.re < b.re;
  });
  report.candidates = std::move(accepted);
  return report;
}

}  // namespace critline
