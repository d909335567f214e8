#include "quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace stirling::quad {

namespace {

constexpr int kGLNodes = 16;

struct GLTable {
  std::array<double, kGLNodes> x{}, w{};
};

// Nodes/weights of 16-point Gauss-Legendre on [-1,1], by Newton iteration
// on P_16 from the Chebyshev initial guess.  Computed once; deterministic.
GLTable make_gl_table() {
  GLTable t;
  const int n = kGLNodes;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15)
        break;
    }
    double weight = 2.0 / ((1.0 - x * x) * pp * pp);
    t.x[static_cast<std::size_t>(i)] = -x; // ascending
    t.w[static_cast<std::size_t>(i)] = weight;
    t.x[static_cast<std::size_t>(n - 1 - i)] = x;
    t.w[static_cast<std::size_t>(n - 1 - i)] = weight;
  }
  return t;
}

const GLTable& gl16() {
  static const GLTable t = make_gl_table();
  return t;
}

} // namespace

// --- ContourPath -----------------------------------------------------------

ContourPath::ContourPath(std::vector<Segment> segments)
    : segments_(std::move(segments)) {
  if (segments_.empty())
    throw UsageError("ContourPath: empty segment list");
  length_ = 0.0;
  for (const Segment& s : segments_)
    length_ += segment_length(s);
  Complex first = at(segments_.front(), 0.0).first;
  Complex last = at(segments_.back(), 1.0).first;
  // Tolerant closure test: a full arc lands sin(2 pi) ~ 2e-16 off its
  // start, so bitwise equality would call every circle open.
  closed_ = std::abs(first - last) <= 1e-9 * std::max(1.0, length_);
}

ContourPath ContourPath::circle(Complex center, double radius) {
  if (!(radius > 0.0))
    throw UsageError("ContourPath::circle: radius must be positive");
  return ContourPath({Arc{center, radius, 0.0, 2.0 * std::numbers::pi}});
}

ContourPath ContourPath::rectangle(double x0, double x1, double y0,
                                   double y1) {
  if (!(x0 < x1) || !(y0 < y1))
    throw UsageError("ContourPath::rectangle: need x0 < x1 and y0 < y1");
  Complex a{x0, y0}, b{x1, y0}, c{x1, y1}, d{x0, y1};
  return ContourPath({Line{a, b}, Line{b, c}, Line{c, d}, Line{d, a}});
}

std::pair<Complex, Complex> ContourPath::at(const Segment& s, double tau) {
  if (const Line* l = std::get_if<Line>(&s)) {
    Complex d = l->to - l->from;
    return {l->from + d * tau, d};
  }
  const Arc& a = std::get<Arc>(s);
  double span = a.angle_to - a.angle_from;
  double theta = a.angle_from + span * tau;
  Complex e = std::polar(a.radius, theta);
  return {a.center + e, Complex{0.0, span} * e};
}

double ContourPath::segment_length(const Segment& s) {
  if (const Line* l = std::get_if<Line>(&s))
    return std::abs(l->to - l->from);
  const Arc& a = std::get<Arc>(s);
  return a.radius * std::abs(a.angle_to - a.angle_from);
}

// --- contour integration ---------------------------------------------------

namespace {

Complex integrate_once(const std::function<Complex(Complex)>& f,
                       const ContourPath& path,
                       const std::vector<int>& panels, std::uint64_t& evals) {
  const GLTable& gl = gl16();
  Complex total{0.0, 0.0};
  for (std::size_t si = 0; si < path.segments().size(); ++si) {
    const auto& seg = path.segments()[si];
    const int np = panels[si];
    const double dtau = 1.0 / np;
    Complex seg_sum{0.0, 0.0};
    for (int j = 0; j < np; ++j) {
      const double mid = (j + 0.5) * dtau;
      Complex panel_sum{0.0, 0.0};
      for (int k = 0; k < kGLNodes; ++k) {
        double tau = mid + 0.5 * dtau * gl.x[static_cast<std::size_t>(k)];
        auto [z, dz] = ContourPath::at(seg, tau);
        panel_sum += gl.w[static_cast<std::size_t>(k)] * f(z) * dz;
        ++evals;
      }
      seg_sum += panel_sum * (0.5 * dtau);
    }
    total += seg_sum;
  }
  return total;
}

} // namespace

QuadResult integrate_segmented(const std::function<Complex(Complex)>& f,
                               const ContourPath& path,
                               const SegmentedOptions& opts) {
  if (opts.start_panels < 1 || opts.max_panels < opts.start_panels)
    throw UsageError("integrate_segmented: bad panel bounds");
  // Length-weighted initial allocation, then exact doubling so refinements
  // nest deterministically.
  const double len = path.length();
  std::vector<int> panels;
  panels.reserve(path.segments().size());
  for (const auto& seg : path.segments()) {
    double share = ContourPath::segment_length(seg) / len;
    panels.push_back(std::max(
        1, static_cast<int>(std::lround(share * opts.start_panels))));
  }
  std::uint64_t evals = 0;
  Complex prev = integrate_once(f, path, panels, evals);
  int total_panels = 0;
  for (int p : panels)
    total_panels += p;
  double last_delta = std::numeric_limits<double>::infinity();
  while (true) {
    if (2 * total_panels > opts.max_panels) {
      throw AccuracyError("integrate_segmented: panel cap " +
                              std::to_string(opts.max_panels) +
                              " reached before tolerance " +
                              std::to_string(opts.tol),
                          prev, last_delta, evals);
    }
    for (int& p : panels)
      p *= 2;
    total_panels *= 2;
    Complex next = integrate_once(f, path, panels, evals);
    last_delta = std::abs(next - prev);
    if (last_delta <= opts.tol * std::max(1.0, std::abs(next)))
      return {next, last_delta, evals};
    prev = next;
  }
}

// --- exponentially weighted semi-infinite integrals -------------------------

namespace {

// One trapezoid level of the DE-mapped integral at step h.  Scans outward
// from s = 0 in both directions; truncates a direction after `kRun`
// consecutive terms below cutoff * (running L1 mass), never before |s|
// reaches the direction's minimum sweep.
template <typename V>
V de_level_sum(const std::function<V(double)>& g, double p, double h,
               double s_min_pos, double s_min_neg, double cutoff,
               std::uint64_t& evals, double& l1_out) {
  constexpr int kRun = 8;
  auto term = [&](double s) -> V {
    double w = std::exp(s - std::exp(-s));
    if (!(w > 0.0))
      return V{};
    double logweight = (p + 1.0) * std::log(w) - w;
    if (logweight < -745.0)
      return V{};
    ++evals;
    return g(w) * (std::exp(logweight) * (1.0 + std::exp(-s)));
  };
  V sum = term(0.0);
  double l1 = std::abs(sum);
  for (int dir = 0; dir < 2; ++dir) {
    const double sign = dir == 0 ? 1.0 : -1.0;
    const double s_sweep = dir == 0 ? s_min_pos : s_min_neg;
    const double s_cap = dir == 0 ? 60.0 : 30.0;
    int run = 0;
    for (int k = 1;; ++k) {
      double s = sign * k * h;
      if (std::abs(s) > s_cap)
        break;
      V t = term(s);
      sum += t;
      double at = std::abs(t);
      l1 += at;
      if (std::abs(s) >= s_sweep) {
        if (at <= cutoff * std::max(l1, 1e-300))
          ++run;
        else
          run = 0;
        if (run >= kRun)
          break;
      }
    }
  }
  l1_out = l1 * h;
  return sum * h;
}

template <typename V>
QuadResult de_integrate(const std::function<V(double)>& g, double p,
                        const ExpWeightedOptions& opts) {
  if (!(p > -1.0))
    throw DomainError("integrate_exp_weighted: need m_power > -1, got " +
                      std::to_string(p));
  constexpr int kMinCompareLevel = 4;
  const double s_min_pos = std::max(6.0, std::log(std::abs(p) + 2.0) + 4.0);
  const double s_min_neg = 6.0;
  std::uint64_t evals = 0;
  V prev{};
  double last_delta = std::numeric_limits<double>::infinity();
  for (int level = 0; level <= opts.max_level; ++level) {
    double h = 0.5 / static_cast<double>(1 << level);
    double l1 = 0.0;
    V cur = de_level_sum<V>(g, p, h, s_min_pos, s_min_neg, opts.term_cutoff,
                            evals, l1);
    if (level >= kMinCompareLevel) {
      last_delta = std::abs(cur - prev);
      // Integrands with heavy internal cancellation (the remainder double
      // integrals) cannot satisfy a tolerance relative to the cancelled
      // value once the doubling delta sits at the rounding noise of the
      // level's L1 mass; accept that plateau as converged.
      const double roundoff_floor =
          64.0 * std::numeric_limits<double>::epsilon() * l1;
      if (last_delta <=
          std::max(opts.tol * std::max(std::abs(cur), opts.floor),
                   roundoff_floor))
        return {Complex(cur), last_delta, evals};
    }
    prev = cur;
  }
  throw AccuracyError("integrate_exp_weighted: level cap " +
                          std::to_string(opts.max_level) +
                          " reached before tolerance " +
                          std::to_string(opts.tol),
                      Complex(prev), last_delta, evals);
}

} // namespace

QuadResult integrate_exp_weighted(const std::function<double(double)>& g,
                                  double m_power,
                                  const ExpWeightedOptions& opts) {
  return de_integrate<double>(g, m_power, opts);
}

QuadResult
integrate_exp_weighted_complex(const std::function<Complex(double)>& g,
                               double m_power, const ExpWeightedOptions& opts) {
  return de_integrate<Complex>(g, m_power, opts);
}

// --- winding numbers and path scans ----------------------------------------

namespace {

constexpr int kScanSamples = 512;

template <typename F>
void scan_path(const ContourPath& path, F&& visit) {
  for (const auto& seg : path.segments()) {
    for (int k = 0; k <= kScanSamples; ++k) {
      double tau = static_cast<double>(k) / kScanSamples;
      visit(ContourPath::at(seg, tau).first);
    }
  }
}

int winding_of_samples(const std::vector<Complex>& pts, const char* what) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Complex a = pts[i], b = pts[i + 1];
    if (std::abs(a) < 1e-12 || std::abs(b) < 1e-12)
      throw ContourError(std::string(what) +
                         ": sample (numerically) hits the tracked point");
    total += std::arg(b / a);
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

} // namespace

int winding_number(const ContourPath& path, Complex p) {
  std::vector<Complex> pts;
  scan_path(path, [&](Complex z) { pts.push_back(z - p); });
  return winding_of_samples(pts, "winding_number");
}

int winding_number_of_image(const ContourPath& path,
                            const std::function<Complex(Complex)>& f) {
  std::vector<Complex> pts;
  scan_path(path, [&](Complex z) { pts.push_back(f(z)); });
  return winding_of_samples(pts, "winding_number_of_image");
}

double min_abs_on_path(const ContourPath& path,
                       const std::function<Complex(Complex)>& f) {
  double m = std::numeric_limits<double>::infinity();
  scan_path(path, [&](Complex z) { m = std::min(m, std::abs(f(z))); });
  return m;
}

// --- real zeros of h(z) = e^z - z - 1 ---------------------------------------

namespace {

// Series form z^2/2 * (1 + 2 sum z^r/(r+2)!) for |z| <= 1 (no cancellation),
// closed form otherwise.
double h_real(double z) {
  if (std::abs(z) <= 1.0) {
    double sum = 0.0, t = z * z / 2.0;
    for (int k = 3; k <= 30; ++k) {
      sum += t;
      t *= z / k;
    }
    return sum + t;
  }
  return std::expm1(z) - z;
}

double h_prime_real(double z) { return std::expm1(z); }

// Safeguarded Newton (bracket + bisection fallback) for h(z) = c on
// [lo, hi] with h(lo) - c and h(hi) - c of opposite sign.
double solve_h_on_bracket(double c, double lo, double hi) {
  double flo = h_real(lo) - c;
  double fhi = h_real(hi) - c;
  if (flo == 0.0)
    return lo;
  if (fhi == 0.0)
    return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw DomainError("real_zeros_of_h: bracket does not straddle the root");
  double z = 0.5 * (lo + hi);
  const double target = 1e-14 * c; // relative residual; c > 0 here
  for (int it = 0; it < 200; ++it) {
    double f = h_real(z) - c;
    if (std::abs(f) <= target)
      return z;
    if ((f > 0.0) == (fhi > 0.0))
      hi = z;
    else
      lo = z;
    double dp = h_prime_real(z);
    double znewton = dp != 0.0 ? z - f / dp : z;
    z = (znewton > lo && znewton < hi) ? znewton : 0.5 * (lo + hi);
  }
  return z; // best effort; residual target is generous for doubles
}

} // namespace

std::pair<double, double> real_zeros_of_h(double c) {
  if (c < 0.0 || !std::isfinite(c))
    throw DomainError("real_zeros_of_h: need c >= 0, got " +
                      std::to_string(c));
  if (c == 0.0)
    return {0.0, 0.0};
  const double s = std::sqrt(2.0 * c);
  // Small c: the bracket margin h(sqrt(2c)) - c ~ c*s/3 falls below the
  // rounding noise of c once s/3 < ~1e-16, making the sign test random.
  // There the two-term expansion z_+- = +-sqrt(2c) - c/3 + O(c^{3/2}) is
  // already far inside the 1e-14 relative residual target.
  if (c < 1e-20)
    return {-s - c / 3.0, s - c / 3.0};
  // h(z) >= z^2/2 for z >= 0 and h(z) <= z^2/2 for z <= 0 pin both
  // brackets; the left endpoint -(c+1) (where h - c = e^{-(c+1)} > 0) is
  // widened a hair so that rounding of c+1 at large c cannot flip its sign.
  double zp = solve_h_on_bracket(c, 0.0, s);
  double zm = solve_h_on_bracket(c, -(c + 1.0) - std::max(1e-12, 1e-15 * c),
                                 -s);
  return {zm, zp};
}

} // namespace stirling::quad
