#pragma once

// Closed-form limiting spectral laws (Marchenko-Pastur, its symmetrization,
// Fuss-Catalan of order 2, Wigner semicircle and its shifted variant for
// partial transposes) with quadrature-backed functionals, CDFs and Cauchy
// transforms.
//
// Every density is evaluated in real arithmetic. For the symmetrized MP law
// the inner square root of the cubic resolvent is nonnegative on the whole
// support: the support edges are exactly the zeros of that radicand, and for
// c < 1/2 the law has a gap (0, inner_edge) around the atom at zero. The
// radicand's discriminant simplifies through B^2 + 4(2c-1)^3 = c(c+4)^3.

#include <qsd/quadrature.hpp>

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qsd {

enum class LawKind { mp, smp, fuss_catalan2, semicircle, aubrun };

inline const char* law_name(LawKind k) {
  switch (k) {
    case LawKind::mp: return "mp";
    case LawKind::smp: return "smp";
    case LawKind::fuss_catalan2: return "fc";
    case LawKind::semicircle: return "semicircle";
    case LawKind::aubrun: return "aubrun";
  }
  return "?";
}

class LimitLaw {
 public:
  static LimitLaw marchenko_pastur(double c) {
    require_positive(c);
    LimitLaw law(LawKind::mp, c);
    const double rc = std::sqrt(c);
    law.atom0_ = c < 1.0 ? 1.0 - c : 0.0;
    law.intervals_ = {{(1.0 - rc) * (1.0 - rc), (1.0 + rc) * (1.0 + rc), 2, 2}};
    return law;
  }

  static LimitLaw symmetrized_mp(double c) {
    require_positive(c);
    LimitLaw law(LawKind::smp, c);
    const double b = 2.0 + 10.0 * c - c * c;
    const double disc = (c + 4.0) * std::sqrt(c * (c + 4.0));  // sqrt(b^2 + 4(2c-1)^3)
    const double yplus = std::sqrt((b + disc) / 2.0);
    if (c < 0.5) {
      law.atom0_ = 1.0 - 2.0 * c;
      const double yinner = std::sqrt((b - disc) / 2.0);
      law.intervals_ = {{-yplus, -yinner, 2, 2}, {yinner, yplus, 2, 2}};
    } else {
      law.atom0_ = 0.0;
      law.intervals_ = {{-yplus, 0.0, 2, 3}, {0.0, yplus, 3, 2}};
    }
    return law;
  }

  static LimitLaw fuss_catalan2() {
    LimitLaw law(LawKind::fuss_catalan2, 0.0);
    law.intervals_ = {{0.0, 6.75, 3, 2}};
    return law;
  }

  static LimitLaw semicircle(double center, double radius) {
    if (radius <= 0.0) throw std::invalid_argument("semicircle: radius must be positive");
    LimitLaw law(LawKind::semicircle, 0.0);
    law.center_ = center;
    law.radius_ = radius;
    law.intervals_ = {{center - radius, center + radius, 2, 2}};
    return law;
  }

  static LimitLaw aubrun(double c) {
    require_positive(c);
    LimitLaw law(LawKind::aubrun, c);
    law.center_ = c;
    law.radius_ = 2.0 * std::sqrt(c);
    law.intervals_ = {{c - law.radius_, c + law.radius_, 2, 2}};
    return law;
  }

  LawKind kind() const { return kind_; }
  double c() const { return c_; }
  double atom0() const { return atom0_; }
  double lo() const { return intervals_.front().a; }
  double hi() const { return intervals_.back().b; }
  // Lower edge of the positive continuous branch (SMP with c < 1/2), else 0.
  double inner_edge() const {
    return kind_ == LawKind::smp && intervals_.size() == 2 ? intervals_.back().a : 0.0;
  }

  double pdf(double x) const {
    switch (kind_) {
      case LawKind::mp: return mp_pdf(x);
      case LawKind::smp: return smp_pdf(x);
      case LawKind::fuss_catalan2: return fc_pdf(x);
      case LawKind::semicircle:
      case LawKind::aubrun: return sc_pdf(x);
    }
    return 0.0;
  }

  // atom0 * g(0) + integral of g against the continuous density, to absolute
  // tolerance tol. Kinks of g must be passed as breakpoints.
  double expectation(const std::function<double(double)>& g, std::vector<double> breakpoints = {},
                     double tol = 1e-8) const {
    double total = atom0_ > 0.0 ? atom0_ * g(0.0) : 0.0;
    total += integrate_density<double>([&](double x) { return g(x) * pdf(x); },
                                       std::move(breakpoints), hi() + 1.0, tol);
    return total;
  }

  double cdf(double x) const {
    double total = (atom0_ > 0.0 && x >= 0.0) ? atom0_ : 0.0;
    if (x <= lo()) return total;
    total += integrate_density<double>([&](double t) { return pdf(t); }, {}, x, 1e-9);
    return std::min(total, 1.0);
  }

  // G(z) = atom0/z + integral density(t)/(z - t) dt, Im z > 0 required.
  Complex cauchy_transform(Complex z, double tol = 1e-8) const {
    if (z.imag() <= 0.0)
      throw std::invalid_argument("cauchy_transform: Im z must be positive");
    Complex total = atom0_ > 0.0 ? atom0_ / z : Complex{};
    total += integrate_density<Complex>([&](double t) { return pdf(t) / (z - t); }, {},
                                        hi() + 1.0, tol);
    return total;
  }

  struct Interval {
    double a, b;
    int pa, pb;  // substitution powers x = a + u^pa / x = b - u^pb
  };
  const std::vector<Interval>& intervals() const { return intervals_; }

 private:
  LimitLaw(LawKind kind, double c) : kind_(kind), c_(c) {}

  static void require_positive(double c) {
    if (c <= 0.0) throw std::invalid_argument("LimitLaw: c must be positive");
  }

  double mp_pdf(double x) const {
    const double a = intervals_[0].a, b = intervals_[0].b;
    if (x <= a || x >= b) return 0.0;
    return std::sqrt((x - a) * (b - x)) / (2.0 * std::numbers::pi * x);
  }

  double smp_pdf(double y) const {
    y = std::abs(y);
    const double yplus = hi();
    const double yinner = inner_edge();
    if (y >= yplus || y <= yinner) return 0.0;
    const double cm = 2.0 * c_ - 1.0;
    if (y < 1e-11) {
      // Interior limit; diverges as y^(-1/3) exactly at c = 1/2.
      return cm > 0.0 ? 1.0 / (std::numbers::pi * std::sqrt(cm))
                      : std::numeric_limits<double>::infinity();
    }
    const double cm3 = cm * cm * cm;
    const double radicand = cm3 - y * y * y * y + (2.0 - (c_ - 10.0) * c_) * y * y;
    if (radicand <= 0.0) return 0.0;
    const double w =
        std::cbrt(cm3 + 9.0 * (c_ + 1.0) * y * y + 3.0 * std::sqrt(3.0) * y * std::sqrt(radicand));
    const double num = w * w - cm * cm - 3.0 * y * y;
    return std::max(num / (2.0 * std::sqrt(3.0) * std::numbers::pi * y * w), 0.0);
  }

  double fc_pdf(double x) const {
    if (x <= 0.0 || x >= 6.75) return 0.0;
    const double cb2 = std::cbrt(2.0);
    const double q = std::cbrt(27.0 + 3.0 * std::sqrt(81.0 - 12.0 * x));
    const double num = cb2 * q * q - 6.0 * std::cbrt(x);
    return cb2 * std::sqrt(3.0) / (12.0 * std::numbers::pi) * num / (std::cbrt(x * x) * q);
  }

  double sc_pdf(double x) const {
    const double d = x - center_;
    const double r2 = radius_ * radius_;
    if (d * d >= r2) return 0.0;
    return 2.0 / (std::numbers::pi * r2) * std::sqrt(r2 - d * d);
  }

  struct Panel {
    double a, b;
    int p;
    int side;  // 0 direct, 1 substitute at a, 2 substitute at b
  };

  std::vector<Panel> build_panels(std::vector<double>& breakpoints, double upper_clip) const {
    std::vector<Panel> panels;
    for (const Interval& iv : intervals_) {
      if (upper_clip <= iv.a) break;
      const double b = std::min(iv.b, upper_clip);
      const bool hi_clipped = b < iv.b;
      std::vector<double> pts{iv.a, b};
      const double span = b - iv.a;
      for (double br : breakpoints)
        if (br > iv.a + 1e-13 * std::max(1.0, std::abs(iv.a)) &&
            br < b - 1e-13 * std::max(1.0, std::abs(b)))
          pts.push_back(br);
      std::sort(pts.begin(), pts.end());
      if (pts.size() == 2 && span > 0.0) pts.insert(pts.begin() + 1, iv.a + span / 2.0);
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double u = pts[i], v = pts[i + 1];
        if (v - u <= 0.0) continue;
        if (i == 0 && iv.pa > 1)
          panels.push_back({u, v, iv.pa, 1});
        else if (i + 2 == pts.size() && !hi_clipped && iv.pb > 1)
          panels.push_back({u, v, iv.pb, 2});
        else
          panels.push_back({u, v, 1, 0});
      }
    }
    return panels;
  }

  template <class Value, class H>
  Value integrate_density(H h, std::vector<double> breakpoints, double upper_clip,
                          double tol) const {
    std::vector<Panel> panels = build_panels(breakpoints, upper_clip);
    if (panels.empty()) return Value{};
    QuadOptions opt;
    opt.abs_tol = tol / static_cast<double>(panels.size());
    Value total{};
    for (const Panel& p : panels) {
      if (p.side == 0) {
        total += integrate_impl<Value>(h, p.a, p.b, opt);
      } else {
        const double width = p.b - p.a;
        const double pw = static_cast<double>(p.p);
        const double tmax = std::pow(width, 1.0 / pw);
        const double base = p.side == 1 ? p.a : p.b;
        const double sign = p.side == 1 ? 1.0 : -1.0;
        total += integrate_impl<Value>(
            [&](double t) {
              const double x = base + sign * std::pow(t, pw);
              return h(x) * (pw * std::pow(t, pw - 1.0));
            },
            0.0, tmax, opt);
      }
    }
    return total;
  }

  LawKind kind_;
  double c_ = 0.0;
  double center_ = 0.0, radius_ = 0.0;
  double atom0_ = 0.0;
  std::vector<Interval> intervals_;
};

// R-transforms used in the inversion identity R(G(z)) + 1/G(z) = z.
inline Complex mp_r_transform(double c, Complex w) { return c / (1.0 - w); }
inline Complex smp_r_transform(double c, Complex w) { return 2.0 * c * w / (1.0 - w * w); }

// Q_s = 4 Gamma(3/2-s) Gamma(s+1/2) / (pi Gamma(3-s) Gamma(s+2)).
inline double chernoff_limit(double s) {
  if (s < 0.0 || s > 1.0) throw std::invalid_argument("chernoff_limit: s must be in [0,1]");
  return 4.0 * std::tgamma(1.5 - s) * std::tgamma(s + 0.5) /
         (std::numbers::pi * std::tgamma(3.0 - s) * std::tgamma(s + 2.0));
}

struct ChernoffPoint {
  double s_star;
  double q;
};

template <class F>
ChernoffPoint golden_minimize(F&& f, double a, double b, double tol) {
  const double inv_phi = 0.6180339887498948482;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  const double s = (a + b) / 2.0;
  return {s, f(s)};
}

inline ChernoffPoint chernoff_min() {
  return golden_minimize([](double s) { return chernoff_limit(s); }, 0.0, 1.0, 1e-10);
}

// Median M of MP(1) and the unitary-orbit diameter
// d = integral x sign(x - M) dMP1(x).
struct MedianDiameter {
  double median;
  double diameter;
};

inline MedianDiameter mp_median_and_diameter() {
  const LimitLaw law = LimitLaw::marchenko_pastur(1.0);
  double lo = 0.0, hi = 4.0;
  for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
    const double mid = (lo + hi) / 2.0;
    (law.cdf(mid) < 0.5 ? lo : hi) = mid;
  }
  const double median = (lo + hi) / 2.0;
  const double diameter = law.expectation(
      [median](double x) { return x * (x > median ? 1.0 : -1.0); }, {median});
  return {median, diameter};
}

// Fraction of negative eigenvalues of the partial transpose and the
// resulting negativity, from the shifted-semicircle closed forms. Both
// vanish for c >= 4.
struct AubrunValues {
  double negative_fraction;
  double negativity;
};

inline AubrunValues aubrun_negativity(double c) {
  if (c <= 0.0) throw std::invalid_argument("aubrun_negativity: c must be positive");
  if (c >= 4.0) return {0.0, 0.0};
  const double pi = std::numbers::pi;
  const double fn = (4.0 * std::acos(std::sqrt(c) / 2.0) - std::sqrt(4.0 * c - c * c)) / (4.0 * pi);
  const double neg = (8.0 * std::sqrt(4.0 * c - c * c) + std::sqrt(4.0 * c * c * c - c * c * c * c) -
                      12.0 * c * std::acos(std::sqrt(c) / 2.0)) /
                     (12.0 * pi);
  return {fn, neg};
}

// Closed forms for the distance of a generic state to the maximally mixed
// one under the transmission and entropic metrics. T1's square also equals
// 1/4 - integral ((t+1)/2) ln((t+1)/2) dMP1(t), used as a cross-check.
struct AppendixConstants {
  double t1;
  double e1;
};

inline AppendixConstants appendix_constants() {
  const double sqrt5 = std::sqrt(5.0);
  const double golden = (1.0 + sqrt5) / 2.0;
  const double t1sq = 0.125 + sqrt5 / 8.0 + std::log(2.0) - 2.0 * std::log(golden);
  const double pi = std::numbers::pi;
  const double e1sq = (3.0 * pi * std::log(36.0 * pi * pi / (9.0 * pi * pi - 64.0)) -
                       16.0 * std::atanh(8.0 / (3.0 * pi))) /
                      (6.0 * pi);
  return {std::sqrt(t1sq), std::sqrt(e1sq)};
}

// Piecewise-linear CDF table on a substitution-graded mesh; cheap repeated
// queries for goodness-of-fit statistics.
class TabulatedCdf {
 public:
  explicit TabulatedCdf(const LimitLaw& law, int cells_per_half = 4096) : atom0_(law.atom0()) {
    double cum = 0.0;
    for (const auto& iv : law.intervals()) {
      const double mid = (iv.a + iv.b) / 2.0;
      append_half(law, iv.a, mid, iv.pa, true, cells_per_half, cum);
      append_half(law, iv.b, mid, iv.pb, false, cells_per_half, cum);
    }
    // normalize continuous mass to 1 - atom0 to absorb mesh error
    const double target = 1.0 - atom0_;
    if (cum > 0.0)
      for (double& v : cdf_) v *= target / cum;
  }

  // Full CDF including the atom at zero.
  double operator()(double x) const {
    double base = (atom0_ > 0.0 && x >= 0.0) ? atom0_ : 0.0;
    if (xs_.empty() || x <= xs_.front()) return base + 0.0;
    if (x >= xs_.back()) return base + cdf_.back();
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - xs_.begin());
    const double x0 = xs_[i - 1], x1 = xs_[i];
    const double f0 = cdf_[i - 1], f1 = cdf_[i];
    return base + f0 + (f1 - f0) * (x - x0) / (x1 - x0);
  }

  double atom0() const { return atom0_; }

 private:
  void append_half(const LimitLaw& law, double edge, double mid, int power, bool forward,
                   int cells, double& cum) {
    // x = edge +/- u^p, uniform mesh in u; trapezoid in u keeps the
    // integrand smooth through the edge singularity.
    const double span = std::abs(mid - edge);
    const double sign = mid > edge ? 1.0 : -1.0;
    const double pw = static_cast<double>(power);
    const double umax = std::pow(span, 1.0 / pw);
    std::vector<double> xs(cells + 1), fs(cells + 1);
    for (int i = 0; i <= cells; ++i) {
      const double u = umax * static_cast<double>(i) / cells;
      const double x = edge + sign * std::pow(u, pw);
      xs[i] = x;
      fs[i] = law.pdf(x) * pw * std::pow(u, pw - 1.0);
    }
    std::vector<double> cums(cells + 1);
    cums[0] = 0.0;
    const double du = umax / cells;
    for (int i = 1; i <= cells; ++i) cums[i] = cums[i - 1] + 0.5 * (fs[i] + fs[i - 1]) * du;
    if (forward) {
      for (int i = 0; i <= cells; ++i) {
        xs_.push_back(xs[i]);
        cdf_.push_back(cum + cums[i]);
      }
      cum += cums[cells];
    } else {
      // integrated from the upper edge towards mid; flip
      const double total = cums[cells];
      for (int i = cells; i >= 0; --i) {
        xs_.push_back(xs[i]);
        cdf_.push_back(cum + total - cums[i]);
      }
      cum += total;
    }
  }

  double atom0_;
  std::vector<double> xs_;
  std::vector<double> cdf_;
};

}  // namespace qsd
