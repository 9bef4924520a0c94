#pragma once

// Adaptive Gauss-Kronrod quadrature (21-point Kronrod / 10-point Gauss).
// Worst-interval bisection until the summed error estimate meets the
// requested absolute tolerance. Endpoint singularities are the caller's
// problem: substitute before integrating (limit_laws.hpp does).

#include <qsd/linalg.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <queue>
#include <vector>

namespace qsd {

class quadrature_error : public numerical_error {
 public:
  quadrature_error(double achieved, double requested)
      : numerical_error("quadrature", "failed to reach tolerance " + std::to_string(requested) +
                                          ", achieved " + std::to_string(achieved)),
        achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

namespace gk {

// Positive abscissae / weights of the 21-point Kronrod rule; even entries
// are the embedded 10-point Gauss nodes.
inline constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

inline constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <class Value, class F>
void rule21(const F& f, double a, double b, Value& result, double& abserr) {
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);

  const Value fc = f(centr);
  Value resg = Value{};
  Value resk = wgk[10] * fc;
  std::array<Value, 10> fsum{};
  for (int j = 0; j < 10; ++j) {
    const double absc = hlgth * xgk[j];
    const Value f1 = f(centr - absc);
    const Value f2 = f(centr + absc);
    fsum[j] = f1 + f2;
    resk += wgk[j] * fsum[j];
  }
  for (int j = 0; j < 5; ++j) resg += wg[j] * fsum[2 * j + 1];
  result = resk * hlgth;
  abserr = std::abs((resk - resg) * hlgth);
}

}  // namespace gk

struct QuadOptions {
  double abs_tol = 1e-10;
  int max_intervals = 5000;
};

template <class Value, class F>
Value integrate_impl(F&& f, double a, double b, const QuadOptions& opt) {
  if (a == b) return Value{};

  struct Segment {
    double a, b, err;
    Value value;
    bool operator<(const Segment& o) const { return err < o.err; }
  };

  std::priority_queue<Segment> heap;
  Value v;
  double e;
  gk::rule21<Value>(f, a, b, v, e);
  heap.push({a, b, e, v});
  Value total = v;
  double total_err = e;

  while (total_err > opt.abs_tol) {
    if (static_cast<int>(heap.size()) >= opt.max_intervals)
      throw quadrature_error(total_err, opt.abs_tol);
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) throw quadrature_error(total_err, opt.abs_tol);
    Value v1, v2;
    double e1, e2;
    gk::rule21<Value>(f, worst.a, mid, v1, e1);
    gk::rule21<Value>(f, mid, worst.b, v2, e2);
    total += v1 + v2 - worst.value;
    total_err += e1 + e2 - worst.err;
    heap.push({worst.a, mid, e1, v1});
    heap.push({mid, worst.b, e2, v2});
  }
  return total;
}

template <class F>
double integrate(F&& f, double a, double b, const QuadOptions& opt = {}) {
  return integrate_impl<double>(std::forward<F>(f), a, b, opt);
}

template <class F>
Complex integrate_complex(F&& f, double a, double b, const QuadOptions& opt = {}) {
  return integrate_impl<Complex>(std::forward<F>(f), a, b, opt);
}

}  // namespace qsd
