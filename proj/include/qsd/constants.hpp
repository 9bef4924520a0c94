#pragma once

// Registry of every asymptotic constant: exact expression (evaluated in
// code), a human-readable formula string, and an independently transcribed
// decimal. The decimal is a transcription check, not a second derivation;
// quadrature cross-checks live with the limit laws.

#include <qsd/limit_laws.hpp>

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

namespace qsd {

struct ConstantEntry {
  std::string name;
  std::string expression;
  double value = 0.0;      // evaluated exact expression
  double reference = 0.0;  // transcribed decimal, |value - reference| <= 1e-12
};

inline const std::vector<ConstantEntry>& constants_registry() {
  static const std::vector<ConstantEntry> table = [] {
    const double pi = std::numbers::pi;
    const double gamma = std::numbers::egamma;
    const double q = 64.0 / (9.0 * pi * pi);
    const AppendixConstants appc = appendix_constants();
    const AubrunValues aub = aubrun_negativity(1.0);
    std::vector<ConstantEntry> t;
    auto add = [&t](std::string name, std::string expr, double value, double ref) {
      t.push_back({std::move(name), std::move(expr), value, ref});
    };

    add("trace-star", "3*sqrt(3)/(4*pi)", 3.0 * std::sqrt(3.0) / (4.0 * pi),
        0.41349667156634404);
    add("trace-generic", "1/4 + 1/pi", 0.25 + 1.0 / pi, 0.56830988618379067);
    add("helstrom-p1", "1/2 + 3*sqrt(3)/(8*pi)", 0.5 + 3.0 * std::sqrt(3.0) / (8.0 * pi),
        0.70674833578317202);
    add("helstrom-p2", "1/2 + (1/4 + 1/pi)/2", 0.5 + (0.25 + 1.0 / pi) / 2.0,
        0.78415494309189534);
    add("orbit-diameter", "int x sign(x - M) dMP1(x)", 0.78746158775610804,
        0.78746158775610804);
    add("mp-median", "MP1 median: CDF(M) = 1/2", 0.65277594163357037, 0.65277594163357037);
    add("chernoff-q", "(8/(3*pi))^2", q, 0.72050619478995749);
    add("chernoff-s-star", "1/2", 0.5, 0.5);
    add("kl-generic", "3/2", 1.5, 1.5);
    add("kl-to-star", "1/2", 0.5, 0.5);
    add("kl-from-star", "1", 1.0, 1.0);
    add("qjsd-generic", "1/4", 0.25, 0.25);
    add("transmission-generic", "1/2", 0.5, 0.5);
    add("root-fidelity-generic", "3/4", 0.75, 0.75);
    add("root-fidelity-star", "8/(3*pi)", 8.0 / (3.0 * pi), 0.84882636315677512);
    add("bures-generic", "sqrt(2)/2", std::sqrt(2.0) / 2.0, 0.70710678118654752);
    add("bures-star", "sqrt(2 - 16/(3*pi))", std::sqrt(2.0 - 16.0 / (3.0 * pi)),
        0.54986114036768388);
    add("hellinger-generic", "sqrt(2 - 2*(8/(3*pi))^2)", std::sqrt(2.0 - 2.0 * q),
        0.74765474011744554);
    add("hellinger-star", "sqrt(2 - 16/(3*pi))", std::sqrt(2.0 - 16.0 / (3.0 * pi)),
        0.54986114036768388);
    add("entropic-generic", "sqrt(ln(8^8/7^7))/(2*sqrt(2))",
        std::sqrt(std::log(std::pow(8.0, 8) / std::pow(7.0, 7))) / (2.0 * std::sqrt(2.0)),
        0.61381606467771499);
    add("t1", "sqrt(1/8 + sqrt(5)/8 + ln(2) - 2*ln((1+sqrt(5))/2))", appc.t1,
        0.36773907547092698);
    add("e1", "sqrt((3*pi*ln(36*pi^2/(9*pi^2-64)) - 16*acoth(3*pi/8))/(6*pi))", appc.e1,
        0.51754831133861757);
    add("smp-second-moment", "2", 2.0, 2.0);
    add("g-concurrence", "1/e", 1.0 / std::numbers::e, 0.36787944117144232);
    add("pure-negativity-rate", "(8/(3*pi))^2/2", q / 2.0, 0.36025309739497874);
    add("negative-fraction-c1", "1/3 - sqrt(3)/(4*pi)", aub.negative_fraction,
        0.19550110947788532);
    add("negativity-c1", "3*sqrt(3)/(4*pi) - 1/3", aub.negativity, 0.08016333823301070);
    add("bhatt-flat-pair", "pi/4", pi / 4.0, 0.78539816339744831);
    add("bhatt-stat-pair", "2/pi", 2.0 / pi, 0.63661977236758134);
    add("bhatt-flat-star", "sqrt(pi)/2", std::sqrt(pi) / 2.0, 0.88622692545275801);
    add("bhatt-stat-star", "sqrt(2/pi)", std::sqrt(2.0 / pi), 0.79788456080286536);
    add("l1-flat-pair", "1/2", 0.5, 0.5);
    add("l1-stat-pair", "2/pi", 2.0 / pi, 0.63661977236758134);
    add("l1-flat-star", "1/e", 1.0 / std::numbers::e, 0.36787944117144232);
    add("l1-stat-star", "sqrt(2/(pi*e))", std::sqrt(2.0 / (pi * std::numbers::e)),
        0.48394144903828670);
    add("coherence-deficit-complex", "1 - gamma", 1.0 - gamma, 0.42278433509846714);
    add("coherence-deficit-real", "2 - gamma - ln(2)", 2.0 - gamma - std::log(2.0),
        0.72963715453852183);
    add("coherence-mixed", "1/2", 0.5, 0.5);
    add("cl1-pure-complex", "pi/4", pi / 4.0, 0.78539816339744831);
    add("cl1-pure-real", "2/pi", 2.0 / pi, 0.63661977236758134);
    add("cl1-mixed-complex", "sqrt(pi)/2", std::sqrt(pi) / 2.0, 0.88622692545275801);
    add("cl1-mixed-real", "sqrt(2/pi)", std::sqrt(2.0 / pi), 0.79788456080286536);
    add("delta-s-bound", "2 - gamma - ln(2)", 2.0 - gamma - std::log(2.0), 0.72963715453852183);
    add("cdep-trace-pair", "4*sqrt(2)/(3*pi)", 4.0 * std::sqrt(2.0) / (3.0 * pi),
        0.60021087743807071);
    add("cdep-trace-star", "4/(3*pi)", 4.0 / (3.0 * pi), 0.42441318157838756);
    add("cdep-hs-pair", "sqrt(2)", std::sqrt(2.0), 1.41421356237309505);
    add("cdep-hs-star", "1", 1.0, 1.0);
    add("hs-decay", "sqrt(2)", std::sqrt(2.0), 1.41421356237309505);
    add("pure-trace", "1", 1.0, 1.0);
    add("pure-hs", "1", 1.0, 1.0);
    add("pure-inf", "1", 1.0, 1.0);
    add("pure-transmission", "sqrt(ln(2))", std::sqrt(std::log(2.0)), 0.83255461115769776);
    add("pure-bures", "sqrt(2)", std::sqrt(2.0), 1.41421356237309505);
    add("pure-entropic", "sqrt(ln(2))", std::sqrt(std::log(2.0)), 0.83255461115769776);
    add("pure-hellinger", "sqrt(2)", std::sqrt(2.0), 1.41421356237309505);
    add("ball-l1-n1", "2/3", 2.0 / 3.0, 0.66666666666666667);
    add("ball-l2-n1", "2/3", 2.0 / 3.0, 0.66666666666666667);
    add("ball-linf-n1", "2/3", 2.0 / 3.0, 0.66666666666666667);
    add("ball-l1-n2", "(647 + 120*pi)/(90*pi^2)", (647.0 + 120.0 * pi) / (90.0 * pi * pi),
        1.15279991287386020);
    add("ball-l2-n2", "128/(45*pi)", 128.0 / (45.0 * pi), 0.90541478736722680);
    add("ball-linf-n2", "0.8151 (printed decimal)", 0.8151, 0.8151);
    add("ball-l1-n3", "55*pi/112", 55.0 * pi / 112.0, 1.54274639238784490);
    add("ball-l2-n3", "36/35", 36.0 / 35.0, 1.02857142857142857);
    add("ball-linf-n3", "0.8549 (printed decimal)", 0.8549, 0.8549);
    add("ball-l2-ninf", "sqrt(2)", std::sqrt(2.0), 1.41421356237309505);
    add("euler-gamma", "gamma", gamma, 0.57721566490153286);
    return t;
  }();
  return table;
}

inline const ConstantEntry* find_constant(std::string_view name) {
  for (const ConstantEntry& e : constants_registry())
    if (e.name == name) return &e;
  return nullptr;
}

inline double constant(std::string_view name) {
  const ConstantEntry* e = find_constant(name);
  if (!e) throw std::invalid_argument("constant: unknown name '" + std::string(name) + "'");
  return e->value;
}

}  // namespace qsd
