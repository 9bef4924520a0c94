#pragma once

// Coupled quantum kicked tops: angular-momentum operators, the factored
// one-step Floquet map applied to the reshaped coefficient matrix (the full
// N1 N2 x N1 N2 unitary is never formed), reduced-state trajectories and
// pooled Helstrom spectra.
//
// One step applies, per top, the pi/2 rotation about J_y followed by the
// torsion phases exp(-i k m^2 / 2j), then the coupling phases
// exp(-i eps m1 m2 / jbar) with jbar = (j1+j2)/2.

#include <qsd/ensembles.hpp>
#include <qsd/stats.hpp>

#include <array>
#include <cmath>
#include <vector>

namespace qsd {

struct KickedTopConfig {
  double j1 = 49.5;
  double j2 = 49.5;
  double kick = 6.0;
  double eps = 0.01;
  int steps = 200;
  std::array<int, 2> initial_pair{0, 1};

  int dim1() const { return static_cast<int>(std::lround(2.0 * j1 + 1.0)); }
  int dim2() const { return static_cast<int>(std::lround(2.0 * j2 + 1.0)); }
  double c() const { return static_cast<double>(dim2()) / static_cast<double>(dim1()); }
};

struct SpinOperators {
  Matrix jy;
  Matrix jz;  // diagonal, entries m = -j..j ascending
};

inline SpinOperators build_spin_ops(double j) {
  const double two_j = 2.0 * j;
  if (j < 0.5 || std::abs(two_j - std::lround(two_j)) > 1e-9)
    throw std::invalid_argument("build_spin_ops: j must be a half-integer >= 1/2");
  const int n = static_cast<int>(std::lround(two_j + 1.0));
  Matrix jp = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    const double m = -j + i;
    jp(i + 1, i) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  SpinOperators ops;
  ops.jy = (jp - jp.adjoint()) / Complex(0.0, 2.0);
  ops.jz = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) ops.jz(i, i) = -j + i;
  return ops;
}

class CoupledTops {
 public:
  explicit CoupledTops(const KickedTopConfig& cfg) : cfg_(cfg) {
    rot1_ = rotation_half_pi(cfg.j1);
    rot2_t_ = rotation_half_pi(cfg.j2).transpose().eval();
    torsion1_ = torsion_phases(cfg.j1, cfg.kick);
    torsion2_ = torsion_phases(cfg.j2, cfg.kick);
    const int n1 = cfg.dim1(), n2 = cfg.dim2();
    const double jbar = (cfg.j1 + cfg.j2) / 2.0;
    coupling_.resize(n1, n2);
    for (int a = 0; a < n1; ++a) {
      const double m1 = -cfg.j1 + a;
      for (int b = 0; b < n2; ++b) {
        const double m2 = -cfg.j2 + b;
        coupling_(a, b) = std::polar(1.0, -cfg.eps * m1 * m2 / jbar);
      }
    }
  }

  const KickedTopConfig& config() const { return cfg_; }

  // One Floquet step on the n1 x n2 coefficient matrix, in place.
  void apply_floquet(Matrix& coeff) const {
    coeff = rot1_ * coeff;
    coeff = coeff * rot2_t_;
    coeff = torsion1_.asDiagonal() * coeff;
    coeff = coeff * torsion2_.asDiagonal();
    coeff = coeff.cwiseProduct(coupling_);
  }

  // |l> (x) |l> as a coefficient matrix; l must index both tops.
  Matrix basis_product_state(int l) const {
    const int n1 = cfg_.dim1(), n2 = cfg_.dim2();
    if (l < 0 || l >= std::min(n1, n2))
      throw std::invalid_argument("basis_product_state: index outside both tops");
    Matrix c = Matrix::Zero(n1, n2);
    c(l, l) = 1.0;
    return c;
  }

  // Full N1N2 x N1N2 one-step unitary; oracle for small dimensions.
  Matrix dense_floquet() const {
    const int n1 = cfg_.dim1(), n2 = cfg_.dim2();
    Matrix u1 = torsion1_.asDiagonal() * rot1_;
    Matrix u2 = torsion2_.asDiagonal() * rot2_t_.transpose();
    Matrix u = kron(u1, u2);
    for (int a = 0; a < n1; ++a)
      for (int b = 0; b < n2; ++b) u.row(a * n2 + b) *= coupling_(a, b);
    return u;
  }

  static DensityMatrix reduced_state(const Matrix& coeff) {
    Matrix rho = coeff * coeff.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(((rho + rho.adjoint()) / 2.0).eval());
  }

 private:
  static Matrix rotation_half_pi(double j) {
    const SpinOperators ops = build_spin_ops(j);
    const EigResult eig = eig_hermitian(ops.jy);
    const int n = static_cast<int>(eig.values.size());
    Vector phases(n);
    for (int i = 0; i < n; ++i) phases[i] = std::polar(1.0, -std::numbers::pi / 2.0 * eig.values[i]);
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
  }

  static Vector torsion_phases(double j, double kick) {
    const int n = static_cast<int>(std::lround(2.0 * j + 1.0));
    Vector out(n);
    for (int i = 0; i < n; ++i) {
      const double m = -j + i;
      out[i] = std::polar(1.0, -kick / (2.0 * j) * m * m);
    }
    return out;
  }

  KickedTopConfig cfg_;
  Matrix rot1_, rot2_t_;
  Vector torsion1_, torsion2_;
  Matrix coupling_;
};

struct RelaxationPoint {
  int t = 0;
  double trace_distance = 0.0;
};

// Trace distance between the two reduced trajectories started from the
// orthogonal products |l1,l1> and |l2,l2>; length steps+1, D(0) = 1.
inline std::vector<RelaxationPoint> evolve_reduced_pair(const KickedTopConfig& cfg) {
  if (cfg.initial_pair[0] == cfg.initial_pair[1])
    throw std::invalid_argument("evolve_reduced_pair: initial indices must differ");
  const CoupledTops tops(cfg);
  Matrix c1 = tops.basis_product_state(cfg.initial_pair[0]);
  Matrix c2 = tops.basis_product_state(cfg.initial_pair[1]);
  std::vector<RelaxationPoint> out;
  out.reserve(cfg.steps + 1);
  for (int t = 0; t <= cfg.steps; ++t) {
    if (t > 0) {
      tops.apply_floquet(c1);
      tops.apply_floquet(c2);
    }
    const Matrix gamma = c1 * c1.adjoint() - c2 * c2.adjoint();
    out.push_back({t, 0.5 * eigenvalues(gamma).cwiseAbs().sum()});
  }
  return out;
}

// Pooled spectrum of Gamma = sigma1 - sigma2 harvested after
// harvest_steps, rescaled by the environment dimension N2 (= c N1), the
// scaling under which the spectrum follows SMP(c). Realizations differ by
// the initial basis pair (l, l'), drawn without replacement from a
// deterministic shuffle of all pairs and cycled if exhausted.
inline Spectrum helstrom_spectrum(const KickedTopConfig& cfg, int realizations, int harvest_steps,
                                  RandomStream& stream, int threads = 1) {
  if (realizations < 1)
    throw std::invalid_argument("helstrom_spectrum: need at least one realization");
  const CoupledTops tops(cfg);
  const int n1 = cfg.dim1(), n2 = cfg.dim2();
  const int pool = std::min(n1, n2);

  std::vector<std::array<int, 2>> pairs;
  for (int a = 0; a < pool; ++a)
    for (int b = a + 1; b < pool; ++b) pairs.push_back({a, b});
  for (std::size_t i = pairs.size(); i > 1; --i)
    std::swap(pairs[i - 1], pairs[stream.uniform_below(i)]);

  std::vector<std::vector<double>> per_real(realizations);
  parallel_for(static_cast<std::size_t>(realizations), threads, [&](std::size_t r) {
    const auto& pr = pairs[r % pairs.size()];
    Matrix c1 = tops.basis_product_state(pr[0]);
    Matrix c2 = tops.basis_product_state(pr[1]);
    for (int t = 0; t < harvest_steps; ++t) {
      tops.apply_floquet(c1);
      tops.apply_floquet(c2);
    }
    const Matrix gamma = c1 * c1.adjoint() - c2 * c2.adjoint();
    RealVector vals = eigenvalues(gamma) * static_cast<double>(n2);
    per_real[r].assign(vals.data(), vals.data() + vals.size());
  });

  Spectrum spec;
  spec.rescale = Rescale::by_k;
  spec.scale = static_cast<double>(n2);
  for (const auto& v : per_real) spec.values.insert(spec.values.end(), v.begin(), v.end());
  std::sort(spec.values.begin(), spec.values.end());
  return spec;
}

}  // namespace qsd
