#pragma once

// Sample statistics: Kolmogorov-Smirnov distances (law-aware, conditioning
// out a point mass at zero), histograms, mean / standard error with a fixed
// pairwise reduction topology, and an index-deterministic parallel map.

#include <qsd/limit_laws.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

namespace qsd {

// Fixed-topology pairwise sum: result depends only on element order, not on
// thread count or chunking.
inline double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

struct MeanStderr {
  double mean = 0.0;
  double se = 0.0;
  std::size_t n = 0;
};

inline MeanStderr mean_stderr(std::span<const double> v) {
  MeanStderr out;
  out.n = v.size();
  if (v.empty()) return out;
  out.mean = pairwise_sum(v) / static_cast<double>(v.size());
  if (v.size() < 2) return out;
  std::vector<double> sq(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) sq[i] = (v[i] - out.mean) * (v[i] - out.mean);
  const double var = pairwise_sum(sq) / static_cast<double>(v.size() - 1);
  out.se = std::sqrt(var / static_cast<double>(v.size()));
  return out;
}

// Runs fn(i) for i in [0, n) across the given number of threads. Work is
// striped by index; all writes go to caller-owned slots, so results are
// independent of the thread count.
inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const int nt = std::min<int>(threads, static_cast<int>(n));
  std::vector<std::thread> pool;
  pool.reserve(nt);
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = static_cast<std::size_t>(t); i < n; i += static_cast<std::size_t>(nt))
          fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

// Two-sided KS statistic of a sample against a continuous CDF.
inline double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max(d, (static_cast<double>(i) + 1.0) / n - f);
    d = std::max(d, f - static_cast<double>(i) / n);
  }
  return d;
}

// KS distance between a pooled spectrum and a limit law. When the law has an
// atom at zero, samples snapped to zero are removed and the rest compared
// against the continuous part conditioned on being nonzero.
inline double ks_distance_to_law(const std::vector<double>& sample, const LimitLaw& law,
                                 double snap_zero_tol = 1e-8) {
  TabulatedCdf cdf(law);
  const double atom = law.atom0();
  std::vector<double> kept;
  kept.reserve(sample.size());
  for (double x : sample)
    if (atom <= 0.0 || std::abs(x) > snap_zero_tol) kept.push_back(x);
  const double cont = 1.0 - atom;
  auto conditional = [&](double x) {
    double f = cdf(x);
    if (atom > 0.0 && x >= 0.0) f -= atom;
    return atom > 0.0 ? f / cont : f;
  };
  return ks_distance(std::move(kept), conditional);
}

struct Histogram {
  double lo = 0.0, hi = 1.0;
  std::vector<std::size_t> counts;
  std::size_t total = 0;  // including out-of-range
  std::size_t underflow = 0, overflow = 0;

  Histogram(double lo_, double hi_, std::size_t bins) : lo(lo_), hi(hi_), counts(bins, 0) {}

  void add(double x) {
    ++total;
    if (x < lo) {
      ++underflow;
      return;
    }
    if (x >= hi) {
      ++overflow;
      return;
    }
    const auto bin = static_cast<std::size_t>((x - lo) / (hi - lo) * counts.size());
    ++counts[std::min(bin, counts.size() - 1)];
  }

  double bin_center(std::size_t i) const {
    return lo + (hi - lo) * (static_cast<double>(i) + 0.5) / counts.size();
  }

  // Probability density normalized over all recorded samples.
  double density(std::size_t i) const {
    const double width = (hi - lo) / counts.size();
    return total == 0 ? 0.0 : counts[i] / (width * static_cast<double>(total));
  }
};

}  // namespace qsd
