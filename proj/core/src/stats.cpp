#include "dyson/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dyson/errors.hpp"

namespace dyson {

double kolmogorov_tail(double x) {
  if (x <= 0.0) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 == 1) ? term : -term;
    if (term < 1e-18) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw EmptySample("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  double d = 0.0;
  std::size_t ia = 0;
  std::size_t ib = 0;
  while (ia < na && ib < nb) {
    const double x = std::min(a[ia], b[ib]);
    while (ia < na && a[ia] <= x) ++ia;
    while (ib < nb && b[ib] <= x) ++ib;
    d = std::max(d, std::abs(static_cast<double>(ia) / na -
                             static_cast<double>(ib) / nb));
  }
  const double n_eff = static_cast<double>(na) * nb / (na + nb);
  return {d, kolmogorov_tail(std::sqrt(n_eff) * d)};
}

Histogram spacing_distribution(const std::vector<RealVector>& spectra,
                               int bins, double s_max) {
  std::vector<double> gaps;
  for (const auto& lam : spectra) {
    for (Eigen::Index j = 0; j + 1 < lam.size(); ++j) {
      gaps.push_back(lam[j + 1] - lam[j]);
    }
  }
  if (gaps.empty()) throw EmptySample("spacing_distribution: no gaps");
  const double mean =
      std::accumulate(gaps.begin(), gaps.end(), 0.0) / gaps.size();
  Histogram h;
  h.edges.resize(bins + 1);
  for (int i = 0; i <= bins; ++i) h.edges[i] = s_max * i / bins;
  h.mass = RealVector::Zero(bins);
  const double w = 1.0 / static_cast<double>(gaps.size());
  for (double g : gaps) {
    const double s = (mean > 0.0) ? g / mean : 0.0;
    int bin = static_cast<int>(std::floor(s / s_max * bins));
    bin = std::clamp(bin, 0, bins - 1);  // overflow into the last bin
    h.mass[bin] += w;
  }
  return h;
}

double semicircle_reference(double x, double radius) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("semicircle_reference: radius <= 0");
  }
  if (std::abs(x) >= radius) return 0.0;
  return 2.0 / (M_PI * radius * radius) * std::sqrt(radius * radius - x * x);
}

double sample_mean(const std::vector<double>& v) {
  if (v.empty()) throw EmptySample("sample_mean: empty");
  return std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

double sample_variance(const std::vector<double>& v) {
  if (v.size() < 2) throw EmptySample("sample_variance: need >= 2 values");
  const double m = sample_mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / (v.size() - 1);
}

}  // namespace dyson
