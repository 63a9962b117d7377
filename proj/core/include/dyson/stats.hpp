#pragma once

#include <vector>

#include "dyson/hermitian.hpp"

namespace dyson {

struct KsResult {
  double statistic;
  double p_value;
};

// Two-sample Kolmogorov-Smirnov test. The p-value uses the asymptotic
// Kolmogorov tail 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 x^2) at
// x = sqrt(n_eff) D with n_eff = n1 n2 / (n1 + n2), truncated at 100 terms;
// approximate, so acceptance thresholds are kept loose.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

double kolmogorov_tail(double x);

struct Histogram {
  RealVector edges;  // bins + 1 entries; last bin absorbs overflow
  RealVector mass;   // sums to 1
};

// Nearest-neighbor gaps pooled across the given spectra, normalized to unit
// mean, binned over [0, s_max].
Histogram spacing_distribution(const std::vector<RealVector>& spectra,
                               int bins = 40, double s_max = 4.0);

// Wigner semicircle density (2 / (pi r^2)) sqrt(r^2 - x^2) on [-r, r].
double semicircle_reference(double x, double radius);

double sample_mean(const std::vector<double>& v);
double sample_variance(const std::vector<double>& v);

}  // namespace dyson
