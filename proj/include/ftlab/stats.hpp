// Copyright 2026 The ftlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ftlab {

/// Upper regularized incomplete gamma Q(a, x) = Gamma(a,x)/Gamma(a).
double gamma_q(double a, double x);

/// Survival function of the chi-squared distribution with df degrees.
double chi2_sf(double statistic, double df);

struct Chi2Result {
    double statistic;
    double df;
    double p_value;
};

/// Pearson test of observed counts against expected probabilities.
/// Low-expectation bins (< 5) are pooled into the smallest neighbor.
Chi2Result chi2_goodness_of_fit(const std::vector<uint64_t>& observed,
                                const std::vector<double>& expected_probs);

/// Two-sample homogeneity test over arbitrary outcome keys.
Chi2Result chi2_two_sample(const std::map<std::string, uint64_t>& a,
                           const std::map<std::string, uint64_t>& b);

struct WilsonInterval {
    double low;
    double high;
};

/// 95% Wilson score interval; well behaved at zero counts.
WilsonInterval wilson_interval(uint64_t successes, uint64_t trials, double z = 1.959963984540054);

/// Two-proportion z statistic (unpooled), positive when p1 > p2.
double two_proportion_z(uint64_t k1, uint64_t n1, uint64_t k2, uint64_t n2);

/// Weighted least squares for y = a + b*x.
struct LinearFit {
    double intercept;
    double slope;
    double intercept_stderr;
    double slope_stderr;
    std::vector<double> residuals;
};
LinearFit weighted_linear_fit(const std::vector<double>& x, const std::vector<double>& y,
                              const std::vector<double>& weights);

/// Weighted mean of y - fixed_slope*x, i.e. the intercept when the slope is
/// pinned; returns {intercept, stderr}.
std::pair<double, double> weighted_intercept_fixed_slope(const std::vector<double>& x,
                                                         const std::vector<double>& y,
                                                         const std::vector<double>& weights,
                                                         double fixed_slope);

}  // namespace ftlab
