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

#include "ftlab/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace ftlab {

namespace {

// Regularized lower incomplete gamma by series expansion (x < a+1).
double gamma_p_series(double a, double x) {
    double sum = 1.0 / a;
    double term = sum;
    for (int k = 1; k < 500; k++) {
        term *= x / (a + k);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-15) {
            break;
        }
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper incomplete gamma by Lentz continued fraction (x >= a+1).
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; i++) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) {
            d = tiny;
        }
        c = b + an / c;
        if (std::abs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) {
            break;
        }
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_q(double a, double x) {
    if (a <= 0 || x < 0) {
        throw std::invalid_argument("gamma_q requires a > 0, x >= 0");
    }
    if (x == 0) {
        return 1.0;
    }
    if (x < a + 1.0) {
        return 1.0 - gamma_p_series(a, x);
    }
    return gamma_q_cf(a, x);
}

double chi2_sf(double statistic, double df) {
    if (statistic <= 0) {
        return 1.0;
    }
    return gamma_q(df / 2.0, statistic / 2.0);
}

Chi2Result chi2_goodness_of_fit(const std::vector<uint64_t>& observed,
                                const std::vector<double>& expected_probs) {
    if (observed.size() != expected_probs.size() || observed.size() < 2) {
        throw std::invalid_argument("chi2 needs matching bins (>= 2)");
    }
    uint64_t total = 0;
    for (uint64_t o : observed) {
        total += o;
    }
    // Pool bins whose expected count is below 5 into one remainder bin.
    std::vector<double> exp_counts;
    std::vector<double> obs_counts;
    double pooled_exp = 0, pooled_obs = 0;
    for (size_t i = 0; i < observed.size(); i++) {
        double e = expected_probs[i] * double(total);
        if (e < 5.0) {
            pooled_exp += e;
            pooled_obs += double(observed[i]);
        } else {
            exp_counts.push_back(e);
            obs_counts.push_back(double(observed[i]));
        }
    }
    if (pooled_exp > 0) {
        exp_counts.push_back(pooled_exp);
        obs_counts.push_back(pooled_obs);
    }
    if (exp_counts.size() < 2) {
        throw std::invalid_argument("chi2: too few populated bins after pooling");
    }
    double stat = 0;
    for (size_t i = 0; i < exp_counts.size(); i++) {
        double diff = obs_counts[i] - exp_counts[i];
        stat += diff * diff / exp_counts[i];
    }
    double df = double(exp_counts.size() - 1);
    return {stat, df, chi2_sf(stat, df)};
}

Chi2Result chi2_two_sample(const std::map<std::string, uint64_t>& a,
                           const std::map<std::string, uint64_t>& b) {
    double na = 0, nb = 0;
    for (const auto& [k, v] : a) {
        na += double(v);
    }
    for (const auto& [k, v] : b) {
        nb += double(v);
    }
    if (na == 0 || nb == 0) {
        throw std::invalid_argument("chi2_two_sample: empty sample");
    }
    // Union of keys, pooling rare outcomes (pooled expectation < 5).
    std::map<std::string, std::pair<double, double>> cells;
    for (const auto& [k, v] : a) {
        cells[k].first += double(v);
    }
    for (const auto& [k, v] : b) {
        cells[k].second += double(v);
    }
    double stat = 0;
    int used_bins = 0;
    double pool_a = 0, pool_b = 0;
    auto add_cell = [&](double oa, double ob) {
        double pooled = (oa + ob) / (na + nb);
        double ea = pooled * na, eb = pooled * nb;
        stat += (oa - ea) * (oa - ea) / ea + (ob - eb) * (ob - eb) / eb;
        used_bins++;
    };
    for (const auto& [k, cell] : cells) {
        double expect_min = (cell.first + cell.second) / (na + nb) * std::min(na, nb);
        if (expect_min < 5.0) {
            pool_a += cell.first;
            pool_b += cell.second;
        } else {
            add_cell(cell.first, cell.second);
        }
    }
    if (pool_a + pool_b > 0) {
        add_cell(pool_a, pool_b);
    }
    if (used_bins < 2) {
        // Distributions concentrated on one outcome; nothing to test.
        return {0.0, 1.0, 1.0};
    }
    double df = double(used_bins - 1);
    return {stat, df, chi2_sf(stat, df)};
}

WilsonInterval wilson_interval(uint64_t successes, uint64_t trials, double z) {
    if (trials == 0) {
        return {0.0, 1.0};
    }
    double n = double(trials);
    double p = double(successes) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (p + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    // The endpoints are exact at the boundary counts; keep them free of
    // rounding fuzz so zero-failure runs report a clean [0, high] interval.
    double low = successes == 0 ? 0.0 : std::max(0.0, center - half);
    double high = successes == trials ? 1.0 : std::min(1.0, center + half);
    return {low, high};
}

double two_proportion_z(uint64_t k1, uint64_t n1, uint64_t k2, uint64_t n2) {
    if (n1 == 0 || n2 == 0) {
        throw std::invalid_argument("two_proportion_z: empty sample");
    }
    double p1 = double(k1) / double(n1);
    double p2 = double(k2) / double(n2);
    double var = p1 * (1 - p1) / double(n1) + p2 * (1 - p2) / double(n2);
    if (var == 0) {
        return p1 == p2 ? 0.0 : (p1 > p2 ? 1e9 : -1e9);
    }
    return (p1 - p2) / std::sqrt(var);
}

LinearFit weighted_linear_fit(const std::vector<double>& x, const std::vector<double>& y,
                              const std::vector<double>& weights) {
    size_t m = x.size();
    if (m < 2 || y.size() != m || weights.size() != m) {
        throw std::invalid_argument("weighted_linear_fit needs >= 2 matched points");
    }
    double sw = 0, swx = 0, swy = 0, swxx = 0, swxy = 0;
    for (size_t i = 0; i < m; i++) {
        sw += weights[i];
        swx += weights[i] * x[i];
        swy += weights[i] * y[i];
        swxx += weights[i] * x[i] * x[i];
        swxy += weights[i] * x[i] * y[i];
    }
    double det = sw * swxx - swx * swx;
    if (det <= 0) {
        throw std::invalid_argument("degenerate design matrix in linear fit");
    }
    LinearFit fit;
    fit.intercept = (swxx * swy - swx * swxy) / det;
    fit.slope = (sw * swxy - swx * swy) / det;
    fit.intercept_stderr = std::sqrt(swxx / det);
    fit.slope_stderr = std::sqrt(sw / det);
    fit.residuals.resize(m);
    for (size_t i = 0; i < m; i++) {
        fit.residuals[i] = y[i] - (fit.intercept + fit.slope * x[i]);
    }
    return fit;
}

std::pair<double, double> weighted_intercept_fixed_slope(const std::vector<double>& x,
                                                         const std::vector<double>& y,
                                                         const std::vector<double>& weights,
                                                         double fixed_slope) {
    size_t m = x.size();
    if (m < 1 || y.size() != m || weights.size() != m) {
        throw std::invalid_argument("fixed-slope fit needs matched points");
    }
    double sw = 0, s = 0;
    for (size_t i = 0; i < m; i++) {
        sw += weights[i];
        s += weights[i] * (y[i] - fixed_slope * x[i]);
    }
    if (sw <= 0) {
        throw std::invalid_argument("fixed-slope fit needs positive weights");
    }
    return {s / sw, std::sqrt(1.0 / sw)};
}

}  // namespace ftlab
