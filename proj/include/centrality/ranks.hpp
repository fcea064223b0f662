#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace centrality {

// Tie-averaged ranks: rank 1 is the largest value, tied values share the
// mean of the positions they span. Throws on NaN input.
std::vector<double> rank_transform(std::span<const double> values);

struct NormalizationStats {
  double mean = 0.0;
  double stddev = 1.0;
};

// Steps 1-2 of the normalization chain: r/n, then 2x-1, mapping ranks
// [1, n] into (-1, 1].
double rank_scale(double rank, std::size_t n);
double rank_unscale(double scaled, std::size_t n);
std::vector<double> rank_scale(std::span<const double> ranks, std::size_t n);

// Step 3: z-score. Stats are computed on training data only and stored with
// the model; stddev uses the n-1 divisor. Throws "degenerate feature" when
// the stddev is zero (or fewer than two samples).
NormalizationStats compute_stats(std::span<const double> values);
double apply_stats(double value, const NormalizationStats& s);
double invert_stats(double value, const NormalizationStats& s);

// Tie-corrected Kendall tau-b via an O(n log n) merge count:
// (C - D) / sqrt((n0 - n1) (n0 - n2)) with n0 = n(n-1)/2, n1/n2 the pair
// counts tied in x/in y. Throws "tau undefined" when either argument is
// entirely tied.
double kendall_tau_b(std::span<const double> x, std::span<const double> y);

// 1 - SSres/SStot. Throws on constant target.
double r_squared(std::span<const double> pred, std::span<const double> target);
double mean_squared_error(std::span<const double> pred, std::span<const double> target);

struct MeanCi {
  double mean = 0.0;
  double half_width = 0.0;  // 2.576 * sample std / sqrt(k)
  std::size_t count = 0;
};

MeanCi mean_ci99(std::span<const double> values);

struct EvalReport {
  std::string network;
  std::string method;
  std::string metric;
  double tau_b = 0.0;
  double r_squared = 0.0;
  double mse = 0.0;
  double seconds = 0.0;
};

extern const char* const kEvalReportCsvHeader;  // network,method,metric,tau_b,r2,mse,seconds

std::string eval_report_csv_row(const EvalReport& row);
std::string eval_reports_to_csv(std::span<const EvalReport> rows);
std::vector<EvalReport> eval_reports_from_csv(const std::string& text);

}  // namespace centrality
