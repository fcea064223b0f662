#include "centrality/ranks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "centrality/util.hpp"

namespace centrality {

std::vector<double> rank_transform(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 0) throw std::invalid_argument("rank_transform: empty input");
  for (double v : values) {
    if (std::isnan(v)) throw std::invalid_argument("rank_transform: NaN input");
  }
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return values[a] > values[b];
  });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[idx[j + 1]] == values[idx[i]]) ++j;
    // positions i+1 .. j+1 (1-based) share their mean rank
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double rank_scale(double rank, std::size_t n) {
  return 2.0 * (rank / static_cast<double>(n)) - 1.0;
}

double rank_unscale(double scaled, std::size_t n) {
  return (scaled + 1.0) * 0.5 * static_cast<double>(n);
}

std::vector<double> rank_scale(std::span<const double> ranks, std::size_t n) {
  std::vector<double> out(ranks.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) out[i] = rank_scale(ranks[i], n);
  return out;
}

NormalizationStats compute_stats(std::span<const double> values) {
  if (values.size() < 2) throw std::invalid_argument("degenerate feature");
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  if (stddev == 0.0 || !std::isfinite(stddev))
    throw std::invalid_argument("degenerate feature");
  return {mean, stddev};
}

double apply_stats(double value, const NormalizationStats& s) {
  return (value - s.mean) / s.stddev;
}

double invert_stats(double value, const NormalizationStats& s) {
  return value * s.stddev + s.mean;
}

namespace {

// Counts strictly-descending pairs (i < j with y[i] > y[j]) by merge sort.
std::uint64_t merge_count_inversions(std::vector<double>& y, std::vector<double>& tmp,
                                     std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t inv = merge_count_inversions(y, tmp, lo, mid) +
                      merge_count_inversions(y, tmp, mid, hi);
  std::size_t a = lo, b = mid, o = lo;
  while (a < mid && b < hi) {
    if (y[b] < y[a]) {
      inv += mid - a;  // every remaining left element exceeds y[b]
      tmp[o++] = y[b++];
    } else {
      tmp[o++] = y[a++];
    }
  }
  while (a < mid) tmp[o++] = y[a++];
  while (b < hi) tmp[o++] = y[b++];
  std::copy(tmp.begin() + static_cast<std::ptrdiff_t>(lo),
            tmp.begin() + static_cast<std::ptrdiff_t>(hi),
            y.begin() + static_cast<std::ptrdiff_t>(lo));
  return inv;
}

std::uint64_t tied_pairs(std::vector<double> sorted) {
  std::uint64_t t = 0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
    const std::uint64_t run = j - i + 1;
    t += run * (run - 1) / 2;
    i = j + 1;
  }
  return t;
}

}  // namespace

double kendall_tau_b(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size()) throw std::invalid_argument("tau: length mismatch");
  if (n < 2) throw std::invalid_argument("tau undefined");
  for (std::size_t i = 0; i < n; ++i) {
    if (std::isnan(x[i]) || std::isnan(y[i]))
      throw std::invalid_argument("tau: NaN input");
  }

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (x[a] != x[b]) return x[a] < x[b];
    return y[a] < y[b];
  });

  // n1: pairs tied in x; n3: pairs tied in both (within an x-run, y is sorted)
  std::uint64_t n1 = 0, n3 = 0;
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = y[idx[i]];
  {
    std::size_t i = 0;
    while (i < n) {
      std::size_t j = i;
      while (j + 1 < n && x[idx[j + 1]] == x[idx[i]]) ++j;
      const std::uint64_t run = j - i + 1;
      n1 += run * (run - 1) / 2;
      std::size_t a = i;
      while (a <= j) {
        std::size_t b = a;
        while (b + 1 <= j && ys[b + 1] == ys[a]) ++b;
        const std::uint64_t t = b - a + 1;
        n3 += t * (t - 1) / 2;
        a = b + 1;
      }
      i = j + 1;
    }
  }

  std::vector<double> y_sorted(y.begin(), y.end());
  std::sort(y_sorted.begin(), y_sorted.end());
  const std::uint64_t n2 = tied_pairs(std::move(y_sorted));
  std::vector<double> tmp(n);
  const std::uint64_t discordant = merge_count_inversions(ys, tmp, 0, n);

  const std::uint64_t n0 = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (n0 == n1 || n0 == n2) throw std::invalid_argument("tau undefined");
  const std::uint64_t concordant = n0 - n1 - n2 + n3 - discordant;
  const std::int64_t numer =
      static_cast<std::int64_t>(concordant) - static_cast<std::int64_t>(discordant);
  return static_cast<double>(numer) /
         std::sqrt(static_cast<double>(n0 - n1) * static_cast<double>(n0 - n2));
}

double r_squared(std::span<const double> pred, std::span<const double> target) {
  if (pred.size() != target.size() || pred.size() < 2)
    throw std::invalid_argument("r_squared: bad lengths");
  double mean = 0.0;
  for (double t : target) mean += t;
  mean /= static_cast<double>(target.size());
  double ss_tot = 0.0, ss_res = 0.0;
  for (std::size_t i = 0; i < target.size(); ++i) {
    ss_tot += (target[i] - mean) * (target[i] - mean);
    ss_res += (pred[i] - target[i]) * (pred[i] - target[i]);
  }
  if (ss_tot == 0.0) throw std::invalid_argument("r_squared: constant target");
  return 1.0 - ss_res / ss_tot;
}

double mean_squared_error(std::span<const double> pred, std::span<const double> target) {
  if (pred.size() != target.size() || pred.empty())
    throw std::invalid_argument("mse: bad lengths");
  double acc = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    acc += (pred[i] - target[i]) * (pred[i] - target[i]);
  }
  return acc / static_cast<double>(pred.size());
}

MeanCi mean_ci99(std::span<const double> values) {
  MeanCi out;
  out.count = values.size();
  if (values.empty()) return out;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  out.mean = mean;
  if (values.size() < 2) return out;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
  out.half_width = 2.576 * sd / std::sqrt(static_cast<double>(values.size()));
  return out;
}

const char* const kEvalReportCsvHeader = "network,method,metric,tau_b,r2,mse,seconds";

std::string eval_report_csv_row(const EvalReport& row) {
  std::ostringstream out;
  out << row.network << ',' << row.method << ',' << row.metric << ','
      << format_double(row.tau_b) << ',' << format_double(row.r_squared) << ','
      << format_double(row.mse) << ',' << format_double(row.seconds);
  return out.str();
}

std::string eval_reports_to_csv(std::span<const EvalReport> rows) {
  std::string out = kEvalReportCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += eval_report_csv_row(r);
    out += '\n';
  }
  return out;
}

std::vector<EvalReport> eval_reports_from_csv(const std::string& text) {
  std::vector<EvalReport> rows;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line == kEvalReportCsvHeader) continue;
    }
    std::istringstream ls(line);
    EvalReport r;
    std::string field;
    auto next = [&](std::string& dst) {
      if (!std::getline(ls, dst, ',')) throw std::invalid_argument("bad eval csv row: " + line);
    };
    next(r.network);
    next(r.method);
    next(r.metric);
    next(field); r.tau_b = std::stod(field);
    next(field); r.r_squared = std::stod(field);
    next(field); r.mse = std::stod(field);
    next(field); r.seconds = std::stod(field);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace centrality
