#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdens/record.hpp"

namespace cdens::stats {

/// Empirical cumulative distribution function over a non-empty sample.
class Ecdf {
public:
    explicit Ecdf(std::vector<double> values);  // throws std::invalid_argument when empty

    /// Fraction of sample values <= x.
    double operator()(double x) const;
    /// Type-1 quantile (inverse ECDF with lower interpolation).
    double quantile(double p) const;
    const std::vector<double>& sorted_values() const { return sorted_; }
    /// (distinct value, cumulative fraction) pairs.
    std::vector<std::pair<double, double>> table() const;

private:
    std::vector<double> sorted_;
};

/// Fraction of records whose density is exactly 1.
double density_one_share(const std::vector<mine::CommitSizeRecord>& records);

/// Half-open size bucket lo <= x < hi.
struct SizePredicate {
    std::string name;
    double lo;
    double hi;
};

/// x<1, 1<=x<2, 2<=x<5.
std::vector<SizePredicate> default_size_predicates();

struct CondProbCell {
    char label;
    std::string predicate;
    std::optional<double> probability;  // empty when the predicate has no support
    std::int64_t support = 0;
};

/// P(label | predicate) for every (label, predicate) pair over parallel
/// (size value, label) samples.
std::vector<CondProbCell> conditional_probability_table(const std::vector<double>& sizes,
                                                        const std::vector<char>& labels,
                                                        const std::vector<SizePredicate>& predicates);

struct EffortInputs {
    double density = 0.0;     // in [0,1]
    double size_gross = 0.0;  // lines of code
    double time = 1.0;        // > 0, any consistent unit
};

struct EffortMetrics {
    double effort_gross;
    double effort_net;
    double productivity_gross;
    double productivity_net;
};

/// Size-per-time and effort-per-size measures; the net variants weight size
/// by density. Throws std::invalid_argument when time <= 0 or inputs are out
/// of range.
EffortMetrics effort_metrics(const EffortInputs& in);

struct SummaryRow {
    std::string group;      // "a", "c", "p" or "pooled"
    std::string measure;    // "files" or "loc"
    std::string variant;    // "gross" or "net"
    std::string statistic;  // "mean", "median", "min", "max"
    double value;
};

/// Per-label and pooled mean/median/min/max for gross and net files and LOC.
/// `labels` must be parallel to `records`, or empty for pooled-only output.
std::vector<SummaryRow> summary_stats(const std::vector<mine::CommitSizeRecord>& records,
                                      const std::vector<char>& labels);

double mean(const std::vector<double>& v);
double median(std::vector<double> v);  // lower-interpolation (type-1) median
double sample_sd(const std::vector<double>& v);
double pearson(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace cdens::stats
