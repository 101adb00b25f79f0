#include "cdens/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cdens::stats {

Ecdf::Ecdf(std::vector<double> values) : sorted_(std::move(values)) {
    if (sorted_.empty()) throw std::invalid_argument("ecdf needs a non-empty sample");
    std::sort(sorted_.begin(), sorted_.end());
}

double Ecdf::operator()(double x) const {
    auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double Ecdf::quantile(double p) const {
    if (p <= 0.0) return sorted_.front();
    if (p >= 1.0) return sorted_.back();
    // type-1: smallest x with ECDF(x) >= p
    std::size_t k = static_cast<std::size_t>(
        std::ceil(p * static_cast<double>(sorted_.size())));
    if (k == 0) k = 1;
    return sorted_[k - 1];
}

std::vector<std::pair<double, double>> Ecdf::table() const {
    std::vector<std::pair<double, double>> out;
    std::size_t n = sorted_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (i + 1 < n && sorted_[i + 1] == sorted_[i]) continue;
        out.emplace_back(sorted_[i], static_cast<double>(i + 1) / static_cast<double>(n));
    }
    return out;
}

double density_one_share(const std::vector<mine::CommitSizeRecord>& records) {
    if (records.empty()) return 0.0;
    std::int64_t ones = 0;
    for (const auto& r : records)
        if (r.density == 1.0) ++ones;
    return static_cast<double>(ones) / static_cast<double>(records.size());
}

std::vector<SizePredicate> default_size_predicates() {
    return {{"x<1", -std::numeric_limits<double>::infinity(), 1.0},
            {"1<=x<2", 1.0, 2.0},
            {"2<=x<5", 2.0, 5.0}};
}

std::vector<CondProbCell> conditional_probability_table(const std::vector<double>& sizes,
                                                        const std::vector<char>& labels,
                                                        const std::vector<SizePredicate>& predicates) {
    if (sizes.size() != labels.size())
        throw std::invalid_argument("sizes and labels must be parallel");
    std::vector<CondProbCell> out;
    static const char kLabels[3] = {'a', 'c', 'p'};
    for (char label : kLabels) {
        for (const auto& pred : predicates) {
            std::int64_t support = 0, hits = 0;
            for (std::size_t i = 0; i < sizes.size(); ++i) {
                if (sizes[i] >= pred.lo && sizes[i] < pred.hi) {
                    ++support;
                    if (labels[i] == label) ++hits;
                }
            }
            CondProbCell cell;
            cell.label = label;
            cell.predicate = pred.name;
            cell.support = support;
            if (support > 0)
                cell.probability = static_cast<double>(hits) / static_cast<double>(support);
            out.push_back(std::move(cell));
        }
    }
    return out;
}

EffortMetrics effort_metrics(const EffortInputs& in) {
    if (!(in.time > 0.0)) throw std::invalid_argument("effort_metrics: time must be > 0");
    if (in.size_gross < 0.0) throw std::invalid_argument("effort_metrics: negative gross size");
    if (in.density < 0.0 || in.density > 1.0)
        throw std::invalid_argument("effort_metrics: density outside [0,1]");
    EffortMetrics m{};
    m.effort_gross = in.size_gross / in.time;
    m.effort_net = in.density * in.size_gross / in.time;  // = functionality / time
    m.productivity_gross = in.size_gross > 0.0 ? m.effort_gross / in.size_gross : 0.0;
    m.productivity_net = in.density / in.time;
    return m;
}

double mean(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    return v[(v.size() - 1) / 2];  // type-1 lower median
}

double sample_sd(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    double m = mean(v);
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("pearson needs two equal-length samples of size >= 2");
    double mx = mean(x), my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return sxy / std::sqrt(sxx) / std::sqrt(syy);
}

namespace {

struct Extract {
    const char* measure;
    const char* variant;
    double (*get)(const mine::CommitSizeRecord&);
};

const Extract kExtracts[4] = {
    {"files", "gross", [](const mine::CommitSizeRecord& r) { return static_cast<double>(r.gross_file_sum()); }},
    {"files", "net", [](const mine::CommitSizeRecord& r) { return static_cast<double>(r.net_file_sum()); }},
    {"loc", "gross", [](const mine::CommitSizeRecord& r) { return static_cast<double>(r.gross_line_sum()); }},
    {"loc", "net", [](const mine::CommitSizeRecord& r) { return static_cast<double>(r.net_line_sum()); }},
};

void emit_group(std::vector<SummaryRow>& out, const std::string& group,
                const std::vector<const mine::CommitSizeRecord*>& records) {
    if (records.empty()) return;
    for (const auto& ex : kExtracts) {
        std::vector<double> v;
        v.reserve(records.size());
        for (const auto* r : records) v.push_back(ex.get(*r));
        out.push_back({group, ex.measure, ex.variant, "mean", mean(v)});
        out.push_back({group, ex.measure, ex.variant, "median", median(v)});
        out.push_back({group, ex.measure, ex.variant, "min", *std::min_element(v.begin(), v.end())});
        out.push_back({group, ex.measure, ex.variant, "max", *std::max_element(v.begin(), v.end())});
    }
}

}  // namespace

std::vector<SummaryRow> summary_stats(const std::vector<mine::CommitSizeRecord>& records,
                                      const std::vector<char>& labels) {
    if (!labels.empty() && labels.size() != records.size())
        throw std::invalid_argument("summary_stats: labels must be parallel to records");
    std::vector<SummaryRow> out;
    std::vector<const mine::CommitSizeRecord*> pooled;
    pooled.reserve(records.size());
    for (const auto& r : records) pooled.push_back(&r);

    if (!labels.empty()) {
        for (char label : {'a', 'c', 'p'}) {
            std::vector<const mine::CommitSizeRecord*> group;
            for (std::size_t i = 0; i < records.size(); ++i)
                if (labels[i] == label) group.push_back(&records[i]);
            emit_group(out, std::string(1, label), group);
        }
    }
    emit_group(out, "pooled", pooled);
    return out;
}

}  // namespace cdens::stats
