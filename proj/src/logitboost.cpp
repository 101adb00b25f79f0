#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cdens/learn.hpp"

namespace cdens::learn {

namespace {

constexpr double kZMax = 4.0;       // working-response clip
constexpr double kWeightFloor = 1e-10;

// Weighted least-squares stump over presorted feature orders. Falls back to
// a constant fit when no feature has two distinct values.
Stump fit_stump(const FeatureMatrix& m, const std::vector<std::vector<std::uint32_t>>& orders,
                const std::vector<double>& z, const std::vector<double>& w) {
    double w_total = 0.0, wz_total = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        w_total += w[i];
        wz_total += w[i] * z[i];
    }
    double base = wz_total * wz_total / w_total;  // score of the constant fit

    Stump best;
    best.feature = 0;
    best.threshold = std::numeric_limits<double>::infinity();
    best.left_value = best.right_value = wz_total / w_total;
    double best_score = base;

    for (std::size_t f = 0; f < orders.size(); ++f) {
        const auto& order = orders[f];
        double w_left = 0.0, wz_left = 0.0;
        for (std::size_t pos = 0; pos + 1 < order.size(); ++pos) {
            std::uint32_t i = order[pos];
            w_left += w[i];
            wz_left += w[i] * z[i];
            double a = m.at(i, f);
            double b = m.at(order[pos + 1], f);
            if (a == b) continue;
            double w_right = w_total - w_left;
            double wz_right = wz_total - wz_left;
            if (w_left <= 0.0 || w_right <= 0.0) continue;
            double score = wz_left * wz_left / w_left + wz_right * wz_right / w_right;
            if (score > best_score + 1e-12) {
                double thr = a + (b - a) / 2.0;
                if (thr >= b) thr = a;
                best_score = score;
                best.feature = static_cast<int>(f);
                best.threshold = thr;
                best.left_value = wz_left / w_left;
                best.right_value = wz_right / w_right;
            }
        }
    }
    return best;
}

void softmax_row(const double* f, double* p) {
    double mx = std::max({f[0], f[1], f[2]});
    double sum = 0.0;
    for (int j = 0; j < kNumClasses; ++j) {
        p[j] = std::exp(f[j] - mx);
        sum += p[j];
    }
    for (int j = 0; j < kNumClasses; ++j) p[j] /= sum;
}

}  // namespace

TrainedModel train_logitboost(const data::Dataset& train, const BoostConfig& config) {
    FeatureMatrix m = make_matrix(train);
    if (m.n_rows == 0) throw std::invalid_argument("train_logitboost: empty dataset");
    if (m.feature_names.empty()) throw std::invalid_argument("train_logitboost: no feature columns");
    std::array<std::int64_t, kNumClasses> counts{};
    for (int yi : m.y) {
        if (yi < 0) throw std::invalid_argument("train_logitboost: unlabeled row");
        ++counts[static_cast<std::size_t>(yi)];
    }
    if (std::count_if(counts.begin(), counts.end(), [](std::int64_t c) { return c > 0; }) < 2)
        throw std::invalid_argument("train_logitboost: single-class training set");

    std::size_t n = m.n_rows;
    std::size_t p = m.feature_names.size();

    // one argsort per feature, reused every round
    std::vector<std::vector<std::uint32_t>> orders(p);
    for (std::size_t f = 0; f < p; ++f) {
        auto& order = orders[f];
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            double va = m.at(a, f), vb = m.at(b, f);
            if (va != vb) return va < vb;
            return a < b;
        });
    }

    std::vector<double> F(n * kNumClasses, 0.0);
    std::vector<double> prob(n * kNumClasses, 1.0 / kNumClasses);
    std::vector<double> z(n), w(n), fj(kNumClasses);

    TrainedModel model;
    model.kind = ModelKind::LogitBoost;
    model.features = m.feature_names;
    model.boost.config = config;

    int rounds = std::max(1, config.n_iterations);
    const double factor = static_cast<double>(kNumClasses - 1) / kNumClasses;
    for (int round = 0; round < rounds; ++round) {
        std::array<Stump, kNumClasses> stumps;
        for (int j = 0; j < kNumClasses; ++j) {
            for (std::size_t i = 0; i < n; ++i) {
                double pij = prob[i * kNumClasses + static_cast<std::size_t>(j)];
                double wij = std::max(pij * (1.0 - pij), kWeightFloor);
                double y_star = m.y[i] == j ? 1.0 : 0.0;
                w[i] = wij;
                z[i] = std::clamp((y_star - pij) / wij, -kZMax, kZMax);
            }
            stumps[static_cast<std::size_t>(j)] = fit_stump(m, orders, z, w);
        }
        model.boost.rounds.push_back(stumps);

        for (std::size_t i = 0; i < n; ++i) {
            double mean_f = 0.0;
            for (int j = 0; j < kNumClasses; ++j) {
                fj[static_cast<std::size_t>(j)] = stumps[static_cast<std::size_t>(j)].eval(m.row(i));
                mean_f += fj[static_cast<std::size_t>(j)];
            }
            mean_f /= kNumClasses;
            for (int j = 0; j < kNumClasses; ++j)
                F[i * kNumClasses + static_cast<std::size_t>(j)] +=
                    factor * (fj[static_cast<std::size_t>(j)] - mean_f);
            softmax_row(&F[i * kNumClasses], &prob[i * kNumClasses]);
        }
    }
    return model;
}

std::array<double, kNumClasses> logitboost_proba(const BoostModel& model,
                                                 std::span<const double> row) {
    double F[kNumClasses] = {0, 0, 0};
    const double factor = static_cast<double>(kNumClasses - 1) / kNumClasses;
    for (const auto& stumps : model.rounds) {
        double fj[kNumClasses];
        double mean_f = 0.0;
        for (int j = 0; j < kNumClasses; ++j) {
            fj[j] = stumps[static_cast<std::size_t>(j)].eval(row);
            mean_f += fj[j];
        }
        mean_f /= kNumClasses;
        for (int j = 0; j < kNumClasses; ++j) F[j] += factor * (fj[j] - mean_f);
    }
    std::array<double, kNumClasses> p{};
    softmax_row(F, p.data());
    return p;
}

}  // namespace cdens::learn
