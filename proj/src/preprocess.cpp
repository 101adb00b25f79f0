#include <algorithm>
#include <cmath>
#include <limits>

#include "cdens/dataset.hpp"
#include "cdens/errors.hpp"
#include "cdens/stats.hpp"

namespace cdens::data {

double yeo_johnson(double x, double lambda) {
    if (x >= 0.0) {
        if (std::abs(lambda) < 1e-12) return std::log1p(x);
        return (std::pow(x + 1.0, lambda) - 1.0) / lambda;
    }
    double two_minus = 2.0 - lambda;
    if (std::abs(two_minus) < 1e-12) return -std::log1p(-x);
    return -(std::pow(1.0 - x, two_minus) - 1.0) / two_minus;
}

double yeo_johnson_fit_lambda(const std::vector<double>& values) {
    if (values.size() < 2) return 1.0;
    // constant part of the Jacobian term: sum of sign(x) * log(|x|+1)
    double jac = 0.0;
    for (double x : values) jac += (x >= 0.0 ? 1.0 : -1.0) * std::log1p(std::abs(x));

    double n = static_cast<double>(values.size());
    double best_lambda = 1.0;
    double best_ll = -std::numeric_limits<double>::infinity();
    std::vector<double> t(values.size());
    for (int step = -20; step <= 20; ++step) {
        double lambda = step / 10.0;
        for (std::size_t i = 0; i < values.size(); ++i) t[i] = yeo_johnson(values[i], lambda);
        double m = 0.0;
        for (double v : t) m += v;
        m /= n;
        double var = 0.0;
        for (double v : t) var += (v - m) * (v - m);
        var /= n;  // MLE variance
        if (!(var > 0.0) || !std::isfinite(var)) continue;
        double ll = -0.5 * n * std::log(var) + (lambda - 1.0) * jac;
        if (ll > best_ll) {
            best_ll = ll;
            best_lambda = lambda;
        }
    }
    return best_lambda;
}

namespace {

bool has_step(const std::vector<PreprocessStep>& steps, PreprocessStep s) {
    return std::find(steps.begin(), steps.end(), s) != steps.end();
}

}  // namespace

std::pair<Dataset, FittedPreprocess> preprocess_fit(const Dataset& d,
                                                    const std::vector<PreprocessStep>& steps) {
    FittedPreprocess fit;
    fit.steps = steps;
    std::size_t p = d.columns.size();
    fit.columns.reserve(p);
    for (const auto& c : d.columns) fit.columns.push_back(c.name);
    fit.lambda.assign(p, 1.0);
    fit.mean.assign(p, 0.0);
    fit.stddev.assign(p, 1.0);

    bool do_yj = has_step(steps, PreprocessStep::YeoJohnson);
    bool do_center = has_step(steps, PreprocessStep::Center);
    bool do_scale = has_step(steps, PreprocessStep::Scale);

    for (std::size_t c = 0; c < p; ++c) {
        auto v = d.column_values(c);
        if (do_yj) {
            fit.lambda[c] = yeo_johnson_fit_lambda(v);
            for (auto& x : v) x = yeo_johnson(x, fit.lambda[c]);
        }
        if (do_center) fit.mean[c] = stats::mean(v);
        if (do_scale) {
            double sd = stats::sample_sd(v);
            if (sd > 0.0) {
                fit.stddev[c] = sd;
            } else {
                fit.stddev[c] = 1.0;
                fit.warnings.push_back("scale skipped for zero-variance column " + d.columns[c].name);
            }
        }
    }
    return {preprocess_apply(d, fit), fit};
}

Dataset preprocess_apply(const Dataset& d, const FittedPreprocess& fitted) {
    std::vector<int> idx;
    idx.reserve(fitted.columns.size());
    for (const auto& name : fitted.columns) {
        int c = d.column_index(name);
        if (c < 0) throw schema_error("preprocess: dataset lacks fitted column " + name);
        idx.push_back(c);
    }
    bool do_yj = std::find(fitted.steps.begin(), fitted.steps.end(), PreprocessStep::YeoJohnson) !=
                 fitted.steps.end();

    Dataset out = d;
    for (auto& row : out.rows) {
        for (std::size_t i = 0; i < idx.size(); ++i) {
            double& x = row.values[idx[i]];
            if (do_yj) x = yeo_johnson(x, fitted.lambda[i]);
            x = (x - fitted.mean[i]) / fitted.stddev[i];
        }
    }
    out.provenance = d.provenance + "|preprocessed";
    return out;
}

}  // namespace cdens::data
