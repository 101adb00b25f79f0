#include "cdens/learn.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "cdens/errors.hpp"
#include "cdens/parallel.hpp"
#include "cdens/rng.hpp"

namespace cdens::learn {

// defined in logitboost.cpp
std::array<double, kNumClasses> logitboost_proba(const BoostModel& model, std::span<const double> row);

int class_index(char label) {
    for (int i = 0; i < kNumClasses; ++i)
        if (kClasses[static_cast<std::size_t>(i)] == label) return i;
    throw std::invalid_argument(std::string("unknown label: ") + label);
}

FeatureMatrix make_matrix(const data::Dataset& d) {
    std::vector<std::string> names;
    names.reserve(d.columns.size());
    for (const auto& c : d.columns) names.push_back(c.name);
    return make_matrix(d, names);
}

FeatureMatrix make_matrix(const data::Dataset& d, const std::vector<std::string>& feature_order) {
    FeatureMatrix m;
    m.feature_names = feature_order;
    m.n_rows = d.rows.size();
    std::vector<std::size_t> idx;
    idx.reserve(feature_order.size());
    for (const auto& name : feature_order) {
        int c = d.column_index(name);
        if (c < 0) throw schema_error("dataset lacks feature column: " + name);
        idx.push_back(static_cast<std::size_t>(c));
    }
    m.x.reserve(m.n_rows * idx.size());
    m.y.reserve(m.n_rows);
    for (const auto& row : d.rows) {
        for (std::size_t c : idx) m.x.push_back(row.values[c]);
        m.y.push_back(row.label == 0 ? -1 : class_index(row.label));
    }
    return m;
}

std::string to_string(ModelKind k) {
    switch (k) {
        case ModelKind::ZeroR: return "zeror";
        case ModelKind::Forest: return "forest";
        case ModelKind::LogitBoost: return "logitboost";
    }
    return "?";
}

ModelKind model_kind_from_string(const std::string& s) {
    if (s == "zeror") return ModelKind::ZeroR;
    if (s == "forest") return ModelKind::Forest;
    if (s == "logitboost") return ModelKind::LogitBoost;
    throw config_error("unknown model kind: " + s);
}

std::array<double, kNumClasses> TrainedModel::predict_proba(std::span<const double> row) const {
    switch (kind) {
        case ModelKind::ZeroR: return zeror.priors;
        case ModelKind::Forest: {
            std::array<double, kNumClasses> votes{};
            for (const auto& t : forest.trees) votes[static_cast<std::size_t>(t.predict(row))] += 1.0;
            double total = static_cast<double>(forest.trees.size());
            for (auto& v : votes) v /= total;
            return votes;
        }
        case ModelKind::LogitBoost: return logitboost_proba(boost, row);
    }
    return {};
}

int TrainedModel::predict(std::span<const double> row) const {
    auto p = predict_proba(row);
    int best = 0;
    for (int c = 1; c < kNumClasses; ++c)
        if (p[static_cast<std::size_t>(c)] > p[static_cast<std::size_t>(best)]) best = c;
    return best;
}

TrainedModel train_zeror(const data::Dataset& train) {
    if (train.rows.empty()) throw std::invalid_argument("train_zeror: empty dataset");
    std::array<std::int64_t, kNumClasses> counts{};
    for (const auto& row : train.rows) {
        if (row.label == 0) throw std::invalid_argument("train_zeror: unlabeled row");
        ++counts[static_cast<std::size_t>(class_index(row.label))];
    }
    TrainedModel m;
    m.kind = ModelKind::ZeroR;
    for (const auto& c : train.columns) m.features.push_back(c.name);
    double total = static_cast<double>(train.rows.size());
    int modal = 0;
    for (int c = 0; c < kNumClasses; ++c) {
        m.zeror.priors[static_cast<std::size_t>(c)] = counts[static_cast<std::size_t>(c)] / total;
        if (counts[static_cast<std::size_t>(c)] > counts[static_cast<std::size_t>(modal)])
            modal = c;  // ties keep the earlier label (a < c < p)
    }
    m.zeror.modal = modal;
    return m;
}

TrainedModel train_model(const data::Dataset& train, const LearnerSpec& spec) {
    switch (spec.kind) {
        case ModelKind::ZeroR: return train_zeror(train);
        case ModelKind::Forest: return train_forest(train, spec.forest);
        case ModelKind::LogitBoost: return train_logitboost(train, spec.boost);
    }
    throw std::invalid_argument("unknown learner kind");
}

double accuracy_from_confusion(const Confusion& c) {
    std::int64_t total = 0, diag = 0;
    for (int i = 0; i < kNumClasses; ++i)
        for (int j = 0; j < kNumClasses; ++j) {
            total += c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (i == j) diag += c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    return total == 0 ? 0.0 : static_cast<double>(diag) / static_cast<double>(total);
}

double chance_agreement_from_confusion(const Confusion& c) {
    std::int64_t total = 0;
    std::array<std::int64_t, kNumClasses> row_sum{}, col_sum{};
    for (int i = 0; i < kNumClasses; ++i)
        for (int j = 0; j < kNumClasses; ++j) {
            std::int64_t v = c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            total += v;
            row_sum[static_cast<std::size_t>(i)] += v;
            col_sum[static_cast<std::size_t>(j)] += v;
        }
    if (total == 0) return 0.0;
    double pe = 0.0;
    for (int k = 0; k < kNumClasses; ++k)
        pe += static_cast<double>(row_sum[static_cast<std::size_t>(k)]) *
              static_cast<double>(col_sum[static_cast<std::size_t>(k)]);
    return pe / (static_cast<double>(total) * static_cast<double>(total));
}

std::optional<double> kappa_from_confusion(const Confusion& c) {
    double po = accuracy_from_confusion(c);
    double pe = chance_agreement_from_confusion(c);
    if (pe >= 1.0) return std::nullopt;  // undefined marker
    return (po - pe) / (1.0 - pe);
}

EvalReport report_from_confusion(const Confusion& c) {
    EvalReport r;
    r.confusion = c;
    r.accuracy_total = accuracy_from_confusion(c);
    r.accuracy_random = chance_agreement_from_confusion(c);
    r.kappa = kappa_from_confusion(c);
    return r;
}

EvalReport evaluate(const TrainedModel& model, const data::Dataset& test) {
    if (test.rows.empty()) throw std::invalid_argument("evaluate: empty dataset");
    FeatureMatrix m = make_matrix(test, model.features);
    Confusion c{};
    for (std::size_t i = 0; i < m.n_rows; ++i) {
        if (m.y[i] < 0) throw std::invalid_argument("evaluate: unlabeled row");
        int pred = model.predict(m.row(i));
        ++c[static_cast<std::size_t>(m.y[i])][static_cast<std::size_t>(pred)];
    }
    return report_from_confusion(c);
}

std::vector<std::vector<int>> fold_assignments(const std::vector<int>& y, const CVPlan& plan,
                                               std::vector<std::string>* notes) {
    if (plan.k < 2) throw std::invalid_argument("cross-validation needs k >= 2");
    std::size_t n = y.size();
    if (n < static_cast<std::size_t>(plan.k))
        throw std::invalid_argument("cross-validation needs at least k rows");

    bool stratified = plan.stratified;
    if (stratified) {
        std::array<std::int64_t, kNumClasses> counts{};
        for (int yi : y)
            if (yi >= 0) ++counts[static_cast<std::size_t>(yi)];
        for (std::int64_t c : counts) {
            if (c > 0 && c < plan.k) {
                stratified = false;
                if (notes)
                    notes->push_back("stratification degraded: a class has fewer rows than k");
                break;
            }
        }
    }

    std::vector<std::vector<int>> per_repeat;
    per_repeat.reserve(static_cast<std::size_t>(plan.repeats));
    for (int r = 0; r < plan.repeats; ++r) {
        auto rng = make_rng(derive_seed(plan.seed, seed_tag::kCvFolds, static_cast<std::uint64_t>(r)));
        std::vector<int> folds(n, 0);
        int cursor = 0;  // rotates across strata so fold sizes differ by <= 1
        auto deal = [&](std::vector<std::size_t>& idx) {
            deterministic_shuffle(idx, rng);
            for (std::size_t i : idx) folds[i] = (cursor++) % plan.k;
        };
        if (stratified) {
            std::map<int, std::vector<std::size_t>> by_class;
            for (std::size_t i = 0; i < n; ++i) by_class[y[i]].push_back(i);
            for (auto& [cls, idx] : by_class) deal(idx);
        } else {
            std::vector<std::size_t> all(n);
            std::iota(all.begin(), all.end(), 0);
            deal(all);
        }
        per_repeat.push_back(std::move(folds));
    }
    return per_repeat;
}

EvalReport cross_validate(const data::Dataset& d, const LearnerSpec& spec, const CVPlan& plan) {
    std::vector<int> y;
    y.reserve(d.rows.size());
    for (const auto& row : d.rows) {
        if (row.label == 0) throw std::invalid_argument("cross_validate: unlabeled row");
        y.push_back(class_index(row.label));
    }
    std::vector<std::string> notes;
    auto assignments = fold_assignments(y, plan, &notes);

    struct Task {
        int repeat, fold;
    };
    std::vector<Task> tasks;
    for (int r = 0; r < plan.repeats; ++r)
        for (int f = 0; f < plan.k; ++f) tasks.push_back({r, f});

    // predictions[r][i] = predicted class of row i in repeat r
    std::vector<std::vector<int>> predictions(static_cast<std::size_t>(plan.repeats),
                                              std::vector<int>(d.rows.size(), -1));

    parallel_for(tasks.size(), plan.jobs, [&](std::size_t ti) {
        const Task& task = tasks[ti];
        const auto& folds = assignments[static_cast<std::size_t>(task.repeat)];
        data::Dataset train_part, test_part;
        train_part.columns = test_part.columns = d.columns;
        std::vector<std::size_t> test_rows;
        for (std::size_t i = 0; i < d.rows.size(); ++i) {
            if (folds[i] == task.fold) {
                test_part.rows.push_back(d.rows[i]);
                test_rows.push_back(i);
            } else {
                train_part.rows.push_back(d.rows[i]);
            }
        }
        if (test_part.rows.empty()) return;
        LearnerSpec task_spec = spec;
        std::uint64_t task_seed = derive_seed(spec.forest.seed ^ spec.boost.seed,
                                              seed_tag::kCvFolds, ti + 1);
        task_spec.forest.seed = task_seed;
        task_spec.forest.jobs = 1;  // parallelism lives at the fold level here
        task_spec.boost.seed = task_seed;
        TrainedModel model = train_model(train_part, task_spec);
        FeatureMatrix tm = make_matrix(test_part, model.features);
        for (std::size_t k = 0; k < test_rows.size(); ++k)
            predictions[static_cast<std::size_t>(task.repeat)][test_rows[k]] =
                model.predict(tm.row(k));
    });

    Confusion pooled{};
    EvalReport report;
    for (int r = 0; r < plan.repeats; ++r) {
        const auto& folds = assignments[static_cast<std::size_t>(r)];
        for (int f = 0; f < plan.k; ++f) {
            Confusion fold_c{};
            for (std::size_t i = 0; i < d.rows.size(); ++i) {
                if (folds[i] != f) continue;
                int pred = predictions[static_cast<std::size_t>(r)][i];
                if (pred < 0) continue;
                ++fold_c[static_cast<std::size_t>(y[i])][static_cast<std::size_t>(pred)];
                ++pooled[static_cast<std::size_t>(y[i])][static_cast<std::size_t>(pred)];
            }
            FoldStat fs;
            fs.repeat = r;
            fs.fold = f;
            fs.accuracy = accuracy_from_confusion(fold_c);
            fs.kappa = kappa_from_confusion(fold_c);
            report.folds.push_back(fs);
        }
    }
    EvalReport pooled_report = report_from_confusion(pooled);
    pooled_report.folds = std::move(report.folds);
    pooled_report.notes = std::move(notes);
    return pooled_report;
}

std::array<std::vector<double>, kNumClasses> roc_auc_importance(const data::Dataset& d) {
    FeatureMatrix m = make_matrix(d);
    if (m.n_rows == 0) throw std::invalid_argument("roc_auc_importance: empty dataset");
    for (int yi : m.y)
        if (yi < 0) throw std::invalid_argument("roc_auc_importance: unlabeled row");

    std::size_t p = m.feature_names.size();
    std::array<std::vector<double>, kNumClasses> result;
    for (auto& v : result) v.assign(p, 0.5);

    std::vector<std::pair<double, std::size_t>> vals(m.n_rows);
    std::vector<double> ranks(m.n_rows);
    for (std::size_t f = 0; f < p; ++f) {
        for (std::size_t i = 0; i < m.n_rows; ++i) vals[i] = {m.at(i, f), i};
        std::sort(vals.begin(), vals.end());
        // midranks over ties
        std::size_t i = 0;
        while (i < m.n_rows) {
            std::size_t j = i;
            while (j + 1 < m.n_rows && vals[j + 1].first == vals[i].first) ++j;
            double rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
            for (std::size_t k = i; k <= j; ++k) ranks[vals[k].second] = rank;
            i = j + 1;
        }
        for (int cls = 0; cls < kNumClasses; ++cls) {
            double rank_sum = 0.0;
            std::int64_t n1 = 0;
            for (std::size_t r = 0; r < m.n_rows; ++r) {
                if (m.y[r] == cls) {
                    rank_sum += ranks[r];
                    ++n1;
                }
            }
            std::int64_t n0 = static_cast<std::int64_t>(m.n_rows) - n1;
            if (n1 == 0 || n0 == 0) continue;  // class absent: keep 0.5
            double auc = (rank_sum - static_cast<double>(n1) * (static_cast<double>(n1) + 1.0) / 2.0) /
                         (static_cast<double>(n1) * static_cast<double>(n0));
            result[static_cast<std::size_t>(cls)][f] = std::max(auc, 1.0 - auc);
        }
    }
    return result;
}

std::vector<double> forest_importance(const TrainedModel& model) {
    if (model.kind != ModelKind::Forest)
        throw std::invalid_argument("forest_importance needs a forest model");
    std::vector<double> imp = model.forest.importance_raw;
    double mx = 0.0;
    for (double v : imp) mx = std::max(mx, v);
    if (mx > 0.0)
        for (double& v : imp) v = 100.0 * v / mx;
    return imp;
}

namespace {

// Features sorted by descending importance; ties keep schema order.
std::vector<std::size_t> importance_ranking(const std::vector<double>& imp) {
    std::vector<std::size_t> order(imp.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return imp[a] > imp[b]; });
    return order;
}

ForestConfig ranking_config(const LearnerSpec& spec, std::uint64_t seed) {
    ForestConfig cfg = spec.forest;
    cfg.seed = seed;
    cfg.jobs = 1;
    return cfg;
}

}  // namespace

RfeResult rfe(const data::Dataset& d, const RfePlan& plan) {
    std::size_t p = d.columns.size();
    std::vector<int> sizes = plan.subset_sizes;
    if (sizes.empty())
        for (std::size_t s = 1; s <= p; ++s) sizes.push_back(static_cast<int>(s));
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    if (sizes.front() < 1 || static_cast<std::size_t>(sizes.back()) > p)
        throw std::invalid_argument("rfe subset sizes must lie in [1, p]");

    std::vector<int> y;
    for (const auto& row : d.rows) {
        if (row.label == 0) throw std::invalid_argument("rfe: unlabeled row");
        y.push_back(class_index(row.label));
    }
    std::vector<std::string> notes;
    auto assignments = fold_assignments(y, plan.outer, &notes);

    struct Task {
        int repeat, fold;
    };
    std::vector<Task> tasks;
    for (int r = 0; r < plan.outer.repeats; ++r)
        for (int f = 0; f < plan.outer.k; ++f) tasks.push_back({r, f});

    std::size_t n_sizes = sizes.size();
    // per task, per size: held-out confusion
    std::vector<std::vector<Confusion>> task_confusions(tasks.size(),
                                                        std::vector<Confusion>(n_sizes, Confusion{}));

    parallel_for(tasks.size(), plan.outer.jobs, [&](std::size_t ti) {
        const Task& task = tasks[ti];
        const auto& folds = assignments[static_cast<std::size_t>(task.repeat)];
        data::Dataset train_part, test_part;
        train_part.columns = test_part.columns = d.columns;
        for (std::size_t i = 0; i < d.rows.size(); ++i)
            (folds[i] == task.fold ? test_part : train_part).rows.push_back(d.rows[i]);
        if (test_part.rows.empty()) return;

        std::uint64_t task_seed = derive_seed(plan.learner.forest.seed, seed_tag::kRfe, ti + 1);
        TrainedModel ranker = train_forest(train_part, ranking_config(plan.learner, task_seed));
        auto ranking = importance_ranking(ranker.forest.importance_raw);

        for (std::size_t si = 0; si < n_sizes; ++si) {
            std::vector<std::string> subset;
            for (int k = 0; k < sizes[si]; ++k)
                subset.push_back(d.columns[ranking[static_cast<std::size_t>(k)]].name);
            data::Dataset sub_train = data::keep_feature_columns(train_part, subset);
            data::Dataset sub_test = data::keep_feature_columns(test_part, subset);
            LearnerSpec spec = plan.learner;
            spec.forest.seed = derive_seed(task_seed, seed_tag::kRfe, si);
            spec.forest.jobs = 1;
            spec.boost.seed = spec.forest.seed;
            TrainedModel model = train_model(sub_train, spec);
            FeatureMatrix tm = make_matrix(sub_test, model.features);
            auto& confusion = task_confusions[ti][si];
            for (std::size_t k = 0; k < tm.n_rows; ++k) {
                int pred = model.predict(tm.row(k));
                ++confusion[static_cast<std::size_t>(tm.y[k])][static_cast<std::size_t>(pred)];
            }
        }
    });

    RfeResult result;
    double best_acc = -1.0;
    std::vector<Confusion> pooled(n_sizes, Confusion{});
    for (std::size_t si = 0; si < n_sizes; ++si) {
        double acc_sum = 0.0, kappa_sum = 0.0;
        int acc_n = 0, kappa_n = 0;
        for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
            const auto& c = task_confusions[ti][si];
            for (int i = 0; i < kNumClasses; ++i)
                for (int j = 0; j < kNumClasses; ++j)
                    pooled[si][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                        c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            acc_sum += accuracy_from_confusion(c);
            ++acc_n;
            if (auto kp = kappa_from_confusion(c)) {
                kappa_sum += *kp;
                ++kappa_n;
            }
        }
        RfeSizePoint pt;
        pt.size = sizes[si];
        pt.mean_accuracy = acc_n ? acc_sum / acc_n : 0.0;
        pt.mean_kappa = kappa_n ? kappa_sum / kappa_n : 0.0;
        result.profile.push_back(pt);
        if (pt.mean_accuracy > best_acc) {  // ties keep the smaller size
            best_acc = pt.mean_accuracy;
            result.champion_size = sizes[si];
        }
    }

    // final ranking and refit on all rows
    TrainedModel full_ranker =
        train_forest(d, ranking_config(plan.learner, derive_seed(plan.learner.forest.seed,
                                                                 seed_tag::kRfe, 0)));
    auto ranking = importance_ranking(full_ranker.forest.importance_raw);
    for (int k = 0; k < result.champion_size; ++k)
        result.champion_features.push_back(d.columns[ranking[static_cast<std::size_t>(k)]].name);
    data::Dataset champion_data = data::keep_feature_columns(d, result.champion_features);
    LearnerSpec final_spec = plan.learner;
    result.champion_model = train_model(champion_data, final_spec);

    std::size_t champ_idx = 0;
    for (std::size_t si = 0; si < n_sizes; ++si)
        if (sizes[si] == result.champion_size) champ_idx = si;
    result.champion_report = report_from_confusion(pooled[champ_idx]);
    for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
        FoldStat fs;
        fs.repeat = tasks[ti].repeat;
        fs.fold = tasks[ti].fold;
        fs.accuracy = accuracy_from_confusion(task_confusions[ti][champ_idx]);
        fs.kappa = kappa_from_confusion(task_confusions[ti][champ_idx]);
        result.champion_report.folds.push_back(fs);
    }
    result.champion_report.notes = notes;
    return result;
}

namespace {

// Keyword indicator columns are required as model inputs when a side trains
// on the keywords view; derive them from messages when absent.
data::Dataset ensure_keyword_columns(const data::Dataset& d, const std::vector<std::string>& vocab,
                                     bool needed) {
    if (!needed) return d;
    if (!d.role_columns(data::ColumnRole::KeywordFeature).empty()) return d;
    return data::with_keyword_features(d, vocab);
}

}  // namespace

CompoundModel train_compound(const CompoundSideSpec& left, const CompoundSideSpec& right,
                             const std::vector<std::string>& vocabulary, const data::Dataset& train) {
    if (vocabulary.empty()) throw std::invalid_argument("train_compound: empty vocabulary");
    bool any_message = std::any_of(train.rows.begin(), train.rows.end(),
                                   [](const data::Row& r) { return !r.message.empty(); });
    if (!any_message)
        throw std::invalid_argument("train_compound: dataset carries no message text for routing");

    bool needs_kw = left.group == data::FeatureGroup::Keywords ||
                    right.group == data::FeatureGroup::Keywords ||
                    left.group == data::FeatureGroup::Combined ||
                    right.group == data::FeatureGroup::Combined;
    data::Dataset base = ensure_keyword_columns(train, vocabulary, needs_kw);

    CompoundModel model;
    model.vocabulary = vocabulary;
    model.left = train_model(data::vertical_split(base, left.group), left.learner);
    model.right = train_model(data::vertical_split(base, right.group), right.learner);
    return model;
}

namespace {

std::array<double, kNumClasses> side_proba(const TrainedModel& side, const data::Dataset& d,
                                           std::size_t row, std::vector<double>& scratch) {
    scratch.clear();
    for (const auto& name : side.features) {
        int c = d.column_index(name);
        if (c < 0) throw schema_error("sample lacks feature required by compound side: " + name);
        scratch.push_back(d.rows[row].values[static_cast<std::size_t>(c)]);
    }
    return side.predict_proba(scratch);
}

int argmax3(const std::array<double, kNumClasses>& p) {
    int best = 0;
    for (int c = 1; c < kNumClasses; ++c)
        if (p[static_cast<std::size_t>(c)] > p[static_cast<std::size_t>(best)]) best = c;
    return best;
}

}  // namespace

CompoundPrediction predict_compound(const CompoundModel& model, const data::Dataset& d,
                                    std::size_t row, CompoundMode mode) {
    std::vector<double> scratch;
    CompoundPrediction out;
    out.routed_left = data::message_has_any_keyword(d.rows[row].message, model.vocabulary);
    if (mode == CompoundMode::Routed) {
        const TrainedModel& side = out.routed_left ? model.left : model.right;
        out.proba = side_proba(side, d, row, scratch);
    } else {
        auto lp = side_proba(model.left, d, row, scratch);
        auto rp = side_proba(model.right, d, row, scratch);
        for (int c = 0; c < kNumClasses; ++c)
            out.proba[static_cast<std::size_t>(c)] =
                (lp[static_cast<std::size_t>(c)] + rp[static_cast<std::size_t>(c)]) / 2.0;
    }
    out.cls = argmax3(out.proba);
    return out;
}

EvalReport evaluate_compound(const CompoundModel& model, const data::Dataset& test,
                             CompoundMode mode) {
    if (test.rows.empty()) throw std::invalid_argument("evaluate_compound: empty dataset");
    bool needs_kw = false;
    for (const auto& side : {&model.left, &model.right})
        for (const auto& f : (*side).features)
            if (f.rfind("kw_", 0) == 0 && test.column_index(f) < 0) needs_kw = true;
    data::Dataset base = needs_kw ? data::with_keyword_features(test, model.vocabulary) : test;

    Confusion c{};
    for (std::size_t i = 0; i < base.rows.size(); ++i) {
        if (base.rows[i].label == 0) throw std::invalid_argument("evaluate_compound: unlabeled row");
        auto pred = predict_compound(model, base, i, mode);
        ++c[static_cast<std::size_t>(class_index(base.rows[i].label))][static_cast<std::size_t>(pred.cls)];
    }
    return report_from_confusion(c);
}

}  // namespace cdens::learn
