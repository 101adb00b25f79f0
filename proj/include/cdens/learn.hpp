#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdens/dataset.hpp"

namespace cdens::learn {

inline constexpr std::array<char, 3> kClasses = {'a', 'c', 'p'};
inline constexpr int kNumClasses = 3;

int class_index(char label);  // throws std::invalid_argument for unknown labels

/// Dense numeric view of a dataset's feature columns, in model feature order.
struct FeatureMatrix {
    std::vector<std::string> feature_names;
    std::size_t n_rows = 0;
    std::vector<double> x;  // row-major, n_rows x feature_names.size()
    std::vector<int> y;     // class indices; -1 for unlabeled rows

    double at(std::size_t row, std::size_t col) const { return x[row * feature_names.size() + col]; }
    std::span<const double> row(std::size_t r) const {
        return {x.data() + r * feature_names.size(), feature_names.size()};
    }
};

FeatureMatrix make_matrix(const data::Dataset& d);
/// Columns aligned to `feature_order`; missing columns are a schema error.
FeatureMatrix make_matrix(const data::Dataset& d, const std::vector<std::string>& feature_order);

struct ForestConfig {
    int n_trees = 500;
    int m_try = 0;  // 0 -> floor(sqrt(p))
    int min_leaf = 1;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

struct BoostConfig {
    int n_iterations = 50;
    std::uint64_t seed = 0;
};

enum class ModelKind { ZeroR, Forest, LogitBoost };

std::string to_string(ModelKind k);
ModelKind model_kind_from_string(const std::string& s);

struct TreeNode {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1, right = -1;
    std::array<std::int64_t, kNumClasses> counts{};  // training samples at the leaf
};

struct Tree {
    std::vector<TreeNode> nodes;
    int predict(std::span<const double> row) const;  // class index by leaf majority
};

struct ForestModel {
    ForestConfig config;
    std::vector<Tree> trees;
    std::vector<double> importance_raw;  // mean decrease in Gini per feature
};

struct Stump {
    int feature = 0;
    double threshold = 0.0;
    double left_value = 0.0;   // x <= threshold
    double right_value = 0.0;  // x >  threshold
    double eval(std::span<const double> row) const {
        return row[static_cast<std::size_t>(feature)] <= threshold ? left_value : right_value;
    }
};

struct BoostModel {
    BoostConfig config;
    std::vector<std::array<Stump, kNumClasses>> rounds;
};

struct ZeroRModel {
    std::array<double, kNumClasses> priors{};
    int modal = 0;
};

/// A fitted classifier with the feature schema it expects.
struct TrainedModel {
    ModelKind kind = ModelKind::ZeroR;
    std::vector<std::string> features;
    ZeroRModel zeror;
    ForestModel forest;
    BoostModel boost;

    /// Class probabilities; rows must be aligned to `features`. Sums to 1.
    std::array<double, kNumClasses> predict_proba(std::span<const double> row) const;
    int predict(std::span<const double> row) const;
};

TrainedModel train_zeror(const data::Dataset& train);
TrainedModel train_forest(const data::Dataset& train, const ForestConfig& config);
TrainedModel train_logitboost(const data::Dataset& train, const BoostConfig& config);

struct LearnerSpec {
    ModelKind kind = ModelKind::Forest;
    ForestConfig forest;
    BoostConfig boost;
};

TrainedModel train_model(const data::Dataset& train, const LearnerSpec& spec);

struct FoldStat {
    int repeat = 0;
    int fold = 0;
    double accuracy = 0.0;
    std::optional<double> kappa;
};

using Confusion = std::array<std::array<std::int64_t, kNumClasses>, kNumClasses>;  // [true][pred]

/// Confusion-matrix scores: observed agreement, chance agreement from the
/// marginals, and the chance-corrected agreement. kappa is empty when chance
/// agreement is 1.
struct EvalReport {
    Confusion confusion{};
    double accuracy_total = 0.0;
    double accuracy_random = 0.0;
    std::optional<double> kappa;
    std::vector<FoldStat> folds;
    std::vector<std::string> notes;
};

double accuracy_from_confusion(const Confusion& c);
double chance_agreement_from_confusion(const Confusion& c);
std::optional<double> kappa_from_confusion(const Confusion& c);
EvalReport report_from_confusion(const Confusion& c);

/// Scores `model` on labeled data. Throws on empty input or schema mismatch.
EvalReport evaluate(const TrainedModel& model, const data::Dataset& test);

struct CVPlan {
    int k = 10;
    int repeats = 5;
    std::uint64_t seed = 0;
    bool stratified = true;
    unsigned jobs = 1;
};

/// Per repeat, a fold id per row. Stratified when every class has >= k rows,
/// otherwise degrades to plain assignment with a note.
std::vector<std::vector<int>> fold_assignments(const std::vector<int>& y, const CVPlan& plan,
                                               std::vector<std::string>* notes = nullptr);

/// Repeated stratified k-fold CV; every row is predicted once per repeat.
/// The headline report pools the confusion counts over all repeats; per
/// (repeat, fold) stats are in `folds`.
EvalReport cross_validate(const data::Dataset& d, const LearnerSpec& spec, const CVPlan& plan);

/// One-vs-rest single-feature AUC per (class, feature), folded to
/// max(AUC, 1-AUC). Zero-variance features score 0.5.
std::array<std::vector<double>, kNumClasses> roc_auc_importance(const data::Dataset& d);

/// Mean decrease in Gini impurity summed over splits, scaled to [0,100].
/// Requires a forest model.
std::vector<double> forest_importance(const TrainedModel& model);

struct RfePlan {
    std::vector<int> subset_sizes;  // ascending, each <= p
    CVPlan outer;
    LearnerSpec learner;
};

struct RfeSizePoint {
    int size = 0;
    double mean_accuracy = 0.0;
    double mean_kappa = 0.0;
};

struct RfeResult {
    int champion_size = 0;
    std::vector<std::string> champion_features;
    TrainedModel champion_model;
    EvalReport champion_report;        // held-out folds at the champion size
    std::vector<RfeSizePoint> profile; // per subset size
};

/// Recursive feature elimination: per outer resample, rank features with a
/// full-feature fit, refit on each top-S subset and score the held-out fold.
/// Champion size has the best mean accuracy (ties -> smaller); the final
/// model is refit on all rows with the top-ranked champion-size features.
RfeResult rfe(const data::Dataset& d, const RfePlan& plan);

struct CompoundSideSpec {
    data::FeatureGroup group = data::FeatureGroup::Combined;
    LearnerSpec learner;
};

/// Ordered classifier pair: the left model handles samples whose message
/// contains at least one vocabulary keyword.
struct CompoundModel {
    TrainedModel left;
    TrainedModel right;
    std::vector<std::string> vocabulary;
};

/// Trains both sides on their vertical feature views of `train`. Keyword
/// indicator columns are derived from the messages when absent. Rows without
/// message text are an invalid input.
CompoundModel train_compound(const CompoundSideSpec& left, const CompoundSideSpec& right,
                             const std::vector<std::string>& vocabulary, const data::Dataset& train);

enum class CompoundMode { Routed, CombinedVotes };

struct CompoundPrediction {
    int cls = 0;
    std::array<double, kNumClasses> proba{};
    bool routed_left = false;
};

CompoundPrediction predict_compound(const CompoundModel& model, const data::Dataset& d,
                                    std::size_t row, CompoundMode mode = CompoundMode::Routed);

EvalReport evaluate_compound(const CompoundModel& model, const data::Dataset& test,
                             CompoundMode mode = CompoundMode::Routed);

}  // namespace cdens::learn
