#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdens/record.hpp"

namespace cdens::data {

enum class ColumnRole { Identity, KeywordFeature, ChangeFeature, SizeFeature, Label };

struct ColumnSpec {
    std::string name;
    ColumnRole role = ColumnRole::ChangeFeature;
};

/// One sample: identity strings, maintenance label and the numeric feature
/// vector aligned to the dataset schema. label 0 means unlabeled.
struct Row {
    std::string sha1;
    std::string project;
    std::string message;
    char label = 0;
    std::vector<double> values;
};

/// In-memory feature table. Operations never mutate their input; they return
/// new datasets, so concurrent readers are safe.
struct Dataset {
    std::vector<ColumnSpec> columns;  // feature columns (keyword/change/size roles)
    std::vector<Row> rows;
    std::string provenance;

    int column_index(const std::string& name) const;  // -1 when absent
    std::vector<std::size_t> role_columns(ColumnRole role) const;
    std::vector<double> column_values(std::size_t col) const;
    bool fully_labeled() const;
};

/// Maps external CSV columns onto roles. Loaded from JSON:
///   {"sha1": "commit_id", "label": "label", "project": "project",
///    "message": "comment", "keyword_columns": [...], "size_columns": [...],
///    "change_columns": [...], "ignore_columns": [...], "default_role": "change"}
/// Unlisted numeric columns get default_role.
struct ColumnMapping {
    std::string sha1_column = "sha1";
    std::string label_column = "label";
    std::string project_column;
    std::string message_column;
    std::vector<std::string> keyword_columns;
    std::vector<std::string> change_columns;
    std::vector<std::string> size_columns;
    std::vector<std::string> ignore_columns;
    ColumnRole default_role = ColumnRole::ChangeFeature;
};

ColumnMapping mapping_from_json_file(const std::string& path);

struct LoadReport {
    std::size_t rows_loaded = 0;
    std::size_t duplicates_dropped = 0;
    std::size_t rows_rejected = 0;
    std::vector<std::string> errors;  // one entry per rejected row
};

/// Loads the external labeled CSV. Duplicate sha1 rows keep the first
/// occurrence; rows with labels outside {a,c,p} or unparseable numerics are
/// rejected and reported. Labels accept a/c/p or the full activity words.
Dataset load_labeled_csv(const std::string& path, const ColumnMapping& mapping,
                         LoadReport* report = nullptr);

/// Mined records as a dataset with the 24 canonical size columns. Merge
/// commits are excluded unless include_merges is set.
Dataset dataset_from_records(const std::vector<mine::CommitSizeRecord>& records,
                             bool include_merges = false);

/// Rebuilds size records (plus labels) from a dataset that carries the 24
/// canonical size columns, for descriptive statistics.
std::pair<std::vector<mine::CommitSizeRecord>, std::vector<char>> records_from_dataset(
    const Dataset& d);

/// Inner join on sha1; result schema is the union of both schemas.
/// Duplicate feature column names across the inputs are a schema error.
Dataset merge_on_sha(const Dataset& labeled, const Dataset& mined);

enum class FeatureGroup { Keywords, Changes, Density, Combined };

FeatureGroup feature_group_from_string(const std::string& s);
std::string to_string(FeatureGroup g);

/// Keeps identity and label plus the feature columns of the group
/// (density == size features; combined keeps all). Empty selection is an error.
Dataset vertical_split(const Dataset& d, FeatureGroup group);

Dataset keep_feature_columns(const Dataset& d, const std::vector<std::string>& names);
Dataset drop_feature_columns(const Dataset& d, const std::vector<std::string>& names);

enum class Variant { A, B, C, D };

Variant variant_from_string(const std::string& s);

struct VariantSpec {
    Variant variant = Variant::C;
    int generations = 1;  // one of {1,2,3,5,8}
};

/// One row per chain: the principal's columns filtered by variant, plus the
/// 24 size features of each parent generation suffixed _gen<i>. Chains whose
/// principal sha1 is missing from `merged` are skipped and reported.
Dataset build_generation_dataset(const VariantSpec& spec,
                                 const std::vector<mine::GenerationChain>& chains,
                                 const Dataset& merged,
                                 std::vector<std::string>* skipped = nullptr);

struct CorrelationFilterResult {
    std::vector<std::string> kept;
    std::vector<std::string> removed;
};

/// Drops zero-variance columns, then repeatedly removes, from the most
/// correlated remaining pair above `cutoff`, the member with the largest
/// mean absolute correlation. Ties fall back to schema order.
CorrelationFilterResult correlation_filter(const Dataset& d, double cutoff = 0.75);

struct NearZeroRule {
    double freq_ratio = 19.0;        // most frequent / second most frequent
    double distinct_fraction = 0.10; // distinct values / rows
};

/// Drops constant columns and, under the near-zero rule, columns whose value
/// distribution is both skewed past freq_ratio and low-cardinality.
Dataset variance_filter(const Dataset& d, const NearZeroRule& rule = {});

enum class PreprocessStep { Center, Scale, YeoJohnson };

/// Per-column fitted parameters, reusable on validation data.
struct FittedPreprocess {
    std::vector<PreprocessStep> steps;
    std::vector<std::string> columns;
    std::vector<double> lambda;  // Yeo-Johnson, 1.0 = identity
    std::vector<double> mean;
    std::vector<double> stddev;  // sample SD; 1.0 where scaling was skipped
    std::vector<std::string> warnings;
};

std::pair<Dataset, FittedPreprocess> preprocess_fit(const Dataset& d,
                                                    const std::vector<PreprocessStep>& steps);
Dataset preprocess_apply(const Dataset& d, const FittedPreprocess& fitted);

/// Yeo-Johnson power transform of one value.
double yeo_johnson(double x, double lambda);
/// Lambda grid search over [-2,2] step 0.1 maximizing the Gaussian
/// log-likelihood of the transformed sample.
double yeo_johnson_fit_lambda(const std::vector<double>& values);

struct SplitPlan {
    double train_fraction = 0.85;
    bool stratified = true;
    std::uint64_t seed = 0;
};

/// Disjoint, exhaustive train/validation partition, stratified by label by
/// default, deterministic per seed. Requires >= 10 rows; stratification
/// requires >= 2 rows per class.
std::pair<Dataset, Dataset> split(const Dataset& d, const SplitPlan& plan);

/// Keyword vocabulary utilities: binary occurrence indicators per word,
/// lowercase word-boundary matching against the commit message.
std::vector<std::string> load_vocabulary_json(const std::string& path);
bool contains_word(const std::string& text, const std::string& word);
bool message_has_any_keyword(const std::string& message, const std::vector<std::string>& vocab);
/// Adds one kw_<word> indicator column per vocabulary word (skipping words
/// already present as columns).
Dataset with_keyword_features(const Dataset& d, const std::vector<std::string>& vocab);

void write_dataset_csv(std::ostream& os, const Dataset& d);
void write_dataset_csv_file(const std::string& path, const Dataset& d);

/// Reads a dataset CSV. Without a mapping, roles are inferred: the 24
/// canonical size names -> size, kw_* -> keyword, identity/label by the
/// canonical header names, all other numerics -> change features.
Dataset read_dataset_csv(const std::string& path, const ColumnMapping* mapping = nullptr,
                         LoadReport* report = nullptr);

}  // namespace cdens::data
