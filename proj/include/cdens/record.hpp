#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace cdens::mine {

/// The 22 size attributes of one commit plus the two derived ratios.
/// Gross/net pairs are interleaved in catalog order; added files never carry
/// deleted lines and deleted files never carry added lines.
struct CommitSizeRecord {
    std::string sha1;
    std::string parent_sha1;  // empty for root commits
    std::string project;
    std::int64_t author_timestamp = 0;  // UTC seconds
    bool is_merge = false;

    std::int64_t files_added_gross = 0, files_added_net = 0;
    std::int64_t files_deleted_gross = 0, files_deleted_net = 0;
    std::int64_t files_renamed_gross = 0, files_renamed_net = 0;
    std::int64_t files_modified_gross = 0, files_modified_net = 0;

    std::int64_t lines_added_by_added_gross = 0, lines_added_by_added_net = 0;
    std::int64_t lines_deleted_by_deleted_gross = 0, lines_deleted_by_deleted_net = 0;
    std::int64_t lines_added_by_modified_gross = 0, lines_added_by_modified_net = 0;
    std::int64_t lines_deleted_by_modified_gross = 0, lines_deleted_by_modified_net = 0;
    std::int64_t lines_added_by_renamed_gross = 0, lines_added_by_renamed_net = 0;
    std::int64_t lines_deleted_by_renamed_gross = 0, lines_deleted_by_renamed_net = 0;

    double affected_files_ratio_net = 0.0;
    double density = 0.0;

    std::int64_t gross_line_sum() const;
    std::int64_t net_line_sum() const;
    std::int64_t gross_file_sum() const;
    std::int64_t net_file_sum() const;
};

/// Sum of net line features over sum of gross line features; 0 on a zero
/// denominator (zero-size commits exist, e.g. binary-only changes).
double commit_density(const CommitSizeRecord& r);

/// Sum of net file counts over sum of gross file counts; 0 on a zero denominator.
double affected_files_ratio_net(const CommitSizeRecord& r);

/// The 22 size feature names in catalog order (gross, net per pair).
const std::array<std::string, 22>& size_feature_names();
/// All 24 feature names: the 22 above plus affected_files_ratio_net, density.
const std::array<std::string, 24>& record_feature_names();
/// Feature value by canonical name.
double record_feature(const CommitSizeRecord& r, const std::string& name);

void write_records_csv(std::ostream& os, const std::vector<CommitSizeRecord>& records);
std::vector<CommitSizeRecord> read_records_csv(const std::string& path);

/// Ancestor chain of a principal commit, nearest parent first.
struct GenerationChain {
    CommitSizeRecord principal;
    std::vector<CommitSizeRecord> parents;
    int requested_generations = 1;
};

enum class ChainRejection { MergeInWindow, InsufficientHistory, UnlabeledPrincipal };

std::string to_string(ChainRejection r);

/// Read-only lookup over mined records, keyed by sha1.
class RecordStore {
public:
    explicit RecordStore(std::vector<CommitSizeRecord> records);

    const CommitSizeRecord* find(const std::string& sha1) const;
    const std::vector<CommitSizeRecord>& records() const { return records_; }

private:
    std::vector<CommitSizeRecord> records_;
    std::unordered_map<std::string, std::size_t> by_sha_;
};

/// Builds the chain of `generations` nearest ancestors of `principal_sha`.
/// Rejects when the principal is unlabeled (labeled_shas given and absent
/// from it), when any commit in the window is a merge, or when history runs
/// out. `generations` must be one of {1,2,3,5,8}.
std::variant<GenerationChain, ChainRejection> build_generation_chain(
    const RecordStore& store, const std::string& principal_sha, int generations,
    const std::vector<std::string>* labeled_shas = nullptr);

}  // namespace cdens::mine
