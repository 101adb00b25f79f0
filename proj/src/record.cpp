#include "cdens/record.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "cdens/csv.hpp"
#include "cdens/errors.hpp"

namespace cdens::mine {

namespace {

// Pointer-to-member table keeps CSV layout, name lookup and iteration in sync.
struct FieldDef {
    const char* name;
    std::int64_t CommitSizeRecord::* member;
};

constexpr FieldDef kSizeFields[22] = {
    {"files_added_gross", &CommitSizeRecord::files_added_gross},
    {"files_added_net", &CommitSizeRecord::files_added_net},
    {"files_deleted_gross", &CommitSizeRecord::files_deleted_gross},
    {"files_deleted_net", &CommitSizeRecord::files_deleted_net},
    {"files_renamed_gross", &CommitSizeRecord::files_renamed_gross},
    {"files_renamed_net", &CommitSizeRecord::files_renamed_net},
    {"files_modified_gross", &CommitSizeRecord::files_modified_gross},
    {"files_modified_net", &CommitSizeRecord::files_modified_net},
    {"lines_added_by_added_gross", &CommitSizeRecord::lines_added_by_added_gross},
    {"lines_added_by_added_net", &CommitSizeRecord::lines_added_by_added_net},
    {"lines_deleted_by_deleted_gross", &CommitSizeRecord::lines_deleted_by_deleted_gross},
    {"lines_deleted_by_deleted_net", &CommitSizeRecord::lines_deleted_by_deleted_net},
    {"lines_added_by_modified_gross", &CommitSizeRecord::lines_added_by_modified_gross},
    {"lines_added_by_modified_net", &CommitSizeRecord::lines_added_by_modified_net},
    {"lines_deleted_by_modified_gross", &CommitSizeRecord::lines_deleted_by_modified_gross},
    {"lines_deleted_by_modified_net", &CommitSizeRecord::lines_deleted_by_modified_net},
    {"lines_added_by_renamed_gross", &CommitSizeRecord::lines_added_by_renamed_gross},
    {"lines_added_by_renamed_net", &CommitSizeRecord::lines_added_by_renamed_net},
    {"lines_deleted_by_renamed_gross", &CommitSizeRecord::lines_deleted_by_renamed_gross},
    {"lines_deleted_by_renamed_net", &CommitSizeRecord::lines_deleted_by_renamed_net},
};

}  // namespace

std::int64_t CommitSizeRecord::gross_line_sum() const {
    return lines_added_by_added_gross + lines_deleted_by_deleted_gross + lines_added_by_modified_gross +
           lines_deleted_by_modified_gross + lines_added_by_renamed_gross + lines_deleted_by_renamed_gross;
}

std::int64_t CommitSizeRecord::net_line_sum() const {
    return lines_added_by_added_net + lines_deleted_by_deleted_net + lines_added_by_modified_net +
           lines_deleted_by_modified_net + lines_added_by_renamed_net + lines_deleted_by_renamed_net;
}

std::int64_t CommitSizeRecord::gross_file_sum() const {
    return files_added_gross + files_deleted_gross + files_renamed_gross + files_modified_gross;
}

std::int64_t CommitSizeRecord::net_file_sum() const {
    return files_added_net + files_deleted_net + files_renamed_net + files_modified_net;
}

double commit_density(const CommitSizeRecord& r) {
    std::int64_t gross = r.gross_line_sum();
    if (gross == 0) return 0.0;
    return static_cast<double>(r.net_line_sum()) / static_cast<double>(gross);
}

double affected_files_ratio_net(const CommitSizeRecord& r) {
    std::int64_t gross = r.gross_file_sum();
    if (gross == 0) return 0.0;
    return static_cast<double>(r.net_file_sum()) / static_cast<double>(gross);
}

const std::array<std::string, 22>& size_feature_names() {
    static const std::array<std::string, 22> names = [] {
        std::array<std::string, 22> a;
        for (std::size_t i = 0; i < 22; ++i) a[i] = kSizeFields[i].name;
        return a;
    }();
    return names;
}

const std::array<std::string, 24>& record_feature_names() {
    static const std::array<std::string, 24> names = [] {
        std::array<std::string, 24> a;
        for (std::size_t i = 0; i < 22; ++i) a[i] = kSizeFields[i].name;
        a[22] = "affected_files_ratio_net";
        a[23] = "density";
        return a;
    }();
    return names;
}

double record_feature(const CommitSizeRecord& r, const std::string& name) {
    for (const auto& f : kSizeFields)
        if (name == f.name) return static_cast<double>(r.*(f.member));
    if (name == "affected_files_ratio_net") return r.affected_files_ratio_net;
    if (name == "density") return r.density;
    throw not_found_error("unknown record feature: " + name);
}

void write_records_csv(std::ostream& os, const std::vector<CommitSizeRecord>& records) {
    std::vector<std::string> row = {"sha1", "parent_sha1", "project", "timestamp", "is_merge"};
    for (const auto& n : record_feature_names()) row.push_back(n);
    csv::write_row(os, row);
    for (const auto& r : records) {
        row.clear();
        row.push_back(r.sha1);
        row.push_back(r.parent_sha1);
        row.push_back(r.project);
        row.push_back(csv::format_int(r.author_timestamp));
        row.push_back(r.is_merge ? "1" : "0");
        for (const auto& f : kSizeFields) row.push_back(csv::format_int(r.*(f.member)));
        row.push_back(csv::format_ratio(r.affected_files_ratio_net));
        row.push_back(csv::format_ratio(r.density));
        csv::write_row(os, row);
    }
}

std::vector<CommitSizeRecord> read_records_csv(const std::string& path) {
    csv::Table t = csv::read_file(path);
    auto col = [&](const std::string& name) {
        int c = t.column(name);
        if (c < 0) throw schema_error("records csv missing column: " + name);
        return static_cast<std::size_t>(c);
    };
    std::size_t c_sha = col("sha1"), c_parent = col("parent_sha1"), c_project = col("project");
    std::size_t c_ts = col("timestamp"), c_merge = col("is_merge");
    std::array<std::size_t, 22> c_size;
    for (std::size_t i = 0; i < 22; ++i) c_size[i] = col(kSizeFields[i].name);
    std::size_t c_ratio = col("affected_files_ratio_net"), c_density = col("density");

    std::vector<CommitSizeRecord> out;
    out.reserve(t.rows.size());
    for (const auto& row : t.rows) {
        CommitSizeRecord r;
        r.sha1 = row[c_sha];
        r.parent_sha1 = row[c_parent];
        r.project = row[c_project];
        r.author_timestamp = std::stoll(row[c_ts]);
        r.is_merge = row[c_merge] == "1" || row[c_merge] == "true";
        for (std::size_t i = 0; i < 22; ++i) r.*(kSizeFields[i].member) = std::stoll(row[c_size[i]]);
        r.affected_files_ratio_net = std::stod(row[c_ratio]);
        r.density = std::stod(row[c_density]);
        out.push_back(std::move(r));
    }
    return out;
}

std::string to_string(ChainRejection r) {
    switch (r) {
        case ChainRejection::MergeInWindow: return "merge-in-window";
        case ChainRejection::InsufficientHistory: return "insufficient-history";
        case ChainRejection::UnlabeledPrincipal: return "unlabeled-principal";
    }
    return "unknown";
}

RecordStore::RecordStore(std::vector<CommitSizeRecord> records) : records_(std::move(records)) {
    by_sha_.reserve(records_.size());
    for (std::size_t i = 0; i < records_.size(); ++i) by_sha_.emplace(records_[i].sha1, i);
}

const CommitSizeRecord* RecordStore::find(const std::string& sha1) const {
    auto it = by_sha_.find(sha1);
    return it == by_sha_.end() ? nullptr : &records_[it->second];
}

std::variant<GenerationChain, ChainRejection> build_generation_chain(
    const RecordStore& store, const std::string& principal_sha, int generations,
    const std::vector<std::string>* labeled_shas) {
    static const int allowed[] = {1, 2, 3, 5, 8};
    if (std::find(std::begin(allowed), std::end(allowed), generations) == std::end(allowed))
        throw std::invalid_argument("generations must be one of {1,2,3,5,8}");

    const CommitSizeRecord* principal = store.find(principal_sha);
    if (!principal) throw not_found_error("principal not in store: " + principal_sha);
    if (labeled_shas &&
        std::find(labeled_shas->begin(), labeled_shas->end(), principal_sha) == labeled_shas->end())
        return ChainRejection::UnlabeledPrincipal;
    if (principal->is_merge) return ChainRejection::MergeInWindow;

    GenerationChain chain;
    chain.principal = *principal;
    chain.requested_generations = generations;
    const CommitSizeRecord* cur = principal;
    for (int g = 0; g < generations; ++g) {
        if (cur->parent_sha1.empty()) return ChainRejection::InsufficientHistory;
        const CommitSizeRecord* parent = store.find(cur->parent_sha1);
        if (!parent) return ChainRejection::InsufficientHistory;
        if (parent->is_merge) return ChainRejection::MergeInWindow;
        chain.parents.push_back(*parent);
        cur = parent;
    }
    return chain;
}

}  // namespace cdens::mine
