#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cdens/diff.hpp"
#include "cdens/record.hpp"

namespace cdens::mine {

struct WalkOptions {
    std::string branch = "HEAD";
    std::optional<std::size_t> max_commits;  // cap applied oldest-first
    std::string project;                     // defaults to the repo directory name
};

/// Read access to a local git clone, backed by the git binary. All history
/// walks are first-parent only; merge commits are flagged, not extracted.
class GitRepo {
public:
    explicit GitRepo(std::string path);  // throws config_error when not a repository

    const std::string& path() const { return path_; }
    std::string project_name() const;

    /// First-parent reachable commits in topological parent order (oldest first).
    std::vector<std::string> rev_list(const std::string& branch = "HEAD",
                                      std::optional<std::size_t> max_commits = std::nullopt) const;

    /// Mines one commit: diffs against its single parent (empty tree for
    /// roots), lexes changed lines, applies the rename rule. Merge commits
    /// come back flagged with zeroed features. Throws not_found_error for
    /// unknown sha1s; unreadable blobs are skipped per file and counted.
    CommitSizeRecord extract_commit(const std::string& sha1, const diff::ProfileSet& profiles);

    /// One record per first-parent commit, deterministic for a fixed repo state.
    std::vector<CommitSizeRecord> walk(const WalkOptions& options, const diff::ProfileSet& profiles);

    std::string commit_message(const std::string& sha1) const;

    /// Blob content split into lines (no terminators).
    std::vector<std::string> blob_lines(const std::string& blob_id) const;

    std::size_t skipped_file_warnings() const { return skipped_files_; }

private:
    std::string path_;
    std::size_t skipped_files_ = 0;

    std::string git_output(const std::vector<std::string>& args) const;
};

}  // namespace cdens::mine
