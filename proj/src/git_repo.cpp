#include "cdens/git_repo.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <stdexcept>

#include "cdens/errors.hpp"

namespace cdens::mine {

namespace {

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') out += "'\\''";
        else out.push_back(c);
    }
    out.push_back('\'');
    return out;
}

std::string build_command(const std::string& repo, const std::vector<std::string>& args) {
    std::string cmd = "git -c core.quotepath=false -c log.showRoot=true -C " + shell_quote(repo);
    for (const auto& a : args) cmd += " " + shell_quote(a);
    return cmd;
}

// RAII line reader over a git subprocess.
class GitPipe {
public:
    explicit GitPipe(const std::string& cmd) : f_(popen(cmd.c_str(), "r")) {
        if (!f_) throw config_error("failed to spawn git");
    }
    GitPipe(const GitPipe&) = delete;
    GitPipe& operator=(const GitPipe&) = delete;
    ~GitPipe() {
        if (f_) pclose(f_);
    }

    // Reads one line, stripping only the trailing '\n'. CR bytes are file
    // content and stay in place.
    bool read_line(std::string& out) {
        ssize_t n = getline(&buf_, &cap_, f_);
        if (n < 0) return false;
        if (n > 0 && buf_[n - 1] == '\n') --n;
        out.assign(buf_, static_cast<std::size_t>(n));
        return true;
    }

    int close() {
        int status = pclose(f_);
        f_ = nullptr;
        if (buf_) {
            free(buf_);
            buf_ = nullptr;
        }
        return status;
    }

private:
    FILE* f_ = nullptr;
    char* buf_ = nullptr;
    std::size_t cap_ = 0;
};

// Reverses git's C-style path quoting ("\t", "\"", "\\", "\ooo").
std::string unquote_path(const std::string& s) {
    if (s.size() < 2 || s.front() != '"' || s.back() != '"') return s;
    std::string out;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        char c = s[i];
        if (c != '\\') {
            out.push_back(c);
            continue;
        }
        ++i;
        if (i + 1 > s.size()) break;
        char e = s[i];
        switch (e) {
            case 'n': out.push_back('\n'); break;
            case 't': out.push_back('\t'); break;
            case 'r': out.push_back('\r'); break;
            case '\\': out.push_back('\\'); break;
            case '"': out.push_back('"'); break;
            default:
                if (e >= '0' && e <= '7' && i + 2 < s.size()) {
                    int v = (e - '0') * 64 + (s[i + 1] - '0') * 8 + (s[i + 2] - '0');
                    out.push_back(static_cast<char>(v));
                    i += 2;
                } else {
                    out.push_back(e);
                }
        }
    }
    return out;
}

std::string strip_prefix(const std::string& path) {
    std::string p = unquote_path(path);
    if (p == "/dev/null") return "";
    if (p.size() > 2 && (p[0] == 'a' || p[0] == 'b') && p[1] == '/') return p.substr(2);
    return p;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

// One file entry of a parsed patch, before rename resolution.
struct RawFileDiff {
    std::string old_path, new_path;
    char status = 'M';  // A, D, M, R
    bool binary = false;
    int git_similarity = 0;  // percent, renames only
    std::string old_blob, new_blob;
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> hunks;  // (added, deleted)
};

struct RawCommit {
    std::string sha1;
    std::vector<std::string> parents;
    std::int64_t timestamp = 0;
    std::vector<RawFileDiff> files;
};

constexpr char kCommitMark = '\x01';

bool starts_with(const std::string& s, const char* prefix) {
    return s.rfind(prefix, 0) == 0;
}

}  // namespace

// Incremental parser over `git log/diff-tree -p` output. Commit boundaries
// are marked by a \x01-prefixed format line; hunk bodies are consumed by the
// counts in the @@ header, so content lines can never be mistaken for
// headers.
class DiffStream {
public:
    explicit DiffStream(GitPipe& pipe) : pipe_(pipe) {}

    bool next_commit(RawCommit& out) {
        if (!pending_header_ && !find_header()) return false;
        pending_header_ = false;
        parse_commit_line(out);
        out.files.clear();
        std::string line;
        while (pipe_.read_line(line)) {
            if (!line.empty() && line[0] == kCommitMark) {
                header_line_ = line;
                pending_header_ = true;
                return true;
            }
            consume_patch_line(line, out);
        }
        return true;
    }

private:
    GitPipe& pipe_;
    std::string header_line_;
    bool pending_header_ = false;
    long hunk_remaining_ = 0;

    bool find_header() {
        std::string line;
        while (pipe_.read_line(line)) {
            if (!line.empty() && line[0] == kCommitMark) {
                header_line_ = line;
                return true;
            }
        }
        return false;
    }

    void parse_commit_line(RawCommit& out) {
        // \x01<sha>|<parents>|<timestamp>
        std::string body = header_line_.substr(1);
        std::size_t p1 = body.find('|');
        std::size_t p2 = body.rfind('|');
        out.sha1 = body.substr(0, p1);
        out.parents.clear();
        std::istringstream ps(body.substr(p1 + 1, p2 - p1 - 1));
        std::string parent;
        while (ps >> parent) out.parents.push_back(parent);
        out.timestamp = std::stoll(body.substr(p2 + 1));
        hunk_remaining_ = 0;
    }

    void consume_patch_line(const std::string& line, RawCommit& out) {
        if (hunk_remaining_ > 0) {
            if (!line.empty() && line[0] == '\\') return;  // "No newline" marker
            auto& hunk = out.files.back().hunks.back();
            char c = line.empty() ? ' ' : line[0];
            if (c == '+') hunk.first.push_back(line.substr(1));
            else if (c == '-') hunk.second.push_back(line.substr(1));
            --hunk_remaining_;
            return;
        }
        if (starts_with(line, "diff --git ")) {
            out.files.emplace_back();
            parse_diff_git_paths(line, out.files.back());
            return;
        }
        if (out.files.empty()) return;
        RawFileDiff& f = out.files.back();
        if (starts_with(line, "new file mode")) {
            f.status = 'A';
        } else if (starts_with(line, "deleted file mode")) {
            f.status = 'D';
        } else if (starts_with(line, "similarity index ")) {
            f.git_similarity = std::atoi(line.c_str() + 17);
        } else if (starts_with(line, "rename from ")) {
            f.status = 'R';
            f.old_path = unquote_path(line.substr(12));
        } else if (starts_with(line, "rename to ")) {
            f.status = 'R';
            f.new_path = unquote_path(line.substr(10));
        } else if (starts_with(line, "index ")) {
            // index <old>..<new>[ <mode>]
            std::size_t dots = line.find("..", 6);
            if (dots != std::string::npos) {
                f.old_blob = line.substr(6, dots - 6);
                std::size_t end = line.find(' ', dots + 2);
                f.new_blob = line.substr(dots + 2, end == std::string::npos ? std::string::npos
                                                                            : end - dots - 2);
            }
        } else if (starts_with(line, "Binary files ") || starts_with(line, "GIT binary patch")) {
            f.binary = true;
        } else if (starts_with(line, "--- ")) {
            std::string p = strip_prefix(line.substr(4));
            if (!p.empty() && f.status != 'R') f.old_path = p;
        } else if (starts_with(line, "+++ ")) {
            std::string p = strip_prefix(line.substr(4));
            if (!p.empty() && f.status != 'R') f.new_path = p;
        } else if (starts_with(line, "@@ ")) {
            long old_count = 1, new_count = 1;
            parse_hunk_counts(line, old_count, new_count);
            f.hunks.emplace_back();
            hunk_remaining_ = old_count + new_count;
        }
    }

    static void parse_hunk_counts(const std::string& line, long& old_count, long& new_count) {
        // @@ -start[,count] +start[,count] @@
        std::size_t minus = line.find('-');
        std::size_t plus = line.find('+', minus);
        old_count = span_count(line, minus + 1);
        new_count = span_count(line, plus + 1);
    }

    static long span_count(const std::string& line, std::size_t pos) {
        std::size_t end = line.find_first_not_of("0123456789", pos);
        if (end != std::string::npos && line[end] == ',') {
            return std::atol(line.c_str() + end + 1);
        }
        return 1;
    }

    static void parse_diff_git_paths(const std::string& line, RawFileDiff& f) {
        // Best-effort; --- / +++ / rename lines override when present.
        std::string rest = line.substr(11);
        std::size_t sep = rest.rfind(" b/");
        if (sep != std::string::npos) {
            f.old_path = strip_prefix(rest.substr(0, sep));
            f.new_path = strip_prefix(rest.substr(sep + 1));
        }
    }
};

GitRepo::GitRepo(std::string path) : path_(std::move(path)) {
    while (path_.size() > 1 && path_.back() == '/') path_.pop_back();
    GitPipe pipe(build_command(path_, {"rev-parse", "--git-dir"}) + " 2>/dev/null");
    std::string line;
    bool ok = pipe.read_line(line);
    if (pipe.close() != 0 || !ok) throw config_error("not a git repository: " + path_);
}

std::string GitRepo::project_name() const {
    std::size_t slash = path_.find_last_of('/');
    return slash == std::string::npos ? path_ : path_.substr(slash + 1);
}

std::string GitRepo::git_output(const std::vector<std::string>& args) const {
    GitPipe pipe(build_command(path_, args));
    std::string out, line;
    while (pipe.read_line(line)) {
        out += line;
        out.push_back('\n');
    }
    if (pipe.close() != 0) throw not_found_error("git command failed in " + path_);
    return out;
}

std::vector<std::string> GitRepo::rev_list(const std::string& branch,
                                           std::optional<std::size_t> max_commits) const {
    GitPipe pipe(build_command(path_, {"rev-list", "--first-parent", "--topo-order", "--reverse", branch}));
    std::vector<std::string> shas;
    std::string line;
    while (pipe.read_line(line)) {
        if (!line.empty()) shas.push_back(line);
        if (max_commits && shas.size() >= *max_commits) break;
    }
    pipe.close();
    if (shas.empty() && !max_commits) throw config_error("no commits reachable from " + branch);
    return shas;
}

std::vector<std::string> GitRepo::blob_lines(const std::string& blob_id) const {
    return split_lines(git_output({"cat-file", "blob", blob_id}));
}

namespace {

void add_file_change(CommitSizeRecord& rec, const diff::FileChange& fc) {
    using diff::ChangeKind;
    std::int64_t net = fc.affected_net ? 1 : 0;
    switch (fc.kind) {
        case ChangeKind::Added:
            rec.files_added_gross += 1;
            rec.files_added_net += net;
            rec.lines_added_by_added_gross += fc.lines_added_gross;
            rec.lines_added_by_added_net += fc.lines_added_net;
            break;
        case ChangeKind::Deleted:
            rec.files_deleted_gross += 1;
            rec.files_deleted_net += net;
            rec.lines_deleted_by_deleted_gross += fc.lines_deleted_gross;
            rec.lines_deleted_by_deleted_net += fc.lines_deleted_net;
            break;
        case ChangeKind::Modified:
            rec.files_modified_gross += 1;
            rec.files_modified_net += net;
            rec.lines_added_by_modified_gross += fc.lines_added_gross;
            rec.lines_added_by_modified_net += fc.lines_added_net;
            rec.lines_deleted_by_modified_gross += fc.lines_deleted_gross;
            rec.lines_deleted_by_modified_net += fc.lines_deleted_net;
            break;
        case ChangeKind::Renamed:
            rec.files_renamed_gross += 1;
            rec.files_renamed_net += net;
            rec.lines_added_by_renamed_gross += fc.lines_added_gross;
            rec.lines_added_by_renamed_net += fc.lines_added_net;
            rec.lines_deleted_by_renamed_gross += fc.lines_deleted_gross;
            rec.lines_deleted_by_renamed_net += fc.lines_deleted_net;
            break;
    }
}

}  // namespace

// Turns one parsed file entry into FileChange(s) and folds them into the
// record. Renames are re-routed by the line-multiset similarity: git only
// proposes the pairing.
void fold_raw_file(GitRepo& repo, CommitSizeRecord& rec, const RawFileDiff& raw,
                   const diff::ProfileSet& profiles, std::size_t& skipped) {
    using diff::ChangeKind;
    const std::string& path = raw.new_path.empty() ? raw.old_path : raw.new_path;
    const diff::LanguageProfile& profile = profiles.for_path(path);

    std::vector<diff::HunkChange> hunks;
    hunks.reserve(raw.hunks.size());
    for (const auto& [added, deleted] : raw.hunks)
        hunks.push_back(diff::analyze_hunk(added, deleted, profile));

    if (raw.status != 'R') {
        ChangeKind kind = raw.status == 'A'   ? ChangeKind::Added
                          : raw.status == 'D' ? ChangeKind::Deleted
                                              : ChangeKind::Modified;
        add_file_change(rec, diff::aggregate_file(kind, path, std::move(hunks)));
        return;
    }

    // Rename: byte-identical pairs are pure by definition; binary pairs keep
    // git's score (no lines to compare).
    if (raw.git_similarity >= 100 || (raw.binary && raw.hunks.empty() && raw.old_blob.empty())) {
        auto fc = diff::aggregate_file(ChangeKind::Renamed, path, {});
        fc.rename_similarity = 1.0;
        add_file_change(rec, fc);
        return;
    }
    if (raw.binary) {
        auto fc = diff::aggregate_file(ChangeKind::Renamed, path, {});
        fc.rename_similarity = std::max(0.5, raw.git_similarity / 100.0);
        add_file_change(rec, fc);
        return;
    }

    std::vector<std::string> old_lines, new_lines;
    try {
        old_lines = repo.blob_lines(raw.old_blob);
        new_lines = repo.blob_lines(raw.new_blob);
    } catch (const not_found_error&) {
        ++skipped;
        return;
    }
    if (old_lines.empty() || new_lines.empty()) {
        // Degenerate rename (one side empty); keep git's pairing.
        auto fc = diff::aggregate_file(ChangeKind::Renamed, path, std::move(hunks));
        fc.rename_similarity = std::max(0.5, raw.git_similarity / 100.0);
        add_file_change(rec, fc);
        return;
    }

    auto decision = diff::rename_similarity(old_lines, new_lines);
    if (decision.resolution == diff::RenameResolution::DeleteAddPair) {
        std::vector<diff::HunkChange> add_hunk = {diff::analyze_hunk(new_lines, {}, profile)};
        std::vector<diff::HunkChange> del_hunk = {
            diff::analyze_hunk({}, old_lines, profiles.for_path(raw.old_path))};
        add_file_change(rec, diff::aggregate_file(ChangeKind::Deleted, raw.old_path, std::move(del_hunk)));
        add_file_change(rec, diff::aggregate_file(ChangeKind::Added, path, std::move(add_hunk)));
        return;
    }
    auto fc = diff::aggregate_file(ChangeKind::Renamed, path, std::move(hunks));
    fc.rename_similarity = decision.similarity;
    add_file_change(rec, fc);
}

namespace {

CommitSizeRecord finish_record(GitRepo& repo, RawCommit& raw, const std::string& project,
                               const diff::ProfileSet& profiles, std::size_t& skipped) {
    CommitSizeRecord rec;
    rec.sha1 = raw.sha1;
    rec.parent_sha1 = raw.parents.empty() ? "" : raw.parents[0];
    rec.project = project;
    rec.author_timestamp = raw.timestamp;
    rec.is_merge = raw.parents.size() > 1;
    if (rec.is_merge) return rec;  // flagged, zeroed, filtered downstream
    for (const auto& f : raw.files) {
        try {
            fold_raw_file(repo, rec, f, profiles, skipped);
        } catch (const std::invalid_argument&) {
            ++skipped;
        }
    }
    rec.affected_files_ratio_net = affected_files_ratio_net(rec);
    rec.density = commit_density(rec);
    return rec;
}

const char* kLogFormat = "--format=\x01%H|%P|%at";

}  // namespace

CommitSizeRecord GitRepo::extract_commit(const std::string& sha1, const diff::ProfileSet& profiles) {
    GitPipe probe(build_command(path_, {"rev-parse", "--verify", sha1 + "^{commit}"}) + " 2>/dev/null");
    std::string resolved;
    bool ok = probe.read_line(resolved);
    if (probe.close() != 0 || !ok) throw not_found_error("cannot resolve commit: " + sha1);

    GitPipe pipe(build_command(
        path_, {"log", "-1", "--first-parent", kLogFormat, "-p", "-M50%", "--full-index",
                "--no-color", "--no-ext-diff", "--no-textconv", resolved}));
    DiffStream stream(pipe);
    RawCommit raw;
    if (!stream.next_commit(raw)) throw not_found_error("no log output for: " + sha1);
    pipe.close();
    return finish_record(*this, raw, project_name(), profiles, skipped_files_);
}

std::vector<CommitSizeRecord> GitRepo::walk(const WalkOptions& options, const diff::ProfileSet& profiles) {
    std::string project = options.project.empty() ? project_name() : options.project;
    GitPipe pipe(build_command(path_, {"log", "--first-parent", "--topo-order", "--reverse",
                                       kLogFormat, "-p", "-M50%", "--full-index", "--no-color",
                                       "--no-ext-diff", "--no-textconv", options.branch}));
    DiffStream stream(pipe);
    std::vector<CommitSizeRecord> records;
    RawCommit raw;
    while (stream.next_commit(raw)) {
        records.push_back(finish_record(*this, raw, project, profiles, skipped_files_));
        if (options.max_commits && records.size() >= *options.max_commits) break;
    }
    pipe.close();
    return records;
}

std::string GitRepo::commit_message(const std::string& sha1) const {
    return git_output({"log", "-1", "--format=%B", sha1});
}

}  // namespace cdens::mine
