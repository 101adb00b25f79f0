#include "cdens/diff.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace cdens::diff {

namespace {

std::int64_t count_code_lines(const std::vector<std::string>& lines, const LanguageProfile& profile) {
    LexState state;  // fresh per hunk side
    std::int64_t code = 0;
    for (const auto& line : lines) {
        auto [cls, next] = classify_line(line, profile, state);
        if (cls == LineClass::Code) ++code;
        state = next;
    }
    return code;
}

}  // namespace

HunkChange analyze_hunk(const std::vector<std::string>& added_lines,
                        const std::vector<std::string>& deleted_lines,
                        const LanguageProfile& profile) {
    HunkChange h;
    h.lines_added_gross = static_cast<std::int64_t>(added_lines.size());
    h.lines_deleted_gross = static_cast<std::int64_t>(deleted_lines.size());
    h.lines_added_net = count_code_lines(added_lines, profile);
    h.lines_deleted_net = count_code_lines(deleted_lines, profile);
    return h;
}

FileChange aggregate_file(ChangeKind kind, std::string path, std::vector<HunkChange> hunks) {
    FileChange fc;
    fc.path = std::move(path);
    fc.kind = kind;
    for (const auto& h : hunks) {
        if (kind == ChangeKind::Added && h.lines_deleted_gross > 0)
            throw std::invalid_argument("added file '" + fc.path + "' has deleted lines");
        if (kind == ChangeKind::Deleted && h.lines_added_gross > 0)
            throw std::invalid_argument("deleted file '" + fc.path + "' has added lines");
        fc.lines_added_gross += h.lines_added_gross;
        fc.lines_deleted_gross += h.lines_deleted_gross;
        fc.lines_added_net += h.lines_added_net;
        fc.lines_deleted_net += h.lines_deleted_net;
    }
    fc.hunks = std::move(hunks);
    fc.affected_net = (fc.lines_added_net + fc.lines_deleted_net) > 0;
    return fc;
}

RenameDecision rename_similarity(const std::vector<std::string>& old_lines,
                                 const std::vector<std::string>& new_lines) {
    if (old_lines.empty() || new_lines.empty())
        throw std::invalid_argument("rename_similarity needs non-empty line sequences");

    std::unordered_map<std::string, std::int64_t> counts;
    counts.reserve(old_lines.size());
    for (const auto& l : old_lines) ++counts[l];
    std::int64_t common = 0;
    for (const auto& l : new_lines) {
        auto it = counts.find(l);
        if (it != counts.end() && it->second > 0) {
            --it->second;
            ++common;
        }
    }

    RenameDecision d;
    d.similarity = static_cast<double>(common) /
                   static_cast<double>(std::max(old_lines.size(), new_lines.size()));
    if (d.similarity >= 1.0)
        d.resolution = RenameResolution::PureRename;
    else if (d.similarity >= 0.5)
        d.resolution = RenameResolution::ImpureRename;
    else
        d.resolution = RenameResolution::DeleteAddPair;
    return d;
}

}  // namespace cdens::diff
