#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdens/lex.hpp"

namespace cdens::diff {

/// Line counts of one contiguous change region. Net counts only lines the
/// lexer classified as Code, so net <= gross componentwise.
struct HunkChange {
    std::int64_t lines_added_gross = 0;
    std::int64_t lines_deleted_gross = 0;
    std::int64_t lines_added_net = 0;
    std::int64_t lines_deleted_net = 0;
};

enum class ChangeKind { Added, Deleted, Modified, Renamed };

/// One file-level change, aggregated over its hunks.
struct FileChange {
    std::string path;
    ChangeKind kind = ChangeKind::Modified;
    double rename_similarity = 1.0;  // meaningful for Renamed only, in [0.5, 1]
    std::vector<HunkChange> hunks;
    std::int64_t lines_added_gross = 0;
    std::int64_t lines_deleted_gross = 0;
    std::int64_t lines_added_net = 0;
    std::int64_t lines_deleted_net = 0;
    bool affected_net = false;  // false iff the hunks net to zero lines
};

/// Lexes the added and deleted line runs of one hunk independently, each
/// starting from a fresh not-in-block state. Gross counts are the sequence
/// lengths; net counts are the Code lines.
HunkChange analyze_hunk(const std::vector<std::string>& added_lines,
                        const std::vector<std::string>& deleted_lines,
                        const LanguageProfile& profile);

/// Sums hunks into a FileChange and derives affected_net. A file whose hunks
/// net to zero does not count as affected. Throws std::invalid_argument when
/// the hunks contradict the kind (Added with deletions, Deleted with adds).
FileChange aggregate_file(ChangeKind kind, std::string path, std::vector<HunkChange> hunks);

enum class RenameResolution { PureRename, ImpureRename, DeleteAddPair };

struct RenameDecision {
    double similarity = 0.0;  // |line multiset intersection| / max(|old|, |new|)
    RenameResolution resolution = RenameResolution::DeleteAddPair;
};

/// Line-multiset similarity between the two file bodies, routed at the
/// standard 50% threshold: 1.0 -> pure rename, [0.5, 1.0) -> impure rename,
/// below 0.5 the change is one deleted plus one added file. Throws
/// std::invalid_argument on empty input.
RenameDecision rename_similarity(const std::vector<std::string>& old_lines,
                                 const std::vector<std::string>& new_lines);

}  // namespace cdens::diff
