#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cdens::diff {

/// Three-way classification of a changed line. Every line gets exactly one.
enum class LineClass { Code, Comment, Whitespace };

/// Comment syntax for one family of file types.
struct LanguageProfile {
    std::string name;
    std::vector<std::string> file_extensions;  // lowercase, without the dot
    std::vector<std::string> line_comment_markers;
    std::vector<std::pair<std::string, std::string>> block_comment_pairs;  // (open, close)
};

/// Multi-line comment state carried from line to line within one scan.
/// open_marker_index identifies which block pair is currently open.
struct LexState {
    bool in_block_comment = false;
    std::optional<std::size_t> open_marker_index;
};

/// Classifies one line (no terminator) under `profile`, threading block
/// comment state. Total: unknown syntax falls through to Code. A line with
/// code before a trailing comment counts as Code; blocks close at the
/// earliest matching close marker (non-greedy).
std::pair<LineClass, LexState> classify_line(std::string_view text, const LanguageProfile& profile,
                                             const LexState& state);

/// Named set of profiles; lookup by lowercase file extension. Files with no
/// matching profile are lexed with an empty profile (code vs whitespace only).
class ProfileSet {
public:
    ProfileSet() = default;
    explicit ProfileSet(std::vector<LanguageProfile> profiles);

    // Validates markers non-empty and extensions unique across profiles.
    static ProfileSet validated(std::vector<LanguageProfile> profiles);

    const LanguageProfile& for_path(std::string_view path) const;
    const std::vector<LanguageProfile>& profiles() const { return profiles_; }

private:
    std::vector<LanguageProfile> profiles_;
    LanguageProfile fallback_;  // empty: everything non-blank is Code
};

/// Built-in profiles: C-family (// and /* */), scripting (#), SQL (--),
/// and XML/HTML (<!-- -->).
ProfileSet default_profiles();

/// Loads a profile set from a JSON document:
///   {"profiles":[{"name":..,"extensions":[..],"line_markers":[..],
///                 "block_pairs":[["/*","*/"],..]}]}
ProfileSet load_profiles_json(const std::string& path);

}  // namespace cdens::diff
