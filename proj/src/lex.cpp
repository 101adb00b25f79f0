#include "cdens/lex.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "cdens/errors.hpp"
#include "json.hpp"

namespace cdens::diff {

namespace {

bool starts_with_at(std::string_view text, std::size_t pos, std::string_view marker) {
    return text.size() - pos >= marker.size() && text.compare(pos, marker.size(), marker) == 0;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

std::pair<LineClass, LexState> classify_line(std::string_view text, const LanguageProfile& profile,
                                             const LexState& state) {
    std::size_t pos = 0;
    bool has_code = false;
    bool has_comment = false;
    LexState next = state;

    if (next.in_block_comment) {
        const auto& close = profile.block_comment_pairs[*next.open_marker_index].second;
        std::size_t end = text.find(close);
        if (end == std::string_view::npos) {
            return {LineClass::Comment, next};  // entire line stays inside the block
        }
        has_comment = true;
        pos = end + close.size();
        next.in_block_comment = false;
        next.open_marker_index.reset();
    }

    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        // Longest marker match wins; line markers beat block openers on ties.
        std::size_t best_len = 0;
        bool best_is_line = false;
        std::size_t best_pair = 0;
        for (const auto& m : profile.line_comment_markers) {
            if (m.size() >= best_len && starts_with_at(text, pos, m)) {
                best_len = m.size();
                best_is_line = true;
            }
        }
        for (std::size_t i = 0; i < profile.block_comment_pairs.size(); ++i) {
            const auto& open = profile.block_comment_pairs[i].first;
            if (open.size() > best_len && starts_with_at(text, pos, open)) {
                best_len = open.size();
                best_is_line = false;
                best_pair = i;
            }
        }
        if (best_len == 0) {
            has_code = true;
            ++pos;
            continue;
        }
        has_comment = true;
        if (best_is_line) break;  // rest of the line is comment
        const auto& close = profile.block_comment_pairs[best_pair].second;
        std::size_t end = text.find(close, pos + best_len);
        if (end == std::string_view::npos) {
            next.in_block_comment = true;
            next.open_marker_index = best_pair;
            break;
        }
        pos = end + close.size();  // earliest close ends the block
    }

    if (has_code) return {LineClass::Code, next};
    if (has_comment) return {LineClass::Comment, next};
    return {LineClass::Whitespace, next};
}

ProfileSet::ProfileSet(std::vector<LanguageProfile> profiles) : profiles_(std::move(profiles)) {
    fallback_.name = "unknown";
}

ProfileSet ProfileSet::validated(std::vector<LanguageProfile> profiles) {
    std::vector<std::string> seen;
    for (const auto& p : profiles) {
        for (const auto& m : p.line_comment_markers)
            if (m.empty()) throw config_error("profile '" + p.name + "' has an empty line marker");
        for (const auto& [open, close] : p.block_comment_pairs)
            if (open.empty() || close.empty())
                throw config_error("profile '" + p.name + "' has an empty block marker");
        for (const auto& e : p.file_extensions) {
            std::string le = lower(e);
            if (std::find(seen.begin(), seen.end(), le) != seen.end())
                throw config_error("extension '" + le + "' appears in two profiles");
            seen.push_back(le);
        }
    }
    return ProfileSet(std::move(profiles));
}

const LanguageProfile& ProfileSet::for_path(std::string_view path) const {
    std::size_t slash = path.find_last_of('/');
    std::string_view base = slash == std::string_view::npos ? path : path.substr(slash + 1);
    std::size_t dot = base.find_last_of('.');
    if (dot == std::string_view::npos || dot + 1 == base.size()) return fallback_;
    std::string ext = lower(base.substr(dot + 1));
    for (const auto& p : profiles_) {
        if (std::find(p.file_extensions.begin(), p.file_extensions.end(), ext) != p.file_extensions.end())
            return p;
    }
    return fallback_;
}

ProfileSet default_profiles() {
    std::vector<LanguageProfile> ps;
    ps.push_back({"c-family",
                  {"c",  "h",  "cpp", "cxx", "cc", "hpp", "hxx", "hh", "java", "js",  "jsx",
                   "ts", "tsx", "cs", "go",  "rs", "kt",  "kts", "swift", "scala", "groovy", "php"},
                  {"//"},
                  {{"/*", "*/"}}});
    ps.push_back({"scripting",
                  {"py", "rb", "sh", "bash", "pl", "pm", "r", "yml", "yaml", "tcl", "mk", "cmake"},
                  {"#"},
                  {}});
    ps.push_back({"sql", {"sql"}, {"--"}, {{"/*", "*/"}}});
    ps.push_back({"markup", {"xml", "html", "htm", "xhtml", "svg", "xsl", "xsd"}, {}, {{"<!--", "-->"}}});
    return ProfileSet::validated(std::move(ps));
}

ProfileSet load_profiles_json(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw config_error("cannot open profile set: " + path);
    nlohmann::json doc;
    try {
        is >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw config_error("invalid profile JSON in " + path + ": " + e.what());
    }
    std::vector<LanguageProfile> ps;
    for (const auto& jp : doc.at("profiles")) {
        LanguageProfile p;
        p.name = jp.value("name", "");
        for (const auto& e : jp.value("extensions", nlohmann::json::array()))
            p.file_extensions.push_back(lower(e.get<std::string>()));
        for (const auto& m : jp.value("line_markers", nlohmann::json::array()))
            p.line_comment_markers.push_back(m.get<std::string>());
        for (const auto& pr : jp.value("block_pairs", nlohmann::json::array()))
            p.block_comment_pairs.emplace_back(pr.at(0).get<std::string>(), pr.at(1).get<std::string>());
        ps.push_back(std::move(p));
    }
    return ProfileSet::validated(std::move(ps));
}

}  // namespace cdens::diff
