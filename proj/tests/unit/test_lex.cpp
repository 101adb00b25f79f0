#include <string>
#include <vector>

#include "cdens/errors.hpp"
#include "cdens/lex.hpp"
#include "cdens/rng.hpp"
#include "doctest.h"

using namespace cdens::diff;

namespace {

const LanguageProfile& c_profile() {
    static const ProfileSet set = default_profiles();
    return set.for_path("x.cpp");
}

LineClass classify(const std::string& text, LexState& state) {
    auto [cls, next] = classify_line(text, c_profile(), state);
    state = next;
    return cls;
}

}  // namespace

TEST_CASE("classify_line handles the basic C-family cases") {
    LexState s;
    CHECK(classify_line("", c_profile(), s).first == LineClass::Whitespace);
    CHECK(classify_line("   \t ", c_profile(), s).first == LineClass::Whitespace);
    CHECK(classify_line("    // TODO", c_profile(), s).first == LineClass::Comment);
    CHECK(classify_line("int a = 1;", c_profile(), s).first == LineClass::Code);

    auto [cls, next] = classify_line("x += 1; /* inc", c_profile(), s);
    CHECK(cls == LineClass::Code);  // code before the marker dominates
    CHECK(next.in_block_comment);

    auto [cls2, next2] = classify_line("still commented */ y=2;", c_profile(), next);
    CHECK(cls2 == LineClass::Code);
    CHECK_FALSE(next2.in_block_comment);
}

TEST_CASE("classify_line block comment state machine") {
    LexState s;
    CHECK(classify("/* open", s) == LineClass::Comment);
    CHECK(s.in_block_comment);
    CHECK(classify("inside block", s) == LineClass::Comment);
    CHECK(classify("", s) == LineClass::Comment);  // blank line still inside the block
    CHECK(classify("*/", s) == LineClass::Comment);
    CHECK_FALSE(s.in_block_comment);
    CHECK(classify("", s) == LineClass::Whitespace);
}

TEST_CASE("classify_line closes a block at the earliest close marker") {
    LexState s;
    auto [cls, next] = classify_line("/* a */ b(); /* c */", c_profile(), s);
    CHECK(cls == LineClass::Code);
    CHECK_FALSE(next.in_block_comment);

    auto [cls2, next2] = classify_line("/* a */ /* open", c_profile(), s);
    CHECK(cls2 == LineClass::Comment);
    CHECK(next2.in_block_comment);
}

TEST_CASE("classify_line treats stray close markers as code") {
    LexState s;
    CHECK(classify_line("*/ x", c_profile(), s).first == LineClass::Code);
    CHECK(classify_line("*/", c_profile(), s).first == LineClass::Code);
}

TEST_CASE("classify_line is deterministic") {
    LexState s;
    for (int i = 0; i < 5; ++i) {
        auto [cls, next] = classify_line("a(); // t /* x", c_profile(), s);
        CHECK(cls == LineClass::Code);
        CHECK_FALSE(next.in_block_comment);
    }
}

TEST_CASE("profiles: scripting, sql and markup syntax") {
    ProfileSet set = default_profiles();
    LexState s;
    CHECK(classify_line("# comment", set.for_path("run.py"), s).first == LineClass::Comment);
    CHECK(classify_line("x = 1  # trailing", set.for_path("run.py"), s).first == LineClass::Code);
    CHECK(classify_line("-- drop it", set.for_path("q.sql"), s).first == LineClass::Comment);
    CHECK(classify_line("SELECT 1; -- note", set.for_path("q.sql"), s).first == LineClass::Code);

    auto [cls, next] = classify_line("<!-- heading", set.for_path("page.html"), s);
    CHECK(cls == LineClass::Comment);
    CHECK(next.in_block_comment);
    auto [cls2, next2] = classify_line("still --> <b>x</b>", set.for_path("page.html"), next);
    CHECK(cls2 == LineClass::Code);
    CHECK_FALSE(next2.in_block_comment);
}

TEST_CASE("unknown extensions fall back to code-vs-whitespace") {
    ProfileSet set = default_profiles();
    const auto& profile = set.for_path("README.weird");
    LexState s;
    CHECK(classify_line("// not a comment here", profile, s).first == LineClass::Code);
    CHECK(classify_line("   ", profile, s).first == LineClass::Whitespace);
}

TEST_CASE("profile validation rejects duplicates and empty markers") {
    std::vector<LanguageProfile> dup = {{"one", {"x"}, {"//"}, {}}, {"two", {"x"}, {"#"}, {}}};
    CHECK_THROWS_AS(ProfileSet::validated(dup), cdens::config_error);
    std::vector<LanguageProfile> empty_marker = {{"one", {"x"}, {""}, {}}};
    CHECK_THROWS_AS(ProfileSet::validated(empty_marker), cdens::config_error);
}

TEST_CASE("classify_line splitting a line stream at any point preserves results") {
    // concatenation property: threading state line by line must match a
    // single pass over the whole sequence
    std::vector<std::string> pool = {
        "int x = 0;", "/* open", "*/", "// line", "", "  ", "a(); /* t */ b();",
        "/* a */ /* open", "close */ code();", "text /* open */ more", "}",
    };
    auto rng = cdens::make_rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::string> lines;
        for (int i = 0; i < 12; ++i) lines.push_back(pool[cdens::draw_index(rng, pool.size())]);

        std::vector<LineClass> whole;
        LexState s;
        for (const auto& l : lines) whole.push_back(classify(l, s));

        // scan the first segment, hand the carried state to a second scan
        std::size_t cut = cdens::draw_index(rng, lines.size());
        std::vector<LineClass> split;
        LexState carried;
        for (std::size_t i = 0; i < cut; ++i) split.push_back(classify(lines[i], carried));
        LexState resumed = carried;
        for (std::size_t i = cut; i < lines.size(); ++i) split.push_back(classify(lines[i], resumed));
        CHECK(split == whole);
    }
}
