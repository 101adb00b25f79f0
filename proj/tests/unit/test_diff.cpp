#include <stdexcept>

#include "cdens/diff.hpp"
#include "cdens/rng.hpp"
#include "doctest.h"

using namespace cdens::diff;

namespace {

const LanguageProfile& c_profile() {
    static const ProfileSet set = default_profiles();
    return set.for_path("x.c");
}

std::vector<std::string> repeated(const std::string& prefix, int n) {
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) v.push_back(prefix + std::to_string(i) + ";");
    return v;
}

}  // namespace

TEST_CASE("analyze_hunk counts gross and net independently per side") {
    auto h = analyze_hunk({"int a;", "", "// c"}, {}, c_profile());
    CHECK(h.lines_added_gross == 3);
    CHECK(h.lines_deleted_gross == 0);
    CHECK(h.lines_added_net == 1);
    CHECK(h.lines_deleted_net == 0);

    auto empty = analyze_hunk({}, {}, c_profile());
    CHECK(empty.lines_added_gross == 0);
    CHECK(empty.lines_deleted_gross == 0);
    CHECK(empty.lines_added_net == 0);
    CHECK(empty.lines_deleted_net == 0);

    // block comment spanning the added side; deleted side is one code line
    auto block = analyze_hunk({"/*", "dead", "*/"}, {"x=1;"}, c_profile());
    CHECK(block.lines_added_gross == 3);
    CHECK(block.lines_deleted_gross == 1);
    CHECK(block.lines_added_net == 0);
    CHECK(block.lines_deleted_net == 1);
}

TEST_CASE("aggregate_file sums hunks and derives affected_net") {
    HunkChange commenty{2, 1, 0, 0};
    auto fc = aggregate_file(ChangeKind::Modified, "a.c", {commenty});
    CHECK_FALSE(fc.affected_net);  // zero net lines, file not counted as affected

    HunkChange add5{5, 0, 5, 0};
    auto added = aggregate_file(ChangeKind::Added, "b.c", {add5});
    CHECK(added.affected_net);
    CHECK(added.lines_added_gross == 5);
    CHECK(added.lines_added_net == 5);
    CHECK(added.lines_deleted_gross == 0);

    auto multi = aggregate_file(ChangeKind::Modified, "c.c",
                                {HunkChange{1, 0, 1, 0}, HunkChange{0, 2, 0, 2}});
    CHECK(multi.lines_added_net == 1);
    CHECK(multi.lines_deleted_net == 2);
    CHECK(multi.affected_net);
}

TEST_CASE("aggregate_file rejects hunks inconsistent with the kind") {
    CHECK_THROWS_AS(aggregate_file(ChangeKind::Added, "a.c", {HunkChange{1, 1, 0, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(aggregate_file(ChangeKind::Deleted, "a.c", {HunkChange{1, 0, 0, 0}}),
                    std::invalid_argument);
}

TEST_CASE("rename_similarity ratio and routing") {
    auto lines = repeated("line", 10);
    auto identical = rename_similarity(lines, lines);
    CHECK(identical.similarity == doctest::Approx(1.0));
    CHECK(identical.resolution == RenameResolution::PureRename);

    // 6 of 10 lines shared
    auto changed4 = lines;
    for (int i = 0; i < 4; ++i) changed4[i] = "other" + std::to_string(i);
    auto impure = rename_similarity(lines, changed4);
    CHECK(impure.similarity == doctest::Approx(0.6));
    CHECK(impure.resolution == RenameResolution::ImpureRename);

    // 4 of 10 lines shared: below the 50% threshold
    auto changed6 = lines;
    for (int i = 0; i < 6; ++i) changed6[i] = "other" + std::to_string(i);
    auto split = rename_similarity(lines, changed6);
    CHECK(split.similarity == doctest::Approx(0.4));
    CHECK(split.resolution == RenameResolution::DeleteAddPair);

    CHECK_THROWS_AS(rename_similarity({}, lines), std::invalid_argument);
    CHECK_THROWS_AS(rename_similarity(lines, {}), std::invalid_argument);
}

TEST_CASE("rename_similarity threshold boundary is inclusive at 0.5") {
    auto lines = repeated("keep", 100);
    auto half = lines;
    for (int i = 0; i < 50; ++i) half[i] = "new" + std::to_string(i);
    auto at_half = rename_similarity(lines, half);
    CHECK(at_half.similarity == doctest::Approx(0.5));
    CHECK(at_half.resolution == RenameResolution::ImpureRename);

    auto below = lines;
    for (int i = 0; i < 51; ++i) below[i] = "new" + std::to_string(i);
    auto routed = rename_similarity(lines, below);
    CHECK(routed.similarity == doctest::Approx(0.49));
    CHECK(routed.resolution == RenameResolution::DeleteAddPair);
}

TEST_CASE("rename_similarity is symmetric in its arguments") {
    auto rng = cdens::make_rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::string> a, b;
        std::size_t na = 1 + cdens::draw_index(rng, 20), nb = 1 + cdens::draw_index(rng, 20);
        for (std::size_t i = 0; i < na; ++i)
            a.push_back("l" + std::to_string(cdens::draw_index(rng, 8)));
        for (std::size_t i = 0; i < nb; ++i)
            b.push_back("l" + std::to_string(cdens::draw_index(rng, 8)));
        CHECK(rename_similarity(a, b).similarity == doctest::Approx(rename_similarity(b, a).similarity));
    }
}

TEST_CASE("net never exceeds gross over fuzzed hunks") {
    auto rng = cdens::make_rng(13);
    std::vector<std::string> pool = {"code();", "", "  ", "// c", "/*", "*/", "mid /* x */ end;"};
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<std::string> added, deleted;
        std::size_t na = cdens::draw_index(rng, 10), nd = cdens::draw_index(rng, 10);
        for (std::size_t i = 0; i < na; ++i) added.push_back(pool[cdens::draw_index(rng, pool.size())]);
        for (std::size_t i = 0; i < nd; ++i) deleted.push_back(pool[cdens::draw_index(rng, pool.size())]);
        auto h = analyze_hunk(added, deleted, c_profile());
        CHECK(h.lines_added_net <= h.lines_added_gross);
        CHECK(h.lines_deleted_net <= h.lines_deleted_gross);
        CHECK(h.lines_added_net >= 0);
        CHECK(h.lines_deleted_net >= 0);
    }
}

TEST_CASE("a file of only comments and whitespace is not net-affected") {
    auto h = analyze_hunk({"// a", "", "/* b */", "   "}, {"// old"}, c_profile());
    auto fc = aggregate_file(ChangeKind::Modified, "a.c", {h});
    CHECK_FALSE(fc.affected_net);
    CHECK(fc.lines_added_gross == 4);
    CHECK(fc.lines_deleted_gross == 1);
}
