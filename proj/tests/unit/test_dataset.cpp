#include <cmath>
#include <set>

#include "cdens/dataset.hpp"
#include "cdens/errors.hpp"
#include "cdens/stats.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cdens;
using namespace cdens::data;

namespace {

std::string labeled_csv_text() {
    return "commit_id,project,comment,label,kw_fix,changes_total\n"
           "s1,alpha,fix the parser,c,1,3\n"
           "s2,alpha,new feature,a,0,10\n"
           "s3,beta,cleanup,p,0,2\n"
           "s1,alpha,duplicate row,c,1,3\n"
           "s4,beta,another fix,c,1,1\n"
           "s5,beta,feature work,a,0,8\n"
           "s2,alpha,second duplicate,a,0,10\n";
}

ColumnMapping labeled_mapping() {
    ColumnMapping m;
    m.sha1_column = "commit_id";
    m.label_column = "label";
    m.project_column = "project";
    m.message_column = "comment";
    m.keyword_columns = {"kw_fix"};
    m.change_columns = {"changes_total"};
    return m;
}

Dataset mined_fixture() {
    std::vector<mine::CommitSizeRecord> records;
    const char* shas[] = {"s1", "s2", "s3", "s9"};
    int i = 1;
    for (const char* s : shas) {
        mine::CommitSizeRecord r;
        r.sha1 = s;
        r.project = "alpha";
        r.lines_added_by_modified_gross = 10 * i;
        r.lines_added_by_modified_net = 5 * i;
        r.files_modified_gross = 1;
        r.files_modified_net = 1;
        r.density = mine::commit_density(r);
        r.affected_files_ratio_net = mine::affected_files_ratio_net(r);
        records.push_back(r);
        ++i;
    }
    return dataset_from_records(records);
}

}  // namespace

TEST_CASE("load_labeled_csv drops duplicate shas and rejects bad labels") {
    testutil::TempDir tmp;
    testutil::write_file(tmp.path + "/l.csv", labeled_csv_text());
    LoadReport report;
    Dataset d = load_labeled_csv(tmp.path + "/l.csv", labeled_mapping(), &report);
    CHECK(d.rows.size() == 5);  // 7 rows, 2 duplicates
    CHECK(report.duplicates_dropped == 2);
    CHECK(d.rows[0].sha1 == "s1");
    CHECK(d.rows[0].label == 'c');
    CHECK(d.rows[0].message == "fix the parser");
    CHECK(d.columns.size() == 2);
    CHECK(d.columns[0].role == ColumnRole::KeywordFeature);
    CHECK(d.columns[1].role == ColumnRole::ChangeFeature);

    testutil::write_file(tmp.path + "/bad.csv",
                         "commit_id,project,comment,label,kw_fix,changes_total\n"
                         "sX,alpha,msg,x,0,1\n");
    LoadReport bad;
    Dataset db = load_labeled_csv(tmp.path + "/bad.csv", labeled_mapping(), &bad);
    CHECK(db.rows.empty());
    CHECK(bad.rows_rejected == 1);

    testutil::write_file(tmp.path + "/empty.csv", "commit_id,project,comment,label,kw_fix,changes_total\n");
    CHECK(load_labeled_csv(tmp.path + "/empty.csv", labeled_mapping()).rows.empty());

    ColumnMapping wrong = labeled_mapping();
    wrong.label_column = "nope";
    CHECK_THROWS_AS(load_labeled_csv(tmp.path + "/l.csv", wrong), schema_error);
}

TEST_CASE("merge_on_sha is an inner join with schema union") {
    testutil::TempDir tmp;
    testutil::write_file(tmp.path + "/l.csv", labeled_csv_text());
    Dataset labeled = load_labeled_csv(tmp.path + "/l.csv", labeled_mapping());
    Dataset mined = mined_fixture();

    Dataset merged = merge_on_sha(labeled, mined);
    CHECK(merged.rows.size() == 3);  // s1, s2, s3 in both; s4/s5 labeled only
    CHECK(merged.columns.size() == labeled.columns.size() + 24);
    for (const auto& row : merged.rows) CHECK(row.values.size() == merged.columns.size());

    // disjoint sha sets produce an empty join
    Dataset other = mined;
    for (auto& r : other.rows) r.sha1 = "z" + r.sha1;
    CHECK(merge_on_sha(labeled, other).rows.empty());

    // a duplicate column name across the two inputs is a schema error
    Dataset clash = labeled;
    clash.columns.push_back({"density", ColumnRole::ChangeFeature});
    for (auto& r : clash.rows) r.values.push_back(0.0);
    CHECK_THROWS_AS(merge_on_sha(clash, mined), schema_error);

    // commutative up to column order
    Dataset flipped = merge_on_sha(mined, labeled);
    CHECK(flipped.rows.size() == merged.rows.size());
    std::set<std::string> a, b;
    for (const auto& c : merged.columns) a.insert(c.name);
    for (const auto& c : flipped.columns) b.insert(c.name);
    CHECK(a == b);
}

TEST_CASE("vertical_split filters by role") {
    testutil::TempDir tmp;
    testutil::write_file(tmp.path + "/l.csv", labeled_csv_text());
    Dataset merged = merge_on_sha(load_labeled_csv(tmp.path + "/l.csv", labeled_mapping()),
                                  mined_fixture());

    Dataset density = vertical_split(merged, FeatureGroup::Density);
    CHECK(density.columns.size() == 24);
    for (const auto& c : density.columns) CHECK(c.role == ColumnRole::SizeFeature);
    CHECK(density.rows.size() == merged.rows.size());
    CHECK(density.rows[0].label == merged.rows[0].label);  // identity and label retained

    Dataset combined = vertical_split(merged, FeatureGroup::Combined);
    CHECK(combined.columns.size() == merged.columns.size());

    Dataset size_only = vertical_split(merged, FeatureGroup::Density);
    CHECK_THROWS_AS(vertical_split(size_only, FeatureGroup::Keywords), schema_error);

    // idempotence through combined
    Dataset twice = vertical_split(vertical_split(merged, FeatureGroup::Combined), FeatureGroup::Density);
    CHECK(twice.columns.size() == density.columns.size());
}

TEST_CASE("correlation_filter removes one of each highly correlated pair") {
    Dataset d;
    d.columns = {{"x", ColumnRole::ChangeFeature},
                 {"x_copy", ColumnRole::ChangeFeature},
                 {"indep", ColumnRole::ChangeFeature}};
    auto rng = make_rng(3);
    for (int i = 0; i < 60; ++i) {
        Row r;
        double x = static_cast<double>(draw_index(rng, 1000));
        double z = static_cast<double>(draw_index(rng, 1000));
        // keep "indep" decorrelated from x
        r.values = {x, x, z};
        r.label = 'a';
        d.rows.push_back(r);
    }
    auto res = correlation_filter(d, 0.75);
    CHECK(res.removed.size() == 1);
    CHECK(res.kept.size() == 2);
    CHECK((res.removed[0] == "x" || res.removed[0] == "x_copy"));

    // nothing above the cutoff: nothing removed
    Dataset indep;
    indep.columns = {{"a", ColumnRole::ChangeFeature}, {"b", ColumnRole::ChangeFeature}};
    auto rng2 = make_rng(4);
    for (int i = 0; i < 200; ++i) {
        Row r;
        r.values = {static_cast<double>(draw_index(rng2, 1000)),
                    static_cast<double>(draw_index(rng2, 1000))};
        indep.rows.push_back(r);
    }
    auto res2 = correlation_filter(indep, 0.75);
    CHECK(res2.removed.empty());
    CHECK(res2.kept.size() == 2);
}

TEST_CASE("correlation_filter output never leaves a pair above the cutoff") {
    auto rng = make_rng(5);
    Dataset d;
    for (int c = 0; c < 6; ++c)
        d.columns.push_back({"c" + std::to_string(c), ColumnRole::ChangeFeature});
    std::vector<double> base(80);
    for (auto& v : base) v = static_cast<double>(draw_index(rng, 1000));
    for (int i = 0; i < 80; ++i) {
        Row r;
        double noise = static_cast<double>(draw_index(rng, 50));
        r.values = {base[i],
                    base[i] + noise,
                    base[i] * 2.0,
                    static_cast<double>(draw_index(rng, 1000)),
                    static_cast<double>(draw_index(rng, 1000)),
                    base[i] - noise * 3.0};
        d.rows.push_back(r);
    }
    auto res = correlation_filter(d, 0.75);
    Dataset kept = keep_feature_columns(d, res.kept);
    for (std::size_t i = 0; i < kept.columns.size(); ++i)
        for (std::size_t j = i + 1; j < kept.columns.size(); ++j) {
            double r = std::abs(stats::pearson(kept.column_values(i), kept.column_values(j)));
            CHECK(r <= 0.75);
        }
}

TEST_CASE("variance_filter drops constant and near-zero-variance columns") {
    Dataset d;
    d.columns = {{"constant", ColumnRole::ChangeFeature},
                 {"balanced", ColumnRole::ChangeFeature},
                 {"nzv", ColumnRole::ChangeFeature}};
    for (int i = 0; i < 100; ++i) {
        Row r;
        r.values = {7.0, static_cast<double>(i % 2), i == 50 ? 5.0 : 0.0};
        d.rows.push_back(r);
    }
    Dataset out = variance_filter(d);
    REQUIRE(out.columns.size() == 1);
    CHECK(out.columns[0].name == "balanced");  // 50/50 binary column survives
}

TEST_CASE("split is stratified, deterministic and exhaustive") {
    Dataset d;
    d.columns = {{"f", ColumnRole::ChangeFeature}};
    const char labels[3] = {'a', 'c', 'p'};
    for (int i = 0; i < 1000; ++i) {
        Row r;
        r.sha1 = "s" + std::to_string(i);
        r.label = labels[i % 3 == 0 ? 0 : (i % 3 == 1 ? 1 : 2)];
        r.values = {static_cast<double>(i)};
        d.rows.push_back(r);
    }
    SplitPlan plan;
    plan.seed = 42;
    auto [train, valid] = split(d, plan);
    CHECK(train.rows.size() + valid.rows.size() == 1000);
    CHECK(std::llabs(static_cast<long long>(train.rows.size()) - 850) <= 2);  // per-stratum rounding

    // per-class proportions within one row of 85%
    for (char label : labels) {
        long long total = 0, in_train = 0;
        for (const auto& r : d.rows) total += (r.label == label);
        for (const auto& r : train.rows) in_train += (r.label == label);
        CHECK(std::llabs(in_train - std::llround(0.85 * static_cast<double>(total))) <= 1);
    }

    auto [train2, valid2] = split(d, plan);
    REQUIRE(train2.rows.size() == train.rows.size());
    for (std::size_t i = 0; i < train.rows.size(); ++i) CHECK(train.rows[i].sha1 == train2.rows[i].sha1);

    // disjointness
    std::set<std::string> tset;
    for (const auto& r : train.rows) tset.insert(r.sha1);
    for (const auto& r : valid.rows) CHECK(tset.count(r.sha1) == 0);

    Dataset tiny;
    tiny.columns = d.columns;
    for (int i = 0; i < 9; ++i) tiny.rows.push_back(d.rows[static_cast<std::size_t>(i)]);
    CHECK_THROWS_AS(split(tiny, plan), std::invalid_argument);

    Dataset skewed = d;
    skewed.rows.resize(12);
    for (auto& r : skewed.rows) r.label = 'a';
    skewed.rows[0].label = 'c';  // a single-row class cannot be stratified
    CHECK_THROWS_AS(split(skewed, plan), std::invalid_argument);
}

TEST_CASE("keyword matching is word-bounded and case-insensitive") {
    CHECK(contains_word("Fix NPE in parser", "fix"));
    CHECK(contains_word("fix", "fix"));
    CHECK(contains_word("hot-fix applied", "fix"));
    CHECK_FALSE(contains_word("prefix the name", "fix"));
    CHECK_FALSE(contains_word("fixing things", "fix"));
    CHECK(message_has_any_keyword("will fix later", {"bug", "fix"}));
    CHECK_FALSE(message_has_any_keyword("update docs", {"bug", "fix"}));

    Dataset d;
    d.columns = {{"n", ColumnRole::ChangeFeature}};
    Row r1;
    r1.message = "Fixes the build";
    r1.values = {1.0};
    Row r2;
    r2.message = "add feature";
    r2.values = {2.0};
    d.rows = {r1, r2};
    Dataset with = with_keyword_features(d, {"fixes", "add"});
    REQUIRE(with.columns.size() == 3);
    CHECK(with.columns[1].name == "kw_fixes");
    CHECK(with.rows[0].values[1] == 1.0);
    CHECK(with.rows[0].values[2] == 0.0);
    CHECK(with.rows[1].values[2] == 1.0);
}

TEST_CASE("build_generation_dataset shapes columns per variant") {
    // merged: 1 keyword + 1 change + 24 size columns
    testutil::TempDir tmp;
    testutil::write_file(tmp.path + "/l.csv", labeled_csv_text());
    Dataset merged = merge_on_sha(load_labeled_csv(tmp.path + "/l.csv", labeled_mapping()),
                                  mined_fixture());

    auto make_chain = [&](const std::string& sha, int n_parents) {
        mine::GenerationChain chain;
        chain.principal.sha1 = sha;
        chain.requested_generations = n_parents;
        for (int i = 0; i < n_parents; ++i) {
            mine::CommitSizeRecord p;
            p.sha1 = sha + "_p" + std::to_string(i);
            p.lines_added_by_modified_gross = 4 + i;
            p.lines_added_by_modified_net = 2 + i;
            chain.parents.push_back(p);
        }
        return chain;
    };

    std::vector<mine::GenerationChain> chains = {make_chain("s1", 1), make_chain("s2", 1),
                                                 make_chain("zz", 1)};
    std::vector<std::string> skipped;
    Dataset b1 = build_generation_dataset({Variant::B, 1}, chains, merged, &skipped);
    CHECK(b1.rows.size() == 2);  // chain for unknown sha zz is skipped
    CHECK(skipped == std::vector<std::string>{"zz"});
    CHECK(b1.columns.size() == 24 + 24);
    CHECK(b1.column_index("density_gen1") >= 0);
    CHECK(b1.column_index("kw_fix") < 0);  // size-only principal

    std::vector<mine::GenerationChain> chains2 = {make_chain("s1", 2), make_chain("s2", 3)};
    Dataset d2 = build_generation_dataset({Variant::D, 2}, chains2, merged);
    CHECK(d2.rows.size() == 1);  // the 3-parent chain does not match g=2
    CHECK(d2.column_index("kw_fix") < 0);
    CHECK(d2.column_index("changes_total") >= 0);
    CHECK(d2.columns.size() == 1 + 24 + 48);

    Dataset c1 = build_generation_dataset({Variant::C, 1}, chains, merged);
    CHECK(c1.columns.size() == 2 + 24 + 24);
    Dataset a1 = build_generation_dataset({Variant::A, 1}, chains, merged);
    CHECK(a1.columns.size() == 2 + 24);
    CHECK(a1.column_index("density") < 0);
    CHECK(a1.column_index("density_gen1") >= 0);
}

TEST_CASE("dataset csv round trip preserves schema roles by inference") {
    testutil::TempDir tmp;
    testutil::write_file(tmp.path + "/l.csv", labeled_csv_text());
    Dataset merged = merge_on_sha(load_labeled_csv(tmp.path + "/l.csv", labeled_mapping()),
                                  mined_fixture());
    write_dataset_csv_file(tmp.path + "/m.csv", merged);
    Dataset back = read_dataset_csv(tmp.path + "/m.csv");
    CHECK(back.rows.size() == merged.rows.size());
    CHECK(back.columns.size() == merged.columns.size());
    CHECK(back.role_columns(ColumnRole::SizeFeature).size() == 24);
    CHECK(back.role_columns(ColumnRole::KeywordFeature).size() == 1);
    CHECK(back.rows[0].label == merged.rows[0].label);
    CHECK(back.rows[0].message == merged.rows[0].message);
}
