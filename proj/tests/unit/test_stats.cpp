#include <cmath>

#include "cdens/rng.hpp"
#include "cdens/stats.hpp"
#include "doctest.h"

using namespace cdens;
using namespace cdens::stats;

TEST_CASE("ecdf evaluates fractions and type-1 quantiles") {
    Ecdf e({1, 2, 2, 5});
    CHECK(e(2.0) == doctest::Approx(0.75));
    CHECK(e(0.5) == 0.0);
    CHECK(e(5.0) == 1.0);   // ECDF at the max is 1
    CHECK(e(99.0) == 1.0);
    CHECK(e.quantile(0.5) == 2.0);
    CHECK(e.quantile(0.75) == 2.0);
    CHECK(e.quantile(0.76) == 5.0);
    CHECK(e.quantile(0.0) == 1.0);
    CHECK(e.quantile(1.0) == 5.0);
    CHECK_THROWS_AS(Ecdf({}), std::invalid_argument);

    auto table = e.table();
    REQUIRE(table.size() == 3);
    CHECK(table[1].first == 2.0);
    CHECK(table[1].second == doctest::Approx(0.75));
}

TEST_CASE("ecdf is monotone with range [0,1]") {
    auto rng = make_rng(5);
    std::vector<double> values;
    for (int i = 0; i < 500; ++i) values.push_back(static_cast<double>(draw_index(rng, 50)));
    Ecdf e(values);
    double prev = 0.0;
    for (double x = -1.0; x <= 51.0; x += 0.5) {
        double f = e(x);
        CHECK(f >= prev);
        CHECK(f >= 0.0);
        CHECK(f <= 1.0);
        prev = f;
    }
}

TEST_CASE("density_one_share counts exact ones") {
    std::vector<mine::CommitSizeRecord> records(10);
    for (std::size_t i = 0; i < records.size(); ++i) records[i].density = i < 3 ? 1.0 : 0.97;
    CHECK(density_one_share(records) == doctest::Approx(0.3));
    for (auto& r : records) r.density = 1.0;
    CHECK(density_one_share(records) == 1.0);
    for (auto& r : records) r.density = 0.5;
    CHECK(density_one_share(records) == 0.0);
}

TEST_CASE("conditional probabilities per size bucket") {
    std::vector<double> sizes = {0, 0, 1, 1, 1, 3, 3, 4, 9};
    std::vector<char> labels = {'c', 'p', 'a', 'c', 'c', 'c', 'p', 'a', 'a'};
    auto cells = conditional_probability_table(sizes, labels, default_size_predicates());
    REQUIRE(cells.size() == 9);

    auto find = [&](char label, const std::string& pred) {
        for (const auto& cell : cells)
            if (cell.label == label && cell.predicate == pred) return cell;
        FAIL("missing cell");
        return cells[0];
    };
    CHECK(find('a', "x<1").probability.value() == doctest::Approx(0.0));
    CHECK(find('c', "x<1").probability.value() == doctest::Approx(0.5));
    CHECK(find('a', "1<=x<2").probability.value() == doctest::Approx(1.0 / 3.0));
    CHECK(find('c', "2<=x<5").probability.value() == doctest::Approx(1.0 / 3.0));

    // probabilities across labels sum to 1 on every supported predicate
    for (const auto& pred : default_size_predicates()) {
        double sum = 0.0;
        for (char l : {'a', 'c', 'p'}) sum += find(l, pred.name).probability.value();
        CHECK(sum == doctest::Approx(1.0));
    }

    // a bucket with no support reports not-applicable
    std::vector<double> high = {10, 20};
    std::vector<char> hl = {'a', 'a'};
    auto empty_cells = conditional_probability_table(high, hl, default_size_predicates());
    for (const auto& cell : empty_cells) CHECK_FALSE(cell.probability.has_value());

    // single-label input: probability 1 wherever supported
    std::vector<double> ones = {1, 1, 3};
    std::vector<char> only_c = {'c', 'c', 'c'};
    for (const auto& cell : conditional_probability_table(ones, only_c, default_size_predicates()))
        if (cell.probability.has_value() && cell.label == 'c') CHECK(*cell.probability == 1.0);
}

TEST_CASE("effort metrics follow the size-per-time definitions") {
    auto m = effort_metrics({0.75, 400.0, 2.0});
    CHECK(m.effort_gross == doctest::Approx(200.0));
    CHECK(m.effort_net == doctest::Approx(150.0));
    CHECK(m.productivity_net == doctest::Approx(0.375));
    CHECK(m.productivity_net == doctest::Approx(m.effort_net / 400.0));  // Eq.-consistency

    auto full = effort_metrics({1.0, 120.0, 3.0});
    CHECK(full.effort_net == doctest::Approx(full.effort_gross));

    CHECK_THROWS_AS(effort_metrics({0.5, 10.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(effort_metrics({1.5, 10.0, 1.0}), std::invalid_argument);

    // net effort never exceeds gross effort
    auto rng = make_rng(8);
    for (int i = 0; i < 200; ++i) {
        double density = static_cast<double>(draw_index(rng, 1001)) / 1000.0;
        double size = static_cast<double>(draw_index(rng, 10000));
        double time = 0.5 + static_cast<double>(draw_index(rng, 100));
        auto em = effort_metrics({density, size, time});
        CHECK(em.effort_net <= em.effort_gross + 1e-12);
    }
}

TEST_CASE("summary_stats aggregates per label and pooled") {
    std::vector<mine::CommitSizeRecord> records(3);
    records[0].lines_added_by_added_gross = 10;
    records[0].lines_added_by_added_net = 8;
    records[0].files_added_gross = 1;
    records[0].files_added_net = 1;
    records[1].lines_added_by_modified_gross = 30;
    records[1].lines_added_by_modified_net = 15;
    records[1].files_modified_gross = 2;
    records[1].files_modified_net = 1;
    records[2].lines_deleted_by_deleted_gross = 50;
    records[2].lines_deleted_by_deleted_net = 40;
    records[2].files_deleted_gross = 3;
    records[2].files_deleted_net = 2;
    std::vector<char> labels = {'a', 'c', 'c'};

    auto rows = summary_stats(records, labels);
    auto find = [&](const std::string& group, const std::string& measure, const std::string& variant,
                    const std::string& statistic) {
        for (const auto& r : rows)
            if (r.group == group && r.measure == measure && r.variant == variant &&
                r.statistic == statistic)
                return r.value;
        FAIL("missing summary row");
        return 0.0;
    };
    CHECK(find("pooled", "loc", "gross", "median") == 30.0);
    CHECK(find("pooled", "loc", "net", "min") == 8.0);
    CHECK(find("pooled", "loc", "gross", "max") == 50.0);
    CHECK(find("c", "loc", "gross", "mean") == doctest::Approx(40.0));
    CHECK(find("a", "files", "net", "max") == 1.0);

    // single-record input: every statistic equals that record
    auto single = summary_stats({records[0]}, {});
    for (const auto& r : single)
        if (r.measure == "loc" && r.variant == "gross") CHECK(r.value == 10.0);
}

TEST_CASE("pearson is symmetric and bounded") {
    auto rng = make_rng(12);
    std::vector<double> x, y;
    for (int i = 0; i < 300; ++i) {
        x.push_back(static_cast<double>(draw_index(rng, 1000)));
        y.push_back(0.25 * x.back() + static_cast<double>(draw_index(rng, 500)));
    }
    double rxy = pearson(x, y);
    double ryx = pearson(y, x);
    CHECK(std::abs(rxy - ryx) <= 1e-12);
    CHECK(rxy > 0.0);
    CHECK(std::abs(rxy) <= 1.0);
    CHECK(pearson(x, x) == doctest::Approx(1.0));
}
