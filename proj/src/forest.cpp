#include <algorithm>
#include <cmath>
#include <numeric>

#include "cdens/learn.hpp"
#include "cdens/parallel.hpp"
#include "cdens/rng.hpp"

namespace cdens::learn {

namespace {

struct SplitChoice {
    bool found = false;
    int feature = -1;
    double threshold = 0.0;
    double child_impurity = 0.0;  // n_l*gini_l + n_r*gini_r
};

double impurity_sum(const std::array<std::int64_t, kNumClasses>& counts, std::int64_t n) {
    if (n == 0) return 0.0;
    double ss = 0.0;
    for (std::int64_t c : counts) ss += static_cast<double>(c) * static_cast<double>(c);
    return static_cast<double>(n) - ss / static_cast<double>(n);
}

class TreeGrower {
public:
    TreeGrower(const FeatureMatrix& m, const ForestConfig& cfg, std::uint64_t seed,
               std::vector<double>& importance)
        : m_(m), cfg_(cfg), rng_(make_rng(seed)), importance_(importance) {
        p_ = m.feature_names.size();
        feature_pool_.resize(p_);
        std::iota(feature_pool_.begin(), feature_pool_.end(), 0);
    }

    Tree grow() {
        std::size_t n = m_.n_rows;
        std::vector<std::uint32_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<std::uint32_t>(draw_index(rng_, n));
        n_boot_ = static_cast<double>(n);
        Tree t;
        build(t, idx);
        return t;
    }

private:
    const FeatureMatrix& m_;
    const ForestConfig& cfg_;
    std::mt19937_64 rng_;
    std::vector<double>& importance_;
    std::size_t p_ = 0;
    double n_boot_ = 1.0;
    std::vector<std::size_t> feature_pool_;

    int build(Tree& t, std::vector<std::uint32_t>& idx) {
        std::array<std::int64_t, kNumClasses> counts{};
        for (auto i : idx) ++counts[static_cast<std::size_t>(m_.y[i])];
        std::int64_t n = static_cast<std::int64_t>(idx.size());
        double parent_imp = impurity_sum(counts, n);

        int node_id = static_cast<int>(t.nodes.size());
        t.nodes.emplace_back();
        t.nodes[node_id].counts = counts;

        bool pure = std::count_if(counts.begin(), counts.end(),
                                  [](std::int64_t c) { return c > 0; }) <= 1;
        if (pure || n < 2 * cfg_.min_leaf) return node_id;

        SplitChoice best = pick_split(idx, parent_imp);
        if (!best.found) return node_id;

        importance_[static_cast<std::size_t>(best.feature)] +=
            (parent_imp - best.child_impurity) / n_boot_;

        std::vector<std::uint32_t> left_idx, right_idx;
        left_idx.reserve(idx.size());
        right_idx.reserve(idx.size());
        for (auto i : idx) {
            if (m_.at(i, static_cast<std::size_t>(best.feature)) <= best.threshold)
                left_idx.push_back(i);
            else
                right_idx.push_back(i);
        }
        idx.clear();
        idx.shrink_to_fit();

        int left_id = build(t, left_idx);
        int right_id = build(t, right_idx);
        t.nodes[node_id].feature = best.feature;
        t.nodes[node_id].threshold = best.threshold;
        t.nodes[node_id].left = left_id;
        t.nodes[node_id].right = right_id;
        return node_id;
    }

    SplitChoice pick_split(const std::vector<std::uint32_t>& idx, double parent_imp) {
        int m_try = cfg_.m_try > 0 ? cfg_.m_try
                                   : std::max(1, static_cast<int>(std::sqrt(static_cast<double>(p_))));
        m_try = std::min<int>(m_try, static_cast<int>(p_));

        // partial Fisher-Yates over the shared feature pool
        for (int k = 0; k < m_try; ++k) {
            std::size_t j = k + draw_index(rng_, p_ - static_cast<std::size_t>(k));
            std::swap(feature_pool_[static_cast<std::size_t>(k)], feature_pool_[j]);
        }

        SplitChoice best;
        best.child_impurity = parent_imp - 1e-12;  // a split must strictly improve
        std::vector<std::uint32_t> order;
        for (int k = 0; k < m_try; ++k) {
            std::size_t f = feature_pool_[static_cast<std::size_t>(k)];
            order.assign(idx.begin(), idx.end());
            std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
                double va = m_.at(a, f), vb = m_.at(b, f);
                if (va != vb) return va < vb;
                return a < b;
            });
            sweep_feature(order, f, best);
        }
        return best;
    }

    void sweep_feature(const std::vector<std::uint32_t>& order, std::size_t f, SplitChoice& best) {
        std::array<std::int64_t, kNumClasses> left{}, right{};
        std::int64_t n = static_cast<std::int64_t>(order.size());
        for (auto i : order) ++right[static_cast<std::size_t>(m_.y[i])];

        std::int64_t n_left = 0;
        for (std::int64_t pos = 0; pos + 1 < n; ++pos) {
            std::size_t cls = static_cast<std::size_t>(m_.y[order[static_cast<std::size_t>(pos)]]);
            ++left[cls];
            --right[cls];
            ++n_left;
            double a = m_.at(order[static_cast<std::size_t>(pos)], f);
            double b = m_.at(order[static_cast<std::size_t>(pos + 1)], f);
            if (a == b) continue;  // not a boundary
            if (n_left < cfg_.min_leaf || n - n_left < cfg_.min_leaf) continue;
            double imp = impurity_sum(left, n_left) + impurity_sum(right, n - n_left);
            if (imp < best.child_impurity) {
                double thr = a + (b - a) / 2.0;
                if (thr >= b) thr = a;  // guard against rounding up to b
                best.found = true;
                best.feature = static_cast<int>(f);
                best.threshold = thr;
                best.child_impurity = imp;
            }
        }
    }
};

}  // namespace

int Tree::predict(std::span<const double> row) const {
    int cur = 0;
    while (nodes[static_cast<std::size_t>(cur)].feature >= 0) {
        const TreeNode& nd = nodes[static_cast<std::size_t>(cur)];
        cur = row[static_cast<std::size_t>(nd.feature)] <= nd.threshold ? nd.left : nd.right;
    }
    const auto& counts = nodes[static_cast<std::size_t>(cur)].counts;
    int best = 0;
    for (int c = 1; c < kNumClasses; ++c)
        if (counts[static_cast<std::size_t>(c)] > counts[static_cast<std::size_t>(best)]) best = c;
    return best;
}

TrainedModel train_forest(const data::Dataset& train, const ForestConfig& config) {
    FeatureMatrix m = make_matrix(train);
    if (m.n_rows == 0) throw std::invalid_argument("train_forest: empty dataset");
    if (m.feature_names.empty()) throw std::invalid_argument("train_forest: no feature columns");
    std::array<std::int64_t, kNumClasses> counts{};
    for (int yi : m.y) {
        if (yi < 0) throw std::invalid_argument("train_forest: unlabeled row");
        ++counts[static_cast<std::size_t>(yi)];
    }
    int present = static_cast<int>(std::count_if(counts.begin(), counts.end(),
                                                 [](std::int64_t c) { return c > 0; }));
    if (present < 2) throw std::invalid_argument("train_forest: single-class training set");

    std::size_t n_trees = static_cast<std::size_t>(std::max(1, config.n_trees));
    std::vector<Tree> trees(n_trees);
    std::vector<std::vector<double>> per_tree_importance(n_trees);

    parallel_for(n_trees, config.jobs, [&](std::size_t t) {
        per_tree_importance[t].assign(m.feature_names.size(), 0.0);
        TreeGrower grower(m, config, derive_seed(config.seed, seed_tag::kForestTree, t),
                          per_tree_importance[t]);
        trees[t] = grower.grow();
    });

    TrainedModel model;
    model.kind = ModelKind::Forest;
    model.features = m.feature_names;
    model.forest.config = config;
    model.forest.trees = std::move(trees);
    model.forest.importance_raw.assign(m.feature_names.size(), 0.0);
    for (const auto& imp : per_tree_importance)
        for (std::size_t f = 0; f < imp.size(); ++f) model.forest.importance_raw[f] += imp[f];
    for (auto& v : model.forest.importance_raw) v /= static_cast<double>(n_trees);
    return model;
}

}  // namespace cdens::learn
