#include "cdens/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cdens/csv.hpp"
#include "cdens/errors.hpp"
#include "cdens/rng.hpp"
#include "cdens/stats.hpp"
#include "json.hpp"

namespace cdens::data {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

char parse_label(const std::string& raw) {
    std::string v = lower(raw);
    if (v == "a" || v == "adaptive") return 'a';
    if (v == "c" || v == "corrective") return 'c';
    if (v == "p" || v == "perfective") return 'p';
    return 0;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    try {
        std::size_t used = 0;
        out = std::stod(s, &used);
        while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
        return used == s.size();
    } catch (...) {
        return false;
    }
}

ColumnRole role_from_string(const std::string& s) {
    std::string v = lower(s);
    if (v == "keyword" || v == "keyword-feature") return ColumnRole::KeywordFeature;
    if (v == "change" || v == "change-feature") return ColumnRole::ChangeFeature;
    if (v == "size" || v == "size-feature" || v == "density") return ColumnRole::SizeFeature;
    throw config_error("unknown column role: " + s);
}

bool name_in(const std::vector<std::string>& names, const std::string& n) {
    return std::find(names.begin(), names.end(), n) != names.end();
}

std::string format_value(double v) {
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15)
        return csv::format_int(static_cast<std::int64_t>(v));
    return csv::format_ratio(v);
}

}  // namespace

int Dataset::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i].name == name) return static_cast<int>(i);
    return -1;
}

std::vector<std::size_t> Dataset::role_columns(ColumnRole role) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i].role == role) out.push_back(i);
    return out;
}

std::vector<double> Dataset::column_values(std::size_t col) const {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.values[col]);
    return out;
}

bool Dataset::fully_labeled() const {
    return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.label != 0; });
}

ColumnMapping mapping_from_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw config_error("cannot open column mapping: " + path);
    nlohmann::json doc;
    try {
        is >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw config_error("invalid mapping JSON in " + path + ": " + e.what());
    }
    ColumnMapping m;
    m.sha1_column = doc.value("sha1", m.sha1_column);
    m.label_column = doc.value("label", m.label_column);
    m.project_column = doc.value("project", "");
    m.message_column = doc.value("message", "");
    for (const auto& c : doc.value("keyword_columns", nlohmann::json::array()))
        m.keyword_columns.push_back(c.get<std::string>());
    for (const auto& c : doc.value("change_columns", nlohmann::json::array()))
        m.change_columns.push_back(c.get<std::string>());
    for (const auto& c : doc.value("size_columns", nlohmann::json::array()))
        m.size_columns.push_back(c.get<std::string>());
    for (const auto& c : doc.value("ignore_columns", nlohmann::json::array()))
        m.ignore_columns.push_back(c.get<std::string>());
    if (doc.contains("default_role")) m.default_role = role_from_string(doc["default_role"]);
    return m;
}

namespace {

// Shared CSV-to-Dataset loader; `require_label` rejects unlabeled rows.
Dataset load_csv_with_mapping(const std::string& path, const ColumnMapping& mapping,
                              bool require_label, LoadReport* report) {
    csv::Table t = csv::read_file(path);
    int c_sha = t.column(mapping.sha1_column);
    int c_label = t.column(mapping.label_column);
    int c_project = mapping.project_column.empty() ? -1 : t.column(mapping.project_column);
    int c_message = mapping.message_column.empty() ? -1 : t.column(mapping.message_column);
    if (require_label && c_sha < 0)
        throw schema_error("mapped sha1 column '" + mapping.sha1_column + "' not in " + path);
    if (require_label && c_label < 0)
        throw schema_error("mapped label column '" + mapping.label_column + "' not in " + path);

    Dataset d;
    d.provenance = "csv:" + path;
    std::vector<int> feature_cols;
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        const std::string& name = t.header[i];
        int idx = static_cast<int>(i);
        if (idx == c_sha || idx == c_label || idx == c_project || idx == c_message) continue;
        if (name_in(mapping.ignore_columns, name)) continue;
        ColumnRole role = mapping.default_role;
        if (name_in(mapping.keyword_columns, name)) role = ColumnRole::KeywordFeature;
        else if (name_in(mapping.change_columns, name)) role = ColumnRole::ChangeFeature;
        else if (name_in(mapping.size_columns, name)) role = ColumnRole::SizeFeature;
        else {
            // canonical-name inference
            const auto& canon = mine::record_feature_names();
            if (std::find(canon.begin(), canon.end(), name) != canon.end())
                role = ColumnRole::SizeFeature;
            else if (name.rfind("kw_", 0) == 0)
                role = ColumnRole::KeywordFeature;
            else if (name == "parent_sha1" || name == "timestamp" || name == "is_merge")
                continue;  // record metadata, not features
        }
        d.columns.push_back({name, role});
        feature_cols.push_back(idx);
    }

    LoadReport local;
    LoadReport& rep = report ? *report : local;
    std::unordered_set<std::string> seen_sha;
    for (std::size_t ri = 0; ri < t.rows.size(); ++ri) {
        const auto& raw = t.rows[ri];
        Row row;
        if (c_sha >= 0) row.sha1 = raw[c_sha];
        if (c_project >= 0) row.project = raw[c_project];
        if (c_message >= 0) row.message = raw[c_message];
        if (c_label >= 0 && !raw[c_label].empty()) {
            row.label = parse_label(raw[c_label]);
            if (row.label == 0) {
                ++rep.rows_rejected;
                rep.errors.push_back("row " + std::to_string(ri + 2) + ": label '" + raw[c_label] +
                                     "' not in {a,c,p}");
                continue;
            }
        } else if (require_label) {
            ++rep.rows_rejected;
            rep.errors.push_back("row " + std::to_string(ri + 2) + ": missing label");
            continue;
        }
        if (!row.sha1.empty()) {
            if (seen_sha.count(row.sha1)) {
                ++rep.duplicates_dropped;
                continue;  // keep the first occurrence
            }
            seen_sha.insert(row.sha1);
        }
        row.values.reserve(feature_cols.size());
        bool bad = false;
        for (int fc : feature_cols) {
            double v = 0.0;
            if (!parse_double(raw[fc], v)) {
                ++rep.rows_rejected;
                rep.errors.push_back("row " + std::to_string(ri + 2) + ": unparseable value '" +
                                     raw[fc] + "' in column " + t.header[fc]);
                bad = true;
                break;
            }
            row.values.push_back(v);
        }
        if (bad) continue;
        d.rows.push_back(std::move(row));
        ++rep.rows_loaded;
    }
    return d;
}

}  // namespace

Dataset load_labeled_csv(const std::string& path, const ColumnMapping& mapping, LoadReport* report) {
    return load_csv_with_mapping(path, mapping, /*require_label=*/true, report);
}

Dataset read_dataset_csv(const std::string& path, const ColumnMapping* mapping, LoadReport* report) {
    ColumnMapping def;
    def.project_column = "project";
    def.message_column = "message";
    return load_csv_with_mapping(path, mapping ? *mapping : def, /*require_label=*/false, report);
}

Dataset dataset_from_records(const std::vector<mine::CommitSizeRecord>& records, bool include_merges) {
    Dataset d;
    d.provenance = "mined-records";
    for (const auto& n : mine::record_feature_names())
        d.columns.push_back({n, ColumnRole::SizeFeature});
    for (const auto& r : records) {
        if (r.is_merge && !include_merges) continue;
        Row row;
        row.sha1 = r.sha1;
        row.project = r.project;
        row.values.reserve(24);
        for (const auto& n : mine::record_feature_names()) row.values.push_back(mine::record_feature(r, n));
        d.rows.push_back(std::move(row));
    }
    return d;
}

std::pair<std::vector<mine::CommitSizeRecord>, std::vector<char>> records_from_dataset(const Dataset& d) {
    const auto& names = mine::size_feature_names();
    std::vector<int> idx;
    for (const auto& n : names) {
        int c = d.column_index(n);
        if (c < 0) throw schema_error("dataset lacks canonical size column: " + n);
        idx.push_back(c);
    }
    std::vector<mine::CommitSizeRecord> records;
    std::vector<char> labels;
    records.reserve(d.rows.size());
    for (const auto& row : d.rows) {
        mine::CommitSizeRecord r;
        r.sha1 = row.sha1;
        r.project = row.project;
        // assign by canonical order
        std::int64_t* fields[22] = {
            &r.files_added_gross, &r.files_added_net, &r.files_deleted_gross, &r.files_deleted_net,
            &r.files_renamed_gross, &r.files_renamed_net, &r.files_modified_gross, &r.files_modified_net,
            &r.lines_added_by_added_gross, &r.lines_added_by_added_net,
            &r.lines_deleted_by_deleted_gross, &r.lines_deleted_by_deleted_net,
            &r.lines_added_by_modified_gross, &r.lines_added_by_modified_net,
            &r.lines_deleted_by_modified_gross, &r.lines_deleted_by_modified_net,
            &r.lines_added_by_renamed_gross, &r.lines_added_by_renamed_net,
            &r.lines_deleted_by_renamed_gross, &r.lines_deleted_by_renamed_net};
        for (std::size_t i = 0; i < 22; ++i)
            *fields[i] = static_cast<std::int64_t>(std::llround(row.values[idx[i]]));
        int c_ratio = d.column_index("affected_files_ratio_net");
        int c_density = d.column_index("density");
        r.affected_files_ratio_net = c_ratio >= 0 ? row.values[c_ratio] : mine::affected_files_ratio_net(r);
        r.density = c_density >= 0 ? row.values[c_density] : mine::commit_density(r);
        records.push_back(std::move(r));
        labels.push_back(row.label);
    }
    return {std::move(records), std::move(labels)};
}

Dataset merge_on_sha(const Dataset& labeled, const Dataset& mined) {
    for (const auto& c : mined.columns)
        if (labeled.column_index(c.name) >= 0)
            throw schema_error("duplicate column in merge: " + c.name);

    std::unordered_map<std::string, std::size_t> mined_by_sha;
    for (std::size_t i = 0; i < mined.rows.size(); ++i) {
        if (mined.rows[i].sha1.empty()) continue;
        mined_by_sha.emplace(mined.rows[i].sha1, i);
    }

    Dataset out;
    out.columns = labeled.columns;
    out.columns.insert(out.columns.end(), mined.columns.begin(), mined.columns.end());
    out.provenance = "merge(" + labeled.provenance + ", " + mined.provenance + ")";
    for (const auto& lrow : labeled.rows) {
        if (lrow.sha1.empty()) continue;
        auto it = mined_by_sha.find(lrow.sha1);
        if (it == mined_by_sha.end()) continue;  // inner join
        Row row = lrow;
        const Row& mrow = mined.rows[it->second];
        if (row.project.empty()) row.project = mrow.project;
        if (row.message.empty()) row.message = mrow.message;
        row.values.insert(row.values.end(), mrow.values.begin(), mrow.values.end());
        out.rows.push_back(std::move(row));
    }
    return out;
}

FeatureGroup feature_group_from_string(const std::string& s) {
    std::string v = lower(s);
    if (v == "keywords") return FeatureGroup::Keywords;
    if (v == "changes") return FeatureGroup::Changes;
    if (v == "density" || v == "size") return FeatureGroup::Density;
    if (v == "combined") return FeatureGroup::Combined;
    throw config_error("unknown feature group: " + s);
}

std::string to_string(FeatureGroup g) {
    switch (g) {
        case FeatureGroup::Keywords: return "keywords";
        case FeatureGroup::Changes: return "changes";
        case FeatureGroup::Density: return "density";
        case FeatureGroup::Combined: return "combined";
    }
    return "?";
}

namespace {

Dataset select_columns(const Dataset& d, const std::vector<std::size_t>& keep) {
    Dataset out;
    out.provenance = d.provenance;
    for (std::size_t c : keep) out.columns.push_back(d.columns[c]);
    out.rows.reserve(d.rows.size());
    for (const auto& row : d.rows) {
        Row r;
        r.sha1 = row.sha1;
        r.project = row.project;
        r.message = row.message;
        r.label = row.label;
        r.values.reserve(keep.size());
        for (std::size_t c : keep) r.values.push_back(row.values[c]);
        out.rows.push_back(std::move(r));
    }
    return out;
}

}  // namespace

Dataset vertical_split(const Dataset& d, FeatureGroup group) {
    if (group == FeatureGroup::Combined) return d;
    ColumnRole want = group == FeatureGroup::Keywords  ? ColumnRole::KeywordFeature
                      : group == FeatureGroup::Changes ? ColumnRole::ChangeFeature
                                                       : ColumnRole::SizeFeature;
    auto keep = d.role_columns(want);
    if (keep.empty())
        throw schema_error("vertical split '" + to_string(group) + "' selects no columns");
    Dataset out = select_columns(d, keep);
    out.provenance = d.provenance + "|" + to_string(group);
    return out;
}

Dataset keep_feature_columns(const Dataset& d, const std::vector<std::string>& names) {
    std::vector<std::size_t> keep;
    for (const auto& n : names) {
        int c = d.column_index(n);
        if (c < 0) throw schema_error("column not in dataset: " + n);
        keep.push_back(static_cast<std::size_t>(c));
    }
    return select_columns(d, keep);
}

Dataset drop_feature_columns(const Dataset& d, const std::vector<std::string>& names) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < d.columns.size(); ++i)
        if (!name_in(names, d.columns[i].name)) keep.push_back(i);
    return select_columns(d, keep);
}

Variant variant_from_string(const std::string& s) {
    std::string v = lower(s);
    if (v == "a") return Variant::A;
    if (v == "b") return Variant::B;
    if (v == "c") return Variant::C;
    if (v == "d") return Variant::D;
    throw config_error("unknown variant: " + s);
}

Dataset build_generation_dataset(const VariantSpec& spec,
                                 const std::vector<mine::GenerationChain>& chains,
                                 const Dataset& merged, std::vector<std::string>* skipped) {
    // principal columns per variant
    std::vector<std::size_t> principal_cols;
    for (std::size_t i = 0; i < merged.columns.size(); ++i) {
        ColumnRole role = merged.columns[i].role;
        bool keep = false;
        switch (spec.variant) {
            case Variant::A:
                keep = role == ColumnRole::KeywordFeature || role == ColumnRole::ChangeFeature;
                break;
            case Variant::B: keep = role == ColumnRole::SizeFeature; break;
            case Variant::C: keep = role != ColumnRole::Identity && role != ColumnRole::Label; break;
            case Variant::D:
                keep = role == ColumnRole::ChangeFeature || role == ColumnRole::SizeFeature;
                break;
        }
        if (keep) principal_cols.push_back(i);
    }

    std::unordered_map<std::string, std::size_t> merged_by_sha;
    for (std::size_t i = 0; i < merged.rows.size(); ++i) merged_by_sha.emplace(merged.rows[i].sha1, i);

    Dataset out;
    out.provenance = merged.provenance + "|gen" + std::to_string(spec.generations);
    for (std::size_t c : principal_cols) out.columns.push_back(merged.columns[c]);
    for (int g = 1; g <= spec.generations; ++g)
        for (const auto& n : mine::record_feature_names())
            out.columns.push_back({n + "_gen" + std::to_string(g), ColumnRole::SizeFeature});

    for (const auto& chain : chains) {
        if (static_cast<int>(chain.parents.size()) != spec.generations) continue;
        auto it = merged_by_sha.find(chain.principal.sha1);
        if (it == merged_by_sha.end()) {
            if (skipped) skipped->push_back(chain.principal.sha1);
            continue;
        }
        const Row& src = merged.rows[it->second];
        Row row;
        row.sha1 = src.sha1;
        row.project = src.project;
        row.message = src.message;
        row.label = src.label;
        row.values.reserve(out.columns.size());
        for (std::size_t c : principal_cols) row.values.push_back(src.values[c]);
        for (const auto& parent : chain.parents)
            for (const auto& n : mine::record_feature_names())
                row.values.push_back(mine::record_feature(parent, n));
        out.rows.push_back(std::move(row));
    }
    return out;
}

namespace {

bool zero_variance(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] != v[0]) return false;
    return true;
}

}  // namespace

CorrelationFilterResult correlation_filter(const Dataset& d, double cutoff) {
    CorrelationFilterResult res;
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < d.columns.size(); ++i) {
        auto v = d.column_values(i);
        if (zero_variance(v)) res.removed.push_back(d.columns[i].name);
        else live.push_back(i);
    }
    if (live.size() < 2) {
        for (std::size_t c : live) res.kept.push_back(d.columns[c].name);
        return res;
    }

    std::vector<std::vector<double>> vals;
    vals.reserve(live.size());
    for (std::size_t c : live) vals.push_back(d.column_values(c));
    std::size_t m = live.size();
    std::vector<double> corr(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        corr[i * m + i] = 1.0;
        for (std::size_t j = i + 1; j < m; ++j) {
            double r = std::abs(stats::pearson(vals[i], vals[j]));
            corr[i * m + j] = r;
            corr[j * m + i] = r;
        }
    }

    std::vector<bool> alive(m, true);
    while (true) {
        // most correlated remaining pair; ties resolve to the earliest pair
        double best = cutoff;
        std::size_t bi = m, bj = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (!alive[i]) continue;
            for (std::size_t j = i + 1; j < m; ++j) {
                if (!alive[j]) continue;
                if (corr[i * m + j] > best) {
                    best = corr[i * m + j];
                    bi = i;
                    bj = j;
                }
            }
        }
        if (bi == m) break;
        auto mean_abs = [&](std::size_t i) {
            double s = 0;
            std::size_t cnt = 0;
            for (std::size_t j = 0; j < m; ++j) {
                if (!alive[j] || j == i) continue;
                s += corr[i * m + j];
                ++cnt;
            }
            return cnt ? s / static_cast<double>(cnt) : 0.0;
        };
        // drop the pair member with the larger mean absolute correlation;
        // on a tie keep the earlier schema column
        std::size_t drop = mean_abs(bi) > mean_abs(bj) ? bi : bj;
        alive[drop] = false;
        res.removed.push_back(d.columns[live[drop]].name);
    }
    for (std::size_t i = 0; i < m; ++i)
        if (alive[i]) res.kept.push_back(d.columns[live[i]].name);
    return res;
}

Dataset variance_filter(const Dataset& d, const NearZeroRule& rule) {
    std::vector<std::string> to_drop;
    for (std::size_t c = 0; c < d.columns.size(); ++c) {
        auto v = d.column_values(c);
        if (v.empty()) continue;
        std::map<double, std::int64_t> freq;
        for (double x : v) ++freq[x];
        if (freq.size() == 1) {
            to_drop.push_back(d.columns[c].name);
            continue;
        }
        std::vector<std::int64_t> counts;
        counts.reserve(freq.size());
        for (const auto& [val, n] : freq) counts.push_back(n);
        std::sort(counts.rbegin(), counts.rend());
        double ratio = static_cast<double>(counts[0]) / static_cast<double>(counts[1]);
        double distinct_frac = static_cast<double>(freq.size()) / static_cast<double>(v.size());
        if (ratio > rule.freq_ratio && distinct_frac < rule.distinct_fraction)
            to_drop.push_back(d.columns[c].name);
    }
    return drop_feature_columns(d, to_drop);
}

std::pair<Dataset, Dataset> split(const Dataset& d, const SplitPlan& plan) {
    if (plan.train_fraction <= 0.0 || plan.train_fraction >= 1.0)
        throw std::invalid_argument("train_fraction must be in (0,1)");
    if (d.rows.size() < 10) throw std::invalid_argument("split needs at least 10 rows");

    std::vector<std::vector<std::size_t>> strata;
    if (plan.stratified) {
        std::map<char, std::vector<std::size_t>> by_label;
        for (std::size_t i = 0; i < d.rows.size(); ++i) by_label[d.rows[i].label].push_back(i);
        for (auto& [label, idx] : by_label) {
            if (idx.size() < 2)
                throw std::invalid_argument("stratified split: label class with fewer than 2 rows");
            strata.push_back(std::move(idx));
        }
    } else {
        std::vector<std::size_t> all(d.rows.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        strata.push_back(std::move(all));
    }

    std::vector<bool> in_train(d.rows.size(), false);
    auto rng = make_rng(derive_seed(plan.seed, seed_tag::kSplit));
    for (auto& idx : strata) {
        deterministic_shuffle(idx, rng);
        std::size_t n_train = static_cast<std::size_t>(
            std::floor(plan.train_fraction * static_cast<double>(idx.size()) + 0.5));
        n_train = std::min(n_train, idx.size());
        for (std::size_t i = 0; i < n_train; ++i) in_train[idx[i]] = true;
    }

    Dataset train, valid;
    train.columns = valid.columns = d.columns;
    train.provenance = d.provenance + "|train";
    valid.provenance = d.provenance + "|validation";
    for (std::size_t i = 0; i < d.rows.size(); ++i)
        (in_train[i] ? train : valid).rows.push_back(d.rows[i]);
    return {std::move(train), std::move(valid)};
}

std::vector<std::string> load_vocabulary_json(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw config_error("cannot open vocabulary: " + path);
    nlohmann::json doc;
    try {
        is >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw config_error("invalid vocabulary JSON in " + path + ": " + e.what());
    }
    std::vector<std::string> vocab;
    const auto& arr = doc.is_array() ? doc : doc.at("keywords");
    for (const auto& w : arr) vocab.push_back(lower(w.get<std::string>()));
    if (vocab.empty()) throw config_error("vocabulary is empty: " + path);
    return vocab;
}

bool contains_word(const std::string& text, const std::string& word) {
    if (word.empty()) return false;
    std::string t = lower(text);
    std::string w = lower(word);
    auto is_word_char = [](unsigned char c) { return std::isalnum(c) || c == '_'; };
    std::size_t pos = 0;
    while ((pos = t.find(w, pos)) != std::string::npos) {
        bool left_ok = pos == 0 || !is_word_char(t[pos - 1]);
        std::size_t end = pos + w.size();
        bool right_ok = end >= t.size() || !is_word_char(t[end]);
        if (left_ok && right_ok) return true;
        ++pos;
    }
    return false;
}

bool message_has_any_keyword(const std::string& message, const std::vector<std::string>& vocab) {
    for (const auto& w : vocab)
        if (contains_word(message, w)) return true;
    return false;
}

Dataset with_keyword_features(const Dataset& d, const std::vector<std::string>& vocab) {
    Dataset out = d;
    for (const auto& w : vocab) {
        std::string name = "kw_" + lower(w);
        if (out.column_index(name) >= 0) continue;
        out.columns.push_back({name, ColumnRole::KeywordFeature});
        for (auto& row : out.rows)
            row.values.push_back(contains_word(row.message, w) ? 1.0 : 0.0);
    }
    return out;
}

void write_dataset_csv(std::ostream& os, const Dataset& d) {
    std::vector<std::string> row = {"sha1", "project", "message", "label"};
    for (const auto& c : d.columns) row.push_back(c.name);
    csv::write_row(os, row);
    for (const auto& r : d.rows) {
        row.clear();
        row.push_back(r.sha1);
        row.push_back(r.project);
        row.push_back(r.message);
        row.push_back(r.label ? std::string(1, r.label) : "");
        for (double v : r.values) row.push_back(format_value(v));
        csv::write_row(os, row);
    }
}

void write_dataset_csv_file(const std::string& path, const Dataset& d) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw config_error("cannot write: " + path);
    write_dataset_csv(os, d);
}

}  // namespace cdens::data
