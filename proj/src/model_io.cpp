#include "cdens/model_io.hpp"

#include <fstream>

#include "cdens/errors.hpp"

namespace cdens::learn {

using nlohmann::json;

namespace {

json tree_to_json(const Tree& t) {
    json nodes = json::array();
    for (const auto& n : t.nodes) {
        if (n.feature < 0)
            nodes.push_back({{"counts", n.counts}});
        else
            nodes.push_back(
                {{"f", n.feature}, {"t", n.threshold}, {"l", n.left}, {"r", n.right}, {"counts", n.counts}});
    }
    return nodes;
}

Tree tree_from_json(const json& doc) {
    Tree t;
    for (const auto& jn : doc) {
        TreeNode n;
        if (jn.contains("f")) {
            n.feature = jn.at("f").get<int>();
            n.threshold = jn.at("t").get<double>();
            n.left = jn.at("l").get<int>();
            n.right = jn.at("r").get<int>();
        }
        auto counts = jn.at("counts").get<std::vector<std::int64_t>>();
        for (std::size_t c = 0; c < counts.size() && c < kNumClasses; ++c) n.counts[c] = counts[c];
        t.nodes.push_back(n);
    }
    return t;
}

json params_json(const TrainedModel& m) {
    switch (m.kind) {
        case ModelKind::ZeroR:
            return {{"priors", m.zeror.priors}, {"modal", m.zeror.modal}};
        case ModelKind::Forest: {
            json trees = json::array();
            for (const auto& t : m.forest.trees) trees.push_back(tree_to_json(t));
            return {{"n_trees", m.forest.config.n_trees},
                    {"m_try", m.forest.config.m_try},
                    {"min_leaf", m.forest.config.min_leaf},
                    {"seed", m.forest.config.seed},
                    {"importance_raw", m.forest.importance_raw},
                    {"trees", std::move(trees)}};
        }
        case ModelKind::LogitBoost: {
            json rounds = json::array();
            for (const auto& stumps : m.boost.rounds) {
                json jr = json::array();
                for (const auto& s : stumps)
                    jr.push_back({{"f", s.feature},
                                  {"t", s.threshold},
                                  {"lv", s.left_value},
                                  {"rv", s.right_value}});
                rounds.push_back(std::move(jr));
            }
            return {{"n_iterations", m.boost.config.n_iterations},
                    {"seed", m.boost.config.seed},
                    {"rounds", std::move(rounds)}};
        }
    }
    return {};
}

void params_from_json(const json& params, TrainedModel& m) {
    switch (m.kind) {
        case ModelKind::ZeroR: {
            auto priors = params.at("priors").get<std::vector<double>>();
            for (std::size_t c = 0; c < priors.size() && c < kNumClasses; ++c)
                m.zeror.priors[c] = priors[c];
            m.zeror.modal = params.at("modal").get<int>();
            break;
        }
        case ModelKind::Forest: {
            m.forest.config.n_trees = params.at("n_trees").get<int>();
            m.forest.config.m_try = params.at("m_try").get<int>();
            m.forest.config.min_leaf = params.at("min_leaf").get<int>();
            m.forest.config.seed = params.at("seed").get<std::uint64_t>();
            m.forest.importance_raw = params.at("importance_raw").get<std::vector<double>>();
            for (const auto& jt : params.at("trees")) m.forest.trees.push_back(tree_from_json(jt));
            break;
        }
        case ModelKind::LogitBoost: {
            m.boost.config.n_iterations = params.at("n_iterations").get<int>();
            m.boost.config.seed = params.at("seed").get<std::uint64_t>();
            for (const auto& jr : params.at("rounds")) {
                std::array<Stump, kNumClasses> stumps;
                std::size_t c = 0;
                for (const auto& js : jr) {
                    if (c >= kNumClasses) break;
                    stumps[c].feature = js.at("f").get<int>();
                    stumps[c].threshold = js.at("t").get<double>();
                    stumps[c].left_value = js.at("lv").get<double>();
                    stumps[c].right_value = js.at("rv").get<double>();
                    ++c;
                }
                m.boost.rounds.push_back(stumps);
            }
            break;
        }
    }
}

}  // namespace

json model_to_json(const TrainedModel& model) {
    json doc;
    doc["schema_version"] = kModelSchemaVersion;
    doc["kind"] = to_string(model.kind);
    doc["classes"] = {"a", "c", "p"};
    doc["features"] = model.features;
    doc["params"] = params_json(model);
    return doc;
}

TrainedModel model_from_json(const json& doc) {
    int version = doc.at("schema_version").get<int>();
    if (version != kModelSchemaVersion)
        throw schema_error("model schema version " + std::to_string(version) + " not supported");
    TrainedModel m;
    m.kind = model_kind_from_string(doc.at("kind").get<std::string>());
    m.features = doc.at("features").get<std::vector<std::string>>();
    params_from_json(doc.at("params"), m);
    return m;
}

json compound_to_json(const CompoundModel& model) {
    json doc;
    doc["schema_version"] = kModelSchemaVersion;
    doc["kind"] = "compound";
    doc["vocabulary"] = model.vocabulary;
    doc["left"] = model_to_json(model.left);
    doc["right"] = model_to_json(model.right);
    return doc;
}

CompoundModel compound_from_json(const json& doc) {
    int version = doc.at("schema_version").get<int>();
    if (version != kModelSchemaVersion)
        throw schema_error("model schema version " + std::to_string(version) + " not supported");
    CompoundModel m;
    m.vocabulary = doc.at("vocabulary").get<std::vector<std::string>>();
    m.left = model_from_json(doc.at("left"));
    m.right = model_from_json(doc.at("right"));
    return m;
}

namespace {

void write_json_file(const std::string& path, const json& doc) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw config_error("cannot write model file: " + path);
    os << doc.dump(2) << '\n';
}

}  // namespace

void save_model_file(const std::string& path, const TrainedModel& model) {
    write_json_file(path, model_to_json(model));
}

void save_model_file(const std::string& path, const CompoundModel& model) {
    write_json_file(path, compound_to_json(model));
}

PersistedModel load_model_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw config_error("cannot open model file: " + path);
    json doc;
    try {
        is >> doc;
    } catch (const json::exception& e) {
        throw config_error("invalid model JSON in " + path + ": " + e.what());
    }
    PersistedModel out;
    if (doc.at("kind").get<std::string>() == "compound")
        out.compound = compound_from_json(doc);
    else
        out.single = model_from_json(doc);
    return out;
}

json report_to_json(const EvalReport& report) {
    json doc;
    json confusion = json::array();
    for (const auto& row : report.confusion) confusion.push_back(row);
    doc["confusion"] = std::move(confusion);
    doc["classes"] = {"a", "c", "p"};
    doc["accuracy_total"] = report.accuracy_total;
    doc["accuracy_random"] = report.accuracy_random;
    if (report.kappa) doc["kappa"] = *report.kappa;
    else doc["kappa"] = nullptr;
    if (!report.folds.empty()) {
        json folds = json::array();
        for (const auto& f : report.folds) {
            json jf = {{"repeat", f.repeat}, {"fold", f.fold}, {"accuracy", f.accuracy}};
            if (f.kappa) jf["kappa"] = *f.kappa;
            else jf["kappa"] = nullptr;
            folds.push_back(std::move(jf));
        }
        doc["folds"] = std::move(folds);
    }
    if (!report.notes.empty()) doc["notes"] = report.notes;
    return doc;
}

}  // namespace cdens::learn
