#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "cdens/dataset.hpp"
#include "cdens/rng.hpp"

namespace testutil {

inline std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') out += "'\\''";
        else out.push_back(c);
    }
    out.push_back('\'');
    return out;
}

struct TempDir {
    std::string path;

    TempDir() {
        char tmpl[] = "/tmp/cdens_test_XXXXXX";
        path = mkdtemp(tmpl);
    }
    ~TempDir() {
        if (!path.empty()) std::system(("rm -rf " + shell_quote(path)).c_str());
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
};

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    os << content;
}

inline std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
}

// Git repository fixture with pinned author/committer identity and dates, so
// commit hashes are reproducible across runs.
struct FixtureRepo {
    TempDir dir;
    int tick = 0;

    FixtureRepo() {
        run("git init -q -b main .");
        run("git config user.name tester");
        run("git config user.email tester@example.com");
        run("git config commit.gpgsign false");
    }

    void run(const std::string& cmd) {
        std::string full = "cd " + shell_quote(dir.path) + " && " + cmd + " >/dev/null 2>&1";
        if (std::system(full.c_str()) != 0) throw std::runtime_error("fixture command failed: " + cmd);
    }

    std::string output(const std::string& cmd) {
        std::string full = "cd " + shell_quote(dir.path) + " && " + cmd;
        FILE* p = popen(full.c_str(), "r");
        std::string out;
        char buf[256];
        while (fgets(buf, sizeof(buf), p)) out += buf;
        pclose(p);
        while (!out.empty() && (out.back() == '\n' || out.back() == '\r')) out.pop_back();
        return out;
    }

    void write(const std::string& rel, const std::string& content) {
        write_file(dir.path + "/" + rel, content);
    }

    void remove(const std::string& rel) { run("git rm -q " + shell_quote(rel)); }

    std::string commit(const std::string& message) {
        ++tick;
        char date[64];
        std::snprintf(date, sizeof(date), "2020-01-01T00:%02d:%02d+00:00", tick / 60, tick % 60);
        run("git add -A && GIT_AUTHOR_DATE=" + std::string(date) + " GIT_COMMITTER_DATE=" + date +
            " git commit -q --allow-empty -m " + shell_quote(message));
        return output("git rev-parse HEAD");
    }
};

// Three Gaussian blobs far apart: any sensible classifier separates them.
inline cdens::data::Dataset separable_dataset(std::size_t n_rows, std::uint64_t seed,
                                              std::size_t n_noise_features = 0) {
    using namespace cdens;
    data::Dataset d;
    d.columns.push_back({"f0", data::ColumnRole::ChangeFeature});
    d.columns.push_back({"f1", data::ColumnRole::ChangeFeature});
    for (std::size_t i = 0; i < n_noise_features; ++i)
        d.columns.push_back({"noise" + std::to_string(i), data::ColumnRole::ChangeFeature});

    auto rng = make_rng(seed);
    auto gauss = [&rng](double mu, double sigma) {
        // Box-Muller from two pinned uniform draws
        double u1 = (static_cast<double>(rng() >> 11) + 0.5) / 9007199254740992.0;
        double u2 = (static_cast<double>(rng() >> 11) + 0.5) / 9007199254740992.0;
        return mu + sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    };
    const double centers[3][2] = {{0.0, 0.0}, {10.0, 0.0}, {0.0, 10.0}};
    const char labels[3] = {'a', 'c', 'p'};
    for (std::size_t i = 0; i < n_rows; ++i) {
        std::size_t cls = i % 3;
        data::Row row;
        row.label = labels[cls];
        row.sha1 = "sha" + std::to_string(i);
        row.values.push_back(gauss(centers[cls][0], 1.0));
        row.values.push_back(gauss(centers[cls][1], 1.0));
        for (std::size_t f = 0; f < n_noise_features; ++f) row.values.push_back(gauss(0.0, 1.0));
        d.rows.push_back(std::move(row));
    }
    return d;
}

// Nearest-centroid oracle for the separable fixture.
inline double nearest_centroid_accuracy(const cdens::data::Dataset& d) {
    double centers[3][2] = {};
    std::int64_t counts[3] = {};
    auto cls_of = [](char l) { return l == 'a' ? 0 : l == 'c' ? 1 : 2; };
    for (const auto& r : d.rows) {
        int c = cls_of(r.label);
        centers[c][0] += r.values[0];
        centers[c][1] += r.values[1];
        ++counts[c];
    }
    for (int c = 0; c < 3; ++c) {
        centers[c][0] /= static_cast<double>(counts[c]);
        centers[c][1] /= static_cast<double>(counts[c]);
    }
    std::int64_t hits = 0;
    for (const auto& r : d.rows) {
        int best = 0;
        double best_d = 1e300;
        for (int c = 0; c < 3; ++c) {
            double dx = r.values[0] - centers[c][0];
            double dy = r.values[1] - centers[c][1];
            double dist = dx * dx + dy * dy;
            if (dist < best_d) {
                best_d = dist;
                best = c;
            }
        }
        if (best == cls_of(r.label)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(d.rows.size());
}

}  // namespace testutil
