#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "alphabwm/fpcs.hpp"

namespace fixtures {

using alphabwm::Fpcs;
using alphabwm::LinguisticTerm;

inline std::string data_path(const std::string& name) { return std::string(ALPHABWM_DATA_DIR) + "/" + name; }

inline nlohmann::json load_json(const std::string& name) {
    std::ifstream in(data_path(name));
    std::stringstream buf;
    buf << in.rdbuf();
    return nlohmann::json::parse(buf.str());
}

inline std::vector<LinguisticTerm> terms(const std::vector<int>& values) {
    std::vector<LinguisticTerm> out;
    for (int v : values) out.push_back(LinguisticTerm::from_value(v));
    return out;
}

inline std::vector<std::string> names(std::size_t n, const std::string& prefix = "c") {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
    return out;
}

inline Fpcs make(std::size_t best, std::size_t worst, const std::vector<int>& bo, const std::vector<int>& ow) {
    return Fpcs(names(bo.size()), best, worst, terms(bo), terms(ow));
}

inline Fpcs example1() { return make(1, 4, {2, 1, 4, 2, 8}, {3, 8, 5, 4, 1}); }
inline Fpcs example2() { return make(1, 4, {3, 1, 3, 2, 6}, {2, 6, 6, 3, 1}); }
inline Fpcs all_ones(std::size_t n = 3) {
    return make(0, n - 1, std::vector<int>(n, 1), std::vector<int>(n, 1));
}
inline Fpcs pair_system(int a_bw) { return make(0, 1, {1, a_bw}, {a_bw, 1}); }

// Random system whose judgments never exceed the best-to-worst term.
inline Fpcs random_fpcs(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const std::size_t b = pick(rng);
    std::size_t w = pick(rng);
    while (w == b) w = pick(rng);
    const int a_bw = std::uniform_int_distribution<int>(2, 9)(rng);
    std::uniform_int_distribution<int> term(1, a_bw);
    std::vector<int> bo(n), ow(n);
    for (std::size_t i = 0; i < n; ++i) {
        bo[i] = term(rng);
        ow[i] = term(rng);
    }
    bo[b] = 1;
    ow[w] = 1;
    bo[w] = a_bw;
    ow[b] = a_bw;
    return make(b, w, bo, ow);
}

}  // namespace fixtures
