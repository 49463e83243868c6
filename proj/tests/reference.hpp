#pragma once

#include <json.hpp>

#include <fstream>
#include <string>

// Frozen mpmath values from tests/oracles/gen_reference.py.
inline const nlohmann::json& reference() {
    static const nlohmann::json ref = [] {
        std::ifstream in(std::string(SELFCONV_TEST_DATA) + "/reference.json");
        return nlohmann::json::parse(in);
    }();
    return ref;
}

inline std::string data_path(const std::string& name) { return std::string(SELFCONV_TEST_DATA) + "/" + name; }

// |got - want| <= tol * max(|want|, floor)
inline bool close_rel(double got, double want, double tol, double floor = 1e-300) {
    const double scale = std::max(std::abs(want), floor);
    return std::abs(got - want) <= tol * scale;
}
