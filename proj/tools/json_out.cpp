#include "json_out.hpp"

#include <cmath>
#include <cstdio>

namespace selfconv::cli {

std::string format_float(double v) {
    // JSON has no inf/nan
    if (!std::isfinite(v)) return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

namespace {

void emit(const Json& j, std::string& out, int depth) {
    const std::string pad(2 * (depth + 1), ' ');
    const std::string close(2 * depth, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ",\n";
                first = false;
                out += pad + Json(key).dump() + ": ";
                emit(value, out, depth + 1);
            }
            out += "\n" + close + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& value : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                emit(value, out, depth + 1);
            }
            out += "\n" + close + "]";
            return;
        }
        case Json::value_t::number_float: out += format_float(j.get<double>()); return;
        default: out += j.dump(); return;
    }
}

}  // namespace

std::string dump(const Json& j) {
    std::string out;
    emit(j, out, 0);
    out += "\n";
    return out;
}

}  // namespace selfconv::cli
