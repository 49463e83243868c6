#include "bfile.hpp"

#include "selfconv/errors.hpp"

#include <fstream>
#include <sstream>

namespace selfconv::cli {

std::vector<BFileEntry> read_bfile(std::istream& in) {
    std::vector<BFileEntry> entries;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string idx, val, extra;
        if (!(fields >> idx)) continue;
        const auto where = " on line " + std::to_string(lineno);
        if (!(fields >> val) || (fields >> extra))
            throw Error(ErrorCode::MalformedBFile, "expected \"n a(n)\"" + where);
        BFileEntry e;
        try {
            std::size_t used = 0;
            e.index = std::stol(idx, &used);
            if (used != idx.size()) throw std::invalid_argument(idx);
        } catch (const std::exception&) {
            throw Error(ErrorCode::MalformedBFile, "bad index '" + idx + "'" + where);
        }
        if (e.value.set_str(val, 10) != 0)
            throw Error(ErrorCode::MalformedBFile, "bad value '" + val + "'" + where);
        if (!entries.empty() && e.index != entries.back().index + 1)
            throw Error(ErrorCode::IndexMismatch, "index " + std::to_string(e.index) + " follows " +
                                                      std::to_string(entries.back().index) + where);
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<BFileEntry> read_bfile_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::MalformedBFile, "cannot open b-file " + path);
    return read_bfile(in);
}

BFileComparison compare_bfile(const std::vector<Rational>& u, const std::vector<BFileEntry>& entries, long offset) {
    BFileComparison r;
    for (const auto& e : entries) {
        const long n = e.index - offset + 1;
        if (n < 1 || n > static_cast<long>(u.size())) continue;
        ++r.compared;
        const Rational& got = u[static_cast<std::size_t>(n - 1)];
        if (got != Rational(e.value)) {
            r.matched = false;
            r.mismatch_n = n;
            r.expected = Rational(e.value);
            r.actual = got;
            return r;
        }
    }
    if (r.compared == 0) throw Error(ErrorCode::IndexMismatch, "b-file has no terms overlapping u_1..u_N");
    return r;
}

}  // namespace selfconv::cli
