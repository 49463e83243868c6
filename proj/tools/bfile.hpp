#pragma once

#include "selfconv/rational.hpp"

#include <istream>
#include <string>
#include <vector>

namespace selfconv::cli {

struct BFileEntry {
    long index;
    Integer value;
};

/// "n a(n)" lines, whitespace separated; '#' starts a comment, blank lines
/// are skipped. Indices must increase by exactly one.
/// Throws MalformedBFile or IndexMismatch.
std::vector<BFileEntry> read_bfile(std::istream& in);
std::vector<BFileEntry> read_bfile_path(const std::string& path);

struct BFileComparison {
    std::size_t compared = 0;
    /// First differing term, if any (u-index and both values).
    bool matched = true;
    long mismatch_n = 0;
    Rational expected;
    Rational actual;
};

/// Compares u_n against b-file entries, b-file index `offset` holding u_1.
/// Entries before u_1 are ignored. Throws IndexMismatch when nothing overlaps.
BFileComparison compare_bfile(const std::vector<Rational>& u, const std::vector<BFileEntry>& entries, long offset);

}  // namespace selfconv::cli
