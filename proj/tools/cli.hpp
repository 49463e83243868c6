#pragma once

#include "json_out.hpp"

#include "selfconv/moments.hpp"
#include "selfconv/params.hpp"
#include "selfconv/poles.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace selfconv::cli {

enum ExitCode { kOk = 0, kDomainFailure = 1, kUsage = 2 };

/// Parsed command line.
struct RunConfig {
    std::string subcommand;
    std::string alpha;
    int n = 0;  // 0: per-command default
    double tol = 1e-6;
    std::string format;  // empty: per-command default
    std::string bfile;
    long offset = 1;
    std::string derived;
    std::string grid = "0.1:20:40";
    unsigned seed = 1;
};

/// Runs the CLI with argv[0] being the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

Json classification_json(const SequenceParams& p, const ClassificationReport& r);
Json verification_json(const VerificationReport& r);
Json pole_search_json(const PoleSearch& s);

/// ln|q| for a nonzero rational of any size.
double log_abs(const Rational& q);

}  // namespace selfconv::cli
