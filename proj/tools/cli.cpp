#include "cli.hpp"

#include "bfile.hpp"

#include "selfconv/errors.hpp"
#include "selfconv/exact_seq.hpp"
#include "selfconv/measure.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <sstream>

namespace selfconv::cli {

namespace {

std::shared_ptr<spdlog::logger> g_log;

void init_logging(std::ostream& err) {
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err, true);
    g_log = std::make_shared<spdlog::logger>("selfconv", sink);
    g_log->set_pattern("[%l] %v");
    const char* env = std::getenv("SELFCONV_LOG");
    g_log->set_level(env ? spdlog::level::from_str(env) : spdlog::level::warn);
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string short_float(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

Json rat(const Rational& q) { return to_string(q); }

Json complex_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json params_json(const SequenceParams& p) { return Json::array({rat(p.alpha1()), rat(p.alpha2()), rat(p.alpha3())}); }

std::string join(const std::vector<Rational>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += to_string(v[i]);
    }
    return s;
}

struct Grid {
    double lo, hi;
    int count;
};

Grid parse_grid(const std::string& text) {
    Grid g{};
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &g.lo, &g.hi, &g.count, &tail) != 3 || g.count < 1 ||
        !(g.hi >= g.lo))
        throw CLI::ValidationError("--grid", "expected lo:hi:count with lo <= hi, count >= 1, got '" + text + "'");
    return g;
}

double grid_point(const Grid& g, int i) { return g.count == 1 ? g.lo : g.lo + (g.hi - g.lo) * i / (g.count - 1); }

// --- gen ------------------------------------------------------------------

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
    const SequenceParams p = parse_params(cfg.alpha);
    const int count = cfg.n ? cfg.n : 10;
    const ExactSequence seq = generate_exact(p, static_cast<std::size_t>(count));
    std::vector<Rational> values = seq.values;
    int first = 1;
    if (cfg.derived == "a005413") {
        values = derived_a005413(seq);
        first = 2;
    } else if (cfg.derived == "a005416") {
        values = derived_a005416(seq);
    }
    g_log->info("gen {} n={} derived='{}'", p.to_string(), count, cfg.derived);

    if (cfg.format == "json") {
        Json j;
        j["alpha"] = params_json(p);
        j["derived"] = cfg.derived.empty() ? Json(nullptr) : Json(cfg.derived);
        j["first_n"] = first;
        j["values"] = Json::array();
        for (const auto& v : values) j["values"].push_back(rat(v));
        out << dump(j);
    } else if (cfg.format == "csv") {
        out << "n,u\n";
        for (std::size_t i = 0; i < values.size(); ++i) out << first + static_cast<int>(i) << ',' << values[i] << '\n';
    } else {
        out << join(values, " ") << '\n';
    }
    return kOk;
}

// --- verify ---------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const SequenceParams p = parse_params(cfg.alpha);
    const int count = cfg.n ? cfg.n : 8;
    const VerificationReport r = verify(p, count, cfg.tol);
    g_log->info("verify {}: {} evaluations, max error estimate {:.3e}", p.to_string(), r.evaluations,
                r.max_error_estimate);
    if (r.pole_source)
        g_log->info("poles: {} ({})", r.pole_count, std::string(to_string(*r.pole_source)));
    for (const auto& row : r.rows) g_log->debug("n={} numeric={:.17g}", row.n, row.numeric);

    if (cfg.format == "json") {
        out << dump(verification_json(r));
    } else if (cfg.format == "csv") {
        out << "n,exact,numeric,abs_err,rel_err,pass\n";
        for (const auto& row : r.rows)
            out << row.n << ',' << row.exact << ',' << format_float(row.numeric) << ',' << format_float(row.abs_err)
                << ',' << format_float(row.rel_err) << ',' << (row.pass ? 1 : 0) << '\n';
    } else {
        out << "n exact numeric rel_err\n";
        for (const auto& row : r.rows)
            out << row.n << ' ' << row.exact << ' ' << format_float(row.numeric) << ' ' << short_float(row.rel_err)
                << (row.pass ? "" : "  FAIL") << '\n';
        out << (r.passed() ? "PASS" : "FAIL") << ' ' << p.to_string() << " N=" << count << " tol=" << short_float(cfg.tol)
            << '\n';
    }
    return r.passed() ? kOk : kDomainFailure;
}

// --- measure --------------------------------------------------------------

int cmd_measure(const RunConfig& cfg, std::ostream& out) {
    const SequenceParams p = parse_params(cfg.alpha);
    const Grid grid = parse_grid(cfg.grid);
    const MeasureOrContour mc = measure_for(p);
    const char sep = cfg.format == "table" ? ' ' : ',';

    if (const auto* c = std::get_if<ComplexContour>(&mc)) {
        // Contour: zeta_y and the n = 2 weight along y in [-1, 1].
        if (cfg.format == "json") {
            Json j;
            j["alpha"] = params_json(p);
            j["kind"] = "contour";
            j["abar"] = c->abar;
            j["origin_weight"] = c->origin_weight;
            j["scale"] = c->scale;
            j["first_valid_n"] = c->first_valid_n;
            j["points"] = Json::array();
            for (int i = 0; i < grid.count; ++i) {
                const double y = grid.count == 1 ? 0.0 : -1.0 + 2.0 * i / (grid.count - 1);
                const std::complex<double> zeta(-2.0 - c->alpha, 2.0 * c->abar * y);
                j["points"].push_back(
                    Json{{"y", y}, {"zeta", complex_json(zeta)}, {"weight", c->integrand(y, 2).real()}});
            }
            out << dump(j);
            return kOk;
        }
        out << "y" << sep << "zeta_re" << sep << "zeta_im" << sep << "weight\n";
        for (int i = 0; i < grid.count; ++i) {
            const double y = grid.count == 1 ? 0.0 : -1.0 + 2.0 * i / (grid.count - 1);
            out << format_float(y) << sep << format_float(-2.0 - c->alpha) << sep
                << format_float(2.0 * c->abar * y) << sep << format_float(c->integrand(y, 2).real()) << '\n';
        }
        if (c->origin_weight != 0.0) out << "atom" << sep << format_float(0.0) << sep << format_float(c->origin_weight) << '\n';
        return kOk;
    }

    const auto& m = std::get<SpectralMeasure>(mc);
    g_log->info("measure {}: family {}, scale {}", p.to_string(), std::string(to_string(m.family)), m.scale);
    auto density_at = [&](double x) {
        if (!m.has_density() || x < m.support_lo || x > m.support_hi || x <= 0.0) return 0.0;
        return m.density(x);
    };
    if (cfg.format == "json") {
        Json j;
        j["alpha"] = params_json(p);
        j["kind"] = "measure";
        j["family"] = std::string(to_string(m.family));
        j["validity"] = std::string(to_string(m.validity));
        j["scale"] = m.scale;
        j["support"] = Json::array({m.support_lo, m.finite_support() ? Json(m.support_hi) : Json(nullptr)});
        j["origin"] = Json{{"kind", m.origin.kind == OriginKind::Power ? "power" : "log-squared"},
                           {"exponent", m.origin.exponent}};
        j["tail"] = m.tail ? Json{{"amplitude", m.tail->amplitude}, {"exponent", m.tail->exponent}, {"rate", m.tail->rate}}
                           : Json(nullptr);
        j["crossover"] = std::isfinite(m.crossover) ? Json(m.crossover) : Json(nullptr);
        j["atoms"] = Json::array();
        for (const auto& a : m.atoms) j["atoms"].push_back(Json{{"location", a.location}, {"weight", a.weight}});
        j["known_poles"] = Json::array();
        for (const auto& z : m.known_poles) j["known_poles"].push_back(complex_json(z));
        j["grid"] = Json::array();
        if (m.has_density())
            for (int i = 0; i < grid.count; ++i) {
                const double x = grid_point(grid, i);
                j["grid"].push_back(Json{{"x", x}, {"mu", density_at(x)}});
            }
        out << dump(j);
        return kOk;
    }
    out << "x" << sep << "mu\n";
    if (m.has_density())
        for (int i = 0; i < grid.count; ++i) {
            const double x = grid_point(grid, i);
            out << format_float(x) << sep << format_float(density_at(x)) << '\n';
        }
    for (const auto& a : m.atoms) out << "atom" << sep << format_float(a.location) << sep << format_float(a.weight) << '\n';
    return kOk;
}

// --- classify -------------------------------------------------------------

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
    const SequenceParams p = parse_params(cfg.alpha);
    const Json j = classification_json(p, classify(p));
    if (cfg.format == "json" || cfg.format.empty()) {
        out << dump(j);
        return kOk;
    }
    const char* sep = cfg.format == "csv" ? "," : ": ";
    if (cfg.format == "csv") out << "key,value\n";
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            for (const auto& [k2, v2] : value.items())
                out << key << '.' << k2 << sep << (v2.is_string() ? v2.get<std::string>() : v2.dump()) << '\n';
        } else {
            out << key << sep << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
    }
    return kOk;
}

// --- poles ----------------------------------------------------------------

int cmd_poles(const RunConfig& cfg, std::ostream& out) {
    const SequenceParams p = parse_params(cfg.alpha);
    const MeasureOrContour mc = measure_for(p);
    const auto* m = std::get_if<SpectralMeasure>(&mc);
    if (!m) throw Error(ErrorCode::AlgebraicClass, "algebraic class has no CHGF zeros: " + p.to_string());
    const PoleSearch s = search_poles(p, *m);
    g_log->info("poles {}: {} zeros ({})", p.to_string(), s.poles.zeros.size(),
                std::string(to_string(s.poles.provenance)));

    if (cfg.format != "table" && cfg.format != "csv") {
        out << dump(pole_search_json(s));
        return kOk;
    }
    const char sep = cfg.format == "csv" ? ',' : ' ';
    if (s.prony) {
        out << "n" << sep << "u_n" << sep << "integral" << sep << "raw" << sep << "v\n";
        for (const auto& row : s.prony->table)
            out << row.n << sep << row.exact << sep << fixed(row.integral, 6) << sep << fixed(row.raw, 6) << sep
                << fixed(row.v, 6) << '\n';
        for (std::size_t i = 0; i < s.prony->fit.coeffs.size(); ++i)
            out << 'c' << i + 1 << sep << fixed(s.prony->fit.coeffs[i], 6) << '\n';
    }
    for (const auto& z : s.poles.zeros)
        out << "zeta" << sep << fixed(std::abs(z), 6) << sep << fixed(std::arg(z), 6) << sep << format_float(z.real())
            << sep << format_float(z.imag()) << '\n';
    out << "count" << sep << s.poles.zeros.size() << sep << to_string(s.poles.provenance) << '\n';
    return kOk;
}

// --- asymp ----------------------------------------------------------------

int cmd_asymp(const RunConfig& cfg, std::ostream& out) {
    const SequenceParams p = parse_params(cfg.alpha);
    const ChgfParams c = chgf_params(p);
    const int count = cfg.n ? cfg.n : 10;
    const ExactSequence seq = generate_exact(p, static_cast<std::size_t>(count));
    Json rows = Json::array();
    if (cfg.format == "csv") out << "n,ln_exact,ln_estimate\n";
    for (int n = 1; n <= count; ++n) {
        const Rational& u = seq.u(static_cast<std::size_t>(n));
        const LogValue est = asymptotic_estimate(c, n);
        const bool zero = sgn(u) == 0;
        const double lu = zero ? -std::numeric_limits<double>::infinity() : log_abs(u);
        if (cfg.format == "json") {
            rows.push_back(Json{{"n", n},
                                {"exact", rat(u)},
                                {"ln_exact", zero ? Json(nullptr) : Json(lu)},
                                {"ln_estimate", est.log_abs},
                                {"estimate_sign", est.sign},
                                {"rel_err", zero ? Json(nullptr) : Json(std::abs(std::expm1(est.log_abs - lu)))}});
        } else {
            const char sep = cfg.format == "csv" ? ',' : ' ';
            out << n << sep << (zero ? std::string("-inf") : fixed(lu, 3)) << sep << fixed(est.log_abs, 3) << '\n';
        }
    }
    if (cfg.format == "json") out << dump(Json{{"alpha", params_json(p)}, {"rows", rows}});
    return kOk;
}

// --- oeis-compare ---------------------------------------------------------

int cmd_oeis(const RunConfig& cfg, std::ostream& out) {
    const SequenceParams p = parse_params(cfg.alpha);
    const auto entries = read_bfile_path(cfg.bfile);
    if (entries.empty()) throw Error(ErrorCode::MalformedBFile, "b-file " + cfg.bfile + " has no terms");
    long needed = entries.back().index - cfg.offset + 1;
    if (cfg.n) needed = std::min<long>(needed, cfg.n);
    if (needed < 1) throw Error(ErrorCode::IndexMismatch, "b-file indices end before u_1 for offset " + std::to_string(cfg.offset));
    const ExactSequence seq = generate_exact(p, static_cast<std::size_t>(needed));
    const BFileComparison r = compare_bfile(seq.values, entries, cfg.offset);
    g_log->info("oeis-compare {}: {} entries, {} compared", p.to_string(), entries.size(), r.compared);

    if (cfg.format == "json") {
        Json j;
        j["alpha"] = params_json(p);
        j["bfile"] = cfg.bfile;
        j["offset"] = cfg.offset;
        j["compared"] = r.compared;
        j["matched"] = r.matched;
        j["mismatch"] = r.matched ? Json(nullptr)
                                  : Json{{"n", r.mismatch_n},
                                         {"index", r.mismatch_n + cfg.offset - 1},
                                         {"expected", rat(r.expected)},
                                         {"actual", rat(r.actual)}};
        out << dump(j);
    } else if (r.matched) {
        out << "match: " << r.compared << " terms compared\n";
    } else {
        out << "mismatch at n=" << r.mismatch_n << " (b-file index " << r.mismatch_n + cfg.offset - 1
            << "): b-file " << r.expected << ", computed " << r.actual << '\n';
    }
    return r.matched ? kOk : kDomainFailure;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
    if (cfg.subcommand == "gen") return cmd_gen(cfg, out);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out);
    if (cfg.subcommand == "measure") return cmd_measure(cfg, out);
    if (cfg.subcommand == "classify") return cmd_classify(cfg, out);
    if (cfg.subcommand == "poles") return cmd_poles(cfg, out);
    if (cfg.subcommand == "asymp") return cmd_asymp(cfg, out);
    return cmd_oeis(cfg, out);
}

}  // namespace

double log_abs(const Rational& q) {
    auto log_int = [](const mpz_class& z) {
        long e = 0;
        const double m = mpz_get_d_2exp(&e, z.get_mpz_t());
        return std::log(std::abs(m)) + static_cast<double>(e) * std::log(2.0);
    };
    return log_int(q.get_num()) - log_int(q.get_den());
}

Json classification_json(const SequenceParams& p, const ClassificationReport& r) {
    Json j;
    j["class"] = std::string(to_string(r.cls));
    j["zero_count"] = r.zero_count ? Json(*r.zero_count) : Json(nullptr);
    j["zero_count_source"] = r.zero_count_source == ZeroCountSource::KnownByLemma ? "known-by-lemma" : "unknown";
    j["r_origin"] = rat(r.r_origin);
    j["algebraic_subclass"] =
        r.algebraic_subclass ? Json(std::string(to_string(*r.algebraic_subclass))) : Json(nullptr);
    j["chgf"] = r.chgf ? Json{{"k", rat(r.chgf->k)},
                              {"a", rat(r.chgf->a)},
                              {"b", rat(r.chgf->b)},
                              {"sign_flipped", r.chgf->sign_flipped}}
                       : Json(nullptr);
    j["polynomial_u"] = r.polynomial_u;
    j["alpha"] = params_json(p);
    return j;
}

Json verification_json(const VerificationReport& r) {
    Json j;
    j["alpha"] = params_json(r.params);
    j["tol"] = r.tol;
    j["passed"] = r.passed();
    j["rows"] = Json::array();
    for (const auto& row : r.rows)
        j["rows"].push_back(Json{{"n", row.n},
                                 {"exact", rat(row.exact)},
                                 {"numeric", row.numeric},
                                 {"abs_err", row.abs_err},
                                 {"rel_err", row.rel_err},
                                 {"pass", row.pass}});
    j["diagnostics"] = Json{{"evaluations", r.evaluations},
                            {"max_tail_fraction", r.max_tail_fraction},
                            {"max_error_estimate", r.max_error_estimate}};
    j["poles"] = r.pole_source ? Json{{"source", std::string(to_string(*r.pole_source))}, {"count", r.pole_count}}
                               : Json(nullptr);
    return j;
}

Json pole_search_json(const PoleSearch& s) {
    Json j;
    j["count"] = s.poles.zeros.size();
    j["zeros"] = Json::array();
    for (const auto& z : s.poles.zeros) j["zeros"].push_back(complex_json(z));
    j["residue"] = rat(s.poles.residue);
    j["provenance"] = std::string(to_string(s.poles.provenance));
    if (s.prony && !s.prony->fit.coeffs.empty()) {
        Json coeffs = Json::array();
        for (double c : s.prony->fit.coeffs) coeffs.push_back(c);
        j["fit"] = Json{{"coeffs", coeffs}, {"residual", s.prony->fit.residual}, {"condition", s.prony->fit.condition}};
    } else {
        j["fit"] = nullptr;
    }
    j["table"] = Json::array();
    if (s.prony)
        for (const auto& row : s.prony->table)
            j["table"].push_back(Json{
                {"n", row.n}, {"exact", rat(row.exact)}, {"integral", row.integral}, {"raw", row.raw}, {"v", row.v}});
    if (!s.discovery_residuals.empty()) {
        Json res = Json::array();
        for (double v : s.discovery_residuals) res.push_back(v);
        j["discovery_residuals"] = res;
    }
    return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    init_logging(err);
    CLI::App app{"Self-convolutive sequences: exact terms, spectral measures, Mellin verification, CHGF zeros"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool needs_alpha = true) {
        sub->add_option("--alpha", cfg.alpha, "a1,a2,a3 as integers, p/q or decimals")->required(needs_alpha);
        sub->add_option("--format", cfg.format, "json, csv or table")
            ->check(CLI::IsMember({"json", "csv", "table"}));
    };
    auto add_n = [&](CLI::App* sub) { sub->add_option("--n", cfg.n, "number of terms")->check(CLI::PositiveNumber); };
    auto add_tol = [&](CLI::App* sub) {
        sub->add_option("--tol", cfg.tol, "relative tolerance")->check(CLI::PositiveNumber);
    };

    auto* gen = app.add_subcommand("gen", "exact terms u_1..u_N");
    add_common(gen);
    add_n(gen);
    gen->add_option("--derived", cfg.derived, "a005413 or a005416")->check(CLI::IsMember({"a005413", "a005416"}));

    auto* ver = app.add_subcommand("verify", "moment quadrature against the exact terms");
    add_common(ver);
    add_n(ver);
    add_tol(ver);

    auto* mea = app.add_subcommand("measure", "density on a grid plus atoms");
    add_common(mea);
    mea->add_option("--grid", cfg.grid, "lo:hi:count");

    auto* cls = app.add_subcommand("classify", "classification report");
    add_common(cls);

    auto* pol = app.add_subcommand("poles", "cut-plane zeros of U by Prony and Newton");
    add_common(pol);

    auto* asy = app.add_subcommand("asymp", "ln u_n beside the leading asymptotic estimate");
    add_common(asy);
    add_n(asy);

    auto* oei = app.add_subcommand("oeis-compare", "compare exact terms with an OEIS b-file");
    add_common(oei);
    add_n(oei);
    oei->add_option("--bfile", cfg.bfile, "b-file path")->required();
    oei->add_option("--offset", cfg.offset, "b-file index holding u_1")->capture_default_str();

    std::vector<std::string> argv_rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(argv_rest.begin(), argv_rest.end());
    try {
        app.parse(argv_rest);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (cfg.format.empty()) {
        if (cfg.subcommand == "measure") cfg.format = "csv";
        else if (cfg.subcommand == "classify" || cfg.subcommand == "poles") cfg.format = "json";
        else cfg.format = "table";
    }

    try {
        return dispatch(cfg, out);
    } catch (const CLI::ValidationError& e) {
        err << "usage: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error[" << error_code_name(e.code()) << "]: " << e.what() << '\n';
        return e.code() == ErrorCode::ParseError ? kUsage : kDomainFailure;
    } catch (const std::exception& e) {
        err << "error[Internal]: " << e.what() << '\n';
        return kDomainFailure;
    }
}

}  // namespace selfconv::cli
