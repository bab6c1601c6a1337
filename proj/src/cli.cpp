#include "chabauty/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "chabauty/report.hpp"

namespace chabauty::cli {

namespace {

struct CurveSource {
    std::string file;
    std::string fixture;

    void attach(CLI::App* cmd) {
        auto* f = cmd->add_option("--curve", file, "Curve JSON file {\"f\": [\"c0\", \"c1\", ...]}");
        auto* x = cmd->add_option("--fixture", fixture, "Registered fixture id");
        f->excludes(x);
    }

    bool given() const { return !file.empty() || !fixture.empty(); }

    // The curve plus the fixture's listed points, if any.
    std::pair<HyperellipticCurve, std::optional<Fixture>> load() const {
        if (!fixture.empty()) {
            Fixture fx = load_fixture(fixture);
            HyperellipticCurve c = fx.curve;
            return {std::move(c), std::move(fx)};
        }
        if (file.empty()) throw std::invalid_argument("one of --curve or --fixture is required");
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open " + file);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw std::invalid_argument("malformed curve JSON in " + file + ": " + e.what());
        }
        return {curve_from_json(j), std::nullopt};
    }
};

std::vector<long> parse_longs(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw std::invalid_argument("not an integer: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    for (long v : parse_longs(text)) out.push_back(static_cast<int>(v));
    return out;
}

// Known-point count: explicit, else the fixture's list, else a search.
std::uint64_t known_count(std::optional<std::uint64_t> known, const std::optional<Fixture>& fx,
                          const HyperellipticCurve& curve, long height) {
    if (known) return *known;
    if (fx) return fx->known_points.size();
    return search_rational_points(curve, height).size();
}

Json rank_section(const std::vector<SharpnessReport>& reports, int genus) {
    Json j{{"lower_bound", to_json(rank_lower_bound(reports, genus))}};
    if (auto s = rank_is_g_minus_1_if_sharp(reports, genus)) j["conditional"] = to_json(*s);
    return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chabauty-Coleman bound toolkit for hyperelliptic curves"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_file;
    int jobs = 0;
    app.add_option("--out", out_file, "Write the report to this file instead of stdout");
    app.add_option("--jobs", jobs, "Maximum worker threads")->check(CLI::PositiveNumber);

    Json report;
    int status = kOk;
    std::string text_report;

    // analyze
    CurveSource a_src;
    std::vector<std::uint64_t> a_primes;
    std::optional<std::uint64_t> a_known;
    long a_height = 10;
    auto* analyze = app.add_subcommand("analyze", "Invariants, points and bounds of one curve");
    a_src.attach(analyze);
    analyze->add_option("--p", a_primes, "Primes to report on (repeatable)");
    analyze->add_option("--known", a_known, "Number of known rational points");
    analyze->add_option("--height", a_height, "Search height")->check(CLI::PositiveNumber);

    // scan
    CurveSource s_src;
    std::optional<std::uint64_t> s_known;
    std::optional<std::uint64_t> s_limit;
    long s_height = 10;
    auto* scan = app.add_subcommand("scan", "Classify every prime up to the Hasse-Weil cutoff");
    s_src.attach(scan);
    scan->add_option("--known", s_known, "Number of known rational points");
    scan->add_option("--limit", s_limit, "Scan up to this bound instead of the cutoff");
    scan->add_option("--height", s_height, "Search height used when --known is absent")->check(CLI::PositiveNumber);

    // search-points
    CurveSource p_src;
    long p_height = 10;
    auto* search = app.add_subcommand("search-points", "Rational points up to a height bound");
    p_src.attach(search);
    search->add_option("--height", p_height, "Search height")->check(CLI::PositiveNumber);

    // construct
    std::string c_case;
    int c_genus = 2;
    long c_k = 0;
    std::string c_sign = "plus";
    std::string c_a;
    std::optional<long> c_c;
    std::string c_R;
    std::string c_exponents;
    std::optional<std::uint64_t> c_p;
    std::optional<int> c_s;
    auto* construct = app.add_subcommand("construct", "Build a curve from one of the generators and verify it");
    construct->add_option("--case", c_case, "family22 | odd | even | cs")
        ->required()
        ->check(CLI::IsMember({"family22", "odd", "even", "cs"}));
    construct->add_option("--genus", c_genus, "Genus");
    construct->add_option("--k", c_k, "Family parameter k");
    construct->add_option("--sign", c_sign, "plus | minus")->check(CLI::IsMember({"plus", "minus"}));
    construct->add_option("--a", c_a, "Comma-separated a_i");
    construct->add_option("--c", c_c, "Constant c");
    construct->add_option("--R", c_R, "Ascending coefficients of R");
    construct->add_option("--exponents", c_exponents, "Comma-separated transform exponents");
    construct->add_option("--p", c_p, "Prime (cs case; default: least admissible)");
    construct->add_option("--s", c_s, "Number of a_i (checked against --a)");

    // descend
    std::string d_f1;
    std::string d_f2;
    long d_height = 11;
    std::uint64_t d_local = 30;
    auto* descend = app.add_subcommand("descend", "Two-cover descent for y^2 = f1 f2");
    descend->add_option("--f1", d_f1, "Ascending coefficients of monic f1")->required();
    descend->add_option("--f2", d_f2, "Ascending coefficients of monic f2")->required();
    descend->add_option("--height", d_height, "Search height for the covering check")->check(CLI::PositiveNumber);
    descend->add_option("--local-bound", d_local, "Largest odd prime for local filters");

    // simplicity
    CurveSource y_src;
    std::uint64_t y_pmax = 100;
    auto* simplicity = app.add_subcommand("simplicity", "Absolute simplicity certificate for a genus-2 Jacobian");
    y_src.attach(simplicity);
    simplicity->add_option("--pmax", y_pmax, "Largest prime to try")->check(CLI::Range(3, 1000));

    // bertrand
    std::uint64_t b_nmax = 1'000'000;
    bool b_list = false;
    std::string b_format = "json";
    auto* bertrand = app.add_subcommand("bertrand", "Primes = 3, 5 mod 8 in every [n, 2n)");
    bertrand->add_option("--nmax", b_nmax, "Check every n up to this bound")->check(CLI::Range(2, 10'000'000));
    bertrand->add_flag("--verify-paper-list", b_list, "Also check the published prime chain");
    bertrand->add_option("--format", b_format, "json | text")->check(CLI::IsMember({"json", "text"}));

    // verify-paper
    bool v_perturb = false;
    bool v_full = false;
    auto* verify = app.add_subcommand("verify-paper", "Run every fixture expectation");
    verify->add_flag("--perturb", v_perturb, "Corrupt every fixture first (negative control)");
    verify->add_flag("--full-sweep", v_full, "Simplicity certificates for all family members");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    if (jobs > 0) omp_set_num_threads(jobs);

    try {
        if (analyze->parsed()) {
            const auto [curve, fx] = a_src.load();
            const auto points = search_rational_points(curve, a_height);
            const auto known = known_count(a_known, fx, curve, a_height);
            std::vector<std::uint64_t> primes = a_primes;
            if (primes.empty() && fx && fx->expected) primes.push_back(fx->expected->p);
            Json reports = Json::array();
            std::vector<SharpnessReport> reps;
            for (auto p : primes) {
                reps.push_back(sharpness_report(curve, p, known));
                reports.push_back(to_json(reps.back()));
            }
            report = Json{{"curve", curve_to_json(curve)},
                          {"genus", curve.genus()},
                          {"degree", curve.degree()},
                          {"discriminant", curve.discriminant().get_str()},
                          {"search_height", a_height},
                          {"points", to_json(points)},
                          {"known_points", known},
                          {"reports", reports},
                          {"rank", rank_section(reps, curve.genus())}};
            if (fx) {
                bool ok = true;
                for (const auto& pt : fx->known_points) ok = ok && verify_point(curve, pt);
                report["fixture"] = Json{{"id", fx->id}, {"description", fx->description}, {"listed_points_verify", ok}};
                if (!ok) status = kVerificationFailed;
            }
        } else if (scan->parsed()) {
            const auto [curve, fx] = s_src.load();
            const auto known = known_count(s_known, fx, curve, s_height);
            const PrimeScan ps = s_limit ? scan_primes_up_to(curve, known, *s_limit) : scan_primes(curve, known);
            report = to_json(ps);
            report["curve"] = curve_to_json(curve);
            report["genus"] = curve.genus();
            report["rank"] = rank_section(ps.reports, curve.genus());
        } else if (search->parsed()) {
            const auto [curve, fx] = p_src.load();
            const auto points = search_rational_points(curve, p_height);
            report = Json{{"curve", curve_to_json(curve)},
                          {"height", p_height},
                          {"count", points.size()},
                          {"points", to_json(points)}};
        } else if (construct->parsed()) {
            const auto a = parse_longs(c_a);
            if (c_s && *c_s != static_cast<int>(a.size()))
                throw std::invalid_argument("--s does not match the number of --a values");
            std::optional<ConstructedCurve> cc;
            if (c_case == "family22") {
                cc = family_genus2(c_k, c_sign == "plus" ? Sign::Plus : Sign::Minus);
            } else if (c_case == "odd") {
                if (!c_c) throw std::invalid_argument("--c is required for the odd case");
                cc = construct_odd_case(c_genus, a, *c_c);
            } else if (c_case == "even") {
                cc = construct_even_case(c_genus, a, c_c);
            } else {
                ConstructionParams params;
                params.g = c_genus;
                params.p = c_p ? *c_p : choose_prime(c_genus);
                params.a = a;
                params.R = c_R.empty() ? IntPolynomial() : polynomial_from_list(c_R);
                params.exponents = c_exponents.empty() ? std::vector<int>{} : parse_ints(c_exponents);
                cc = build_curve_Cs(params);
            }
            const auto rep = verify_construction(*cc);
            report = Json{{"construction", to_json(*cc)}, {"verification", to_json(rep)}};
            if (!rep.passed()) status = kVerificationFailed;
        } else if (descend->parsed()) {
            const DescentProblem problem(polynomial_from_list(d_f1), polynomial_from_list(d_f2));
            report = to_json(run_descent(problem, d_height, d_local));
            report["curve"] = curve_to_json(problem.curve());
        } else if (simplicity->parsed()) {
            const auto [curve, fx] = y_src.load();
            const auto w = find_simplicity_prime(curve, y_pmax);
            report = Json{{"curve", curve_to_json(curve)}, {"pmax", y_pmax}};
            if (w) {
                report["p"] = w->p;
                report["c1"] = w->weil.c1.get_str();
                report["c2"] = w->weil.c2.get_str();
                const auto v = hz_check(w->weil);
                report["verdict"] = "AbsolutelySimple";
                report["clause"] = v.clause;
                report["note"] = v.note;
            } else {
                report["p"] = nullptr;
                report["verdict"] = "Inconclusive";
                report["clause"] = "no prime up to pmax passes every clause";
                report["note"] = hz_check(WeilPolynomial{3, 0, 0}).note;
            }
        } else if (bertrand->parsed()) {
            const auto summary = check_range(b_nmax);
            report = Json{{"range", to_json(summary)}};
            std::ostringstream text;
            text << "every n in [2, " << b_nmax << "] has a prime = 3, 5 mod 8 in [n, 2n)\n"
                 << "largest gap " << summary.max_gap << " at n = " << summary.max_gap_n << "\n"
                 << "largest ratio p/n at n = " << summary.worst_ratio.n << ", p = " << summary.worst_ratio.p << "\n";
            if (b_list) {
                const auto chain = check_prime_chain(published_prime_chain());
                const bool ok = std::all_of(chain.begin(), chain.end(), [](const ChainEntryCheck& c) { return c.ok(); });
                report["chain"] = Json{{"passed", ok}, {"entries", to_json(chain)}};
                text << "prime chain (" << chain.size() << " entries): " << (ok ? "ok" : "FAILED") << "\n";
                if (!ok) status = kVerificationFailed;
            }
            text_report = text.str();
        } else if (verify->parsed()) {
            const auto checks = run_fixture_suite({v_perturb, v_full});
            const bool ok = all_passed(checks);
            report = Json{{"passed", ok}, {"perturbed", v_perturb}, {"checks", to_json(checks)}};
            if (!ok) status = kVerificationFailed;
        }
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kVerificationFailed;
    }

    const std::string body = bertrand->parsed() && b_format == "text" ? text_report : report.dump(2) + "\n";
    if (out_file.empty()) {
        out << body;
    } else {
        std::ofstream f(out_file);
        if (!f) {
            err << "error: cannot write " << out_file << "\n";
            return kUsageError;
        }
        f << body;
    }
    return status;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"chabauty"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace chabauty::cli
