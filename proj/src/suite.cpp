#include "chabauty/suite.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>

#include "chabauty/bertrand.hpp"
#include "chabauty/constructions.hpp"
#include "chabauty/descent.hpp"
#include "chabauty/fixtures.hpp"
#include "chabauty/simplicity.hpp"

namespace chabauty {

namespace {

class Recorder {
public:
    void check(const std::string& name, const std::function<std::string()>& body) {
        SuiteCheck c{name, false, ""};
        try {
            c.detail = body();
            c.passed = c.detail.empty();
        } catch (const std::exception& e) {
            c.detail = std::string("exception: ") + e.what();
        }
        checks_.push_back(std::move(c));
    }
    std::vector<SuiteCheck> take() { return std::move(checks_); }

private:
    std::vector<SuiteCheck> checks_;
};

template <typename A, typename B>
std::string mismatch(const std::string& what, const A& got, const B& want) {
    std::ostringstream os;
    os << what << " = " << got << ", expected " << want;
    return os.str();
}

std::string check_fixture(const Fixture& fx) {
    for (const auto& pt : fx.known_points)
        if (!verify_point(fx.curve, pt)) return "listed point " + pt.to_string() + " is not on the curve";
    if (fx.expected) {
        const auto& ex = *fx.expected;
        const auto rep = sharpness_report(fx.curve, ex.p, fx.known_points.size());
        if (!rep.good) return "bad reduction at " + std::to_string(ex.p);
        if (ex.n_fp && rep.n_fp != *ex.n_fp) return mismatch("n_fp", rep.n_fp, *ex.n_fp);
        if (ex.coleman_bound && rep.coleman_bound != ex.coleman_bound)
            return mismatch("Coleman bound", rep.coleman_bound, ex.coleman_bound);
        if (rep.classification != ex.classification)
            return mismatch("classification", to_string(rep.classification), to_string(ex.classification));
    }
    if (fx.search_height > 0) {
        const auto found = search_rational_points(fx.curve, fx.search_height);
        auto listed = fx.known_points;
        std::sort(listed.begin(), listed.end());
        if (fx.complete) {
            if (found != listed)
                return mismatch("search found", found.size(), std::to_string(listed.size()) + " listed points");
        } else {
            for (const auto& pt : listed)
                if (!std::binary_search(found.begin(), found.end(), pt))
                    return "search missed listed point " + pt.to_string();
        }
    }
    return {};
}

// A good prime in the scan window where the known points meet the bound.
std::string check_sharp_prime_exists(const Fixture& fx) {
    const auto scan = scan_primes(fx.curve, fx.known_points.size());
    for (const auto& r : scan.reports)
        if (r.classification == Classification::PotentiallySharp) return {};
    return "no potentially sharp prime up to " + std::to_string(scan.cutoff);
}

std::string same_curve(const HyperellipticCurve& built, const HyperellipticCurve& listed) {
    if (built == listed) return {};
    return "generator gives " + built.f().to_string() + ", listed " + listed.f().to_string();
}

std::string check_construction(const ConstructedCurve& cc, const Fixture& fx) {
    if (auto diff = same_curve(cc.curve, fx.curve); !diff.empty()) return diff;
    const auto report = verify_construction(cc);
    if (!report.passed()) return "construction clause failed: " + report.first_failure();
    return {};
}

Fixture perturbed(Fixture fx) {
    fx.curve = HyperellipticCurve(fx.curve.f() + IntPolynomial::constant(1));
    return fx;
}

}  // namespace

std::vector<SuiteCheck> run_fixture_suite(const SuiteOptions& options) {
    Recorder rec;
    auto fixture = [&](const std::string& id) {
        Fixture fx = load_fixture(id);
        return options.perturb ? perturbed(std::move(fx)) : fx;
    };

    for (const auto& id : fixture_ids()) {
        rec.check("fixture " + id, [&] {
            const Fixture fx = fixture(id);
            if (auto err = check_fixture(fx); !err.empty()) return err;
            if (id == "stoll13" || id == "stollheight") return check_sharp_prime_exists(fx);
            return std::string();
        });
    }

    rec.check("family generator matches every listed k", [&] {
        for (bool plus : {true, false})
            for (long k : plus ? family_plus_ks() : family_minus_ks()) {
                const std::string id = (plus ? "ck_plus_" : "ck_minus_") + std::to_string(k);
                const auto cc = family_genus2(k, plus ? Sign::Plus : Sign::Minus);
                if (auto err = check_construction(cc, fixture(id)); !err.empty()) return id + ": " + err;
            }
        return std::string();
    });
    rec.check("odd-case generator gives c3", [&] { return check_construction(construct_odd_case(3, {1, 6}, -1), fixture("c3")); });
    rec.check("even-case generator gives c4", [&] { return check_construction(construct_even_case(4, {3, 4, 6}), fixture("c4")); });
    rec.check("even-case generator gives c5",
              [&] { return check_construction(construct_even_case(5, {1, 2, 3, 12}, 6), fixture("c5")); });
    rec.check("C_s generator gives genus4", [&] {
        ConstructionParams params;
        params.g = 4;
        params.p = 11;
        params.a = {1, 2, 3};
        params.exponents = {2, 2, 2};
        return check_construction(build_curve_Cs(params), fixture("genus4"));
    });

    rec.check("excessive curves force rank >= g", [&] {
        for (const char* id : {"excessive5", "excessive11"}) {
            const Fixture fx = fixture(id);
            const auto rep = sharpness_report(fx.curve, fx.expected->p, fx.known_points.size());
            const auto lb = rank_lower_bound({rep}, fx.curve.genus());
            if (lb.lower_bound != 2) return std::string(id) + ": " + mismatch("rank lower bound", lb.lower_bound, 2);
        }
        return std::string();
    });

    rec.check("two-cover descent of descent23", [&] {
        const Fixture fx = fixture("descent23");
        const DescentProblem problem(descent_f1(), descent_f2());
        if (!(problem.curve() == fx.curve)) return std::string("f1 f2 is not the fixture curve");
        BigInt r30;
        mpz_ui_pow_ui(r30.get_mpz_t(), 3, 30);
        const auto rep = run_descent(problem, fx.search_height, 30);
        if (rep.resultant != r30) return mismatch("resultant", rep.resultant, r30);
        if (rep.candidates != std::vector<BigInt>{-1, 1, -3, 3}) return std::string("unexpected candidate set");
        if (rep.excluded_real != std::vector<BigInt>{-1, -3}) return std::string("real filter did not drop d < 0");
        if (rep.surviving != std::vector<BigInt>{1, 3}) return std::string("unexpected surviving twists");
        if (rep.routed_points.size() != 5) return mismatch("routed points", rep.routed_points.size(), 5);
        for (const auto& rp : rep.routed_points)
            if (rp.d != 1) return "point " + rp.point.to_string() + " routed through d = " + rp.d.get_str();
        return std::string();
    });

    rec.check("prime chain", [] {
        for (const auto& c : check_prime_chain(published_prime_chain()))
            if (!c.ok()) return "chain entry " + std::to_string(c.value) + " fails";
        return std::string();
    });

    auto simplicity = [&](const std::string& id) {
        rec.check("absolutely simple Jacobian: " + id, [&] {
            const auto w = find_simplicity_prime(fixture(id).curve, 100);
            return w ? std::string() : std::string("no certificate prime up to 100");
        });
    };
    simplicity("grant");
    if (options.full_simplicity_sweep) {
        for (long k : family_plus_ks()) simplicity("ck_plus_" + std::to_string(k));
        for (long k : family_minus_ks()) simplicity("ck_minus_" + std::to_string(k));
    } else {
        simplicity("ck_plus_0");
        simplicity("ck_plus_1");
    }
    return rec.take();
}

bool all_passed(const std::vector<SuiteCheck>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed; });
}

}  // namespace chabauty
