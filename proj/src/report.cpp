#include "chabauty/report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace chabauty {

namespace {

std::string str(const BigInt& v) { return v.get_str(); }
std::string str(const BigRational& v) { return v.get_str(); }

BigInt parse_int(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (!t.empty() && t.front() == '+') t.erase(0, 1);
    BigInt v;
    if (t.empty() || v.set_str(t, 10) != 0) throw std::invalid_argument("not an integer: '" + text + "'");
    return v;
}

BigInt int_from_json(const Json& j) {
    if (j.is_string()) return parse_int(j.get<std::string>());
    if (j.is_number_integer()) return BigInt(j.get<long>());
    throw std::invalid_argument("coefficients must be integers or decimal strings");
}

Json ints(const std::vector<BigInt>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(str(x));
    return a;
}

}  // namespace

Json curve_to_json(const HyperellipticCurve& curve) { return Json{{"f", ints(curve.f().coeffs())}}; }

HyperellipticCurve curve_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("f") || !j["f"].is_array())
        throw std::invalid_argument("curve JSON must be an object with an array \"f\"");
    std::vector<BigInt> coeffs;
    for (const auto& c : j["f"]) coeffs.push_back(int_from_json(c));
    return HyperellipticCurve(IntPolynomial(std::move(coeffs)));
}

IntPolynomial polynomial_from_list(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != '[' && c != ']') t += c;
    std::vector<BigInt> coeffs;
    std::stringstream ss(t);
    for (std::string item; std::getline(ss, item, ',');) coeffs.push_back(parse_int(item));
    return IntPolynomial(std::move(coeffs));
}

Json to_json(const RationalPoint& pt) {
    Json j{{"point", pt.to_string()}};
    if (pt.is_affine()) {
        j["x"] = str(pt.x());
        j["y"] = str(pt.y());
    }
    return j;
}

Json to_json(const std::vector<RationalPoint>& pts) {
    Json a = Json::array();
    for (const auto& p : pts) a.push_back(to_json(p));
    return a;
}

Json to_json(const SharpnessReport& r) {
    Json j{{"p", r.p},
           {"good", r.good},
           {"n_fp", r.n_fp},
           {"coleman_bound", r.coleman_bound},
           {"coleman_applicable", r.coleman_applicable},
           {"known_points", r.known_points},
           {"classification", to_string(r.classification)}};
    if (r.stoll_bound) {
        j["stoll_bound"] = *r.stoll_bound;
        j["stoll_applicable"] = r.stoll_applicable;
    }
    return j;
}

Json to_json(const PrimeScan& scan) {
    Json reports = Json::array();
    for (const auto& r : scan.reports) reports.push_back(to_json(r));
    Json skipped = Json::array();
    for (const auto& s : scan.skipped) skipped.push_back(Json{{"p", s.p}, {"reason", s.reason}});
    return Json{{"cutoff", scan.cutoff}, {"known_points", scan.known_points}, {"reports", reports}, {"skipped", skipped}};
}

Json to_json(const RankConsequence& rc) {
    const char* source = rc.source == RankConsequence::Source::ExcessiveAt          ? "excessive"
                         : rc.source == RankConsequence::Source::PotentiallySharpAt ? "potentially_sharp"
                                                                                    : "none";
    Json j{{"lower_bound", rc.lower_bound}, {"source", source}};
    if (rc.source != RankConsequence::Source::None) j["p"] = rc.p;
    return j;
}

Json to_json(const ConditionalRankStatement& s) {
    return Json{{"p", s.p},
                {"hypothesis", s.hypothesis},
                {"rank_if_hypothesis", s.rank_if_hypothesis},
                {"known_points", s.known_points},
                {"conclusion", s.conclusion}};
}

Json to_json(const ConstructedCurve& cc) {
    return Json{{"curve", curve_to_json(cc.curve)},
                {"genus", cc.curve.genus()},
                {"p", cc.p},
                {"reduction_target", ints(cc.reduction_target.coeffs())},
                {"b", ints(cc.b)},
                {"expected_points", to_json(cc.expected_points)},
                {"expected_classification", to_string(cc.expected_classification)}};
}

Json to_json(const ConstructionReport& rep) {
    Json clauses = Json::array();
    for (const auto& c : rep.clauses) clauses.push_back(Json{{"clause", c.clause}, {"passed", c.passed}, {"detail", c.detail}});
    return Json{{"passed", rep.passed()}, {"clauses", clauses}, {"sharpness", to_json(rep.sharpness)}};
}

Json to_json(const DescentReport& rep) {
    Json local = Json::array();
    for (const auto& [d, q] : rep.excluded_local) local.push_back(Json{{"d", str(d)}, {"q", q}});
    Json routed = Json::array();
    for (const auto& rp : rep.routed_points) {
        Json j{{"point", to_json(rp.point)}, {"d", str(rp.d)}};
        if (!rp.at_infinity) {
            j["z"] = str(rp.z);
            j["t"] = str(rp.t);
        }
        routed.push_back(j);
    }
    Json surviving = Json::array();
    for (const auto& d : rep.surviving) {
        const bool carries = std::any_of(rep.routed_points.begin(), rep.routed_points.end(),
                                         [&](const RoutedPoint& rp) { return rp.d == d; });
        surviving.push_back(Json{{"d", str(d)}, {"status", carries ? "carries_known_points" : "open_obligation"}});
    }
    return Json{{"resultant", str(rep.resultant)},
                {"radical", str(rep.radical)},
                {"candidates", ints(rep.candidates)},
                {"excluded_real", ints(rep.excluded_real)},
                {"excluded_local", local},
                {"surviving", surviving},
                {"routed_points", routed},
                {"points_at_infinity", to_json(rep.points_at_infinity)}};
}

Json to_json(const WeilPolynomial& w) {
    return Json{{"p", w.p}, {"c1", str(w.c1)}, {"c2", str(w.c2)}, {"n1", str(w.n1())}, {"n2", str(w.n2())}};
}

Json to_json(const SimplicityVerdict& v) {
    return Json{{"verdict", v.absolutely_simple() ? "AbsolutelySimple" : "Inconclusive"},
                {"clause", v.clause},
                {"note", v.note}};
}

Json to_json(const RangeSummary& s) {
    return Json{{"n_max", s.n_max},
                {"checked", s.checked},
                {"max_gap", s.max_gap},
                {"max_gap_n", s.max_gap_n},
                {"worst_ratio", Json{{"n", s.worst_ratio.n}, {"p", s.worst_ratio.p}}}};
}

Json to_json(const std::vector<ChainEntryCheck>& chain) {
    Json a = Json::array();
    for (const auto& c : chain)
        a.push_back(Json{{"value", c.value},
                         {"prime", c.prime},
                         {"five_mod_eight", c.five_mod_eight},
                         {"exceeds_half_of_previous", c.exceeds_half_of_previous},
                         {"ok", c.ok()}});
    return a;
}

Json to_json(const std::vector<SuiteCheck>& checks) {
    Json a = Json::array();
    for (const auto& c : checks) {
        Json j{{"check", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        a.push_back(j);
    }
    return a;
}

}  // namespace chabauty
