#pragma once

// JSON encodings of curves, points and module reports. Integers that can
// outgrow a double are written as decimal strings.

#include <json.hpp>

#include "chabauty/bertrand.hpp"
#include "chabauty/constructions.hpp"
#include "chabauty/descent.hpp"
#include "chabauty/fixtures.hpp"
#include "chabauty/sharpness.hpp"
#include "chabauty/simplicity.hpp"
#include "chabauty/suite.hpp"

namespace chabauty {

using Json = nlohmann::ordered_json;

/// {"f": ["c0", "c1", ...]}.
Json curve_to_json(const HyperellipticCurve& curve);
/// Accepts decimal strings or integers in "f". Throws std::invalid_argument
/// on a malformed object and on an invalid curve.
HyperellipticCurve curve_from_json(const Json& j);
/// "1,2,-3" or "[1, 2, -3]" as ascending coefficients.
IntPolynomial polynomial_from_list(const std::string& text);

Json to_json(const RationalPoint& pt);
Json to_json(const std::vector<RationalPoint>& pts);
Json to_json(const SharpnessReport& r);
Json to_json(const PrimeScan& scan);
Json to_json(const RankConsequence& rc);
Json to_json(const ConditionalRankStatement& s);
Json to_json(const ConstructedCurve& cc);
Json to_json(const ConstructionReport& rep);
Json to_json(const DescentReport& rep);
Json to_json(const WeilPolynomial& w);
Json to_json(const SimplicityVerdict& v);
Json to_json(const RangeSummary& s);
Json to_json(const std::vector<ChainEntryCheck>& chain);
Json to_json(const std::vector<SuiteCheck>& checks);

}  // namespace chabauty
