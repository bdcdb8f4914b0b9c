#pragma once

#include <string>

#include <json.hpp>

#include "superchar/superchar.hpp"

namespace superchar::cli {

using Json = nlohmann::ordered_json;

/// JSON descriptor {"family":…, "m":…, "n":…} or shorthand: gl(2|1),
/// sl(3|1), q2, q(2), p2, p(2), osp(3|2), osp(4|2).
DatumPtr parse_algebra(const std::string& text);
DatumPtr algebra_from_json(const Json& j);
Json algebra_to_json(const RootDatum& d);

/// {"eps":["1","-1/2"], "delta":["0"]}; numbers are accepted as well.
Weight weight_from_json(const RootDatum& d, const Json& j);
Json weight_to_json(const Weight& w);

Json coeff_to_json(const XiCoeff& c);
XiCoeff coeff_from_json(const Json& j);

/// {"algebra":…, "terms":[{"weight":…, "coeff":["a","b"]}]}
Json ring_to_json(const RingElement& x);
RingElement ring_from_json(const Json& j);
Json laurent_to_json(const LaurentElement& x);

/// "mixed", "distinguished", a word ("εδε" or "ede"), or an index into the
/// sorted list of bases reachable from the mixed base.
Base parse_base(const DatumPtr& d, const std::string& text);
Json base_to_json(const Base& b);

}  // namespace superchar::cli
