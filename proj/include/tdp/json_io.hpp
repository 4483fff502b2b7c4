#pragma once

// JSON encodings of the domain types.
//
// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; readers accept both. Rationals are
// {"num": int, "den": int}.

#include "tdp/corpus.hpp"
#include "tdp/markov.hpp"
#include "tdp/qgdeform.hpp"
#include "tdp/quotsing.hpp"
#include "tdp/toric.hpp"

#include <json.hpp>

namespace tdp {

using nlohmann::json;

json integer_json(const Integer& n);
Integer integer_from_json(const json& j);

json rational_json(const Rational& q);
Rational rational_from_json(const json& j);

/// {"r": int, "a": int}
json germ_json(const CyclicQuotSing& s);
CyclicQuotSing germ_from_json(const json& j);

json chain_json(const HJChain& chain);

/// Cyclic points as {"r", "a"}; D/E points as {"type": "D"|"E", "n": int}.
json singularity_json(const SingularityClass& c);
SingularityClass singularity_from_json(const json& j);

/// {"rays": [[x, y], ...]}
json fan_json(const Fan& f);
Fan fan_from_json(const json& j);

/// {"rays", "singularities", "rho", "k2", "del_pezzo", "s", "noether_defect"}
json surface_report_json(const ToricSurface& s);

/// {"rho", "k2", "sings", "s", "margin", "origin"}
json record_json(const SurfaceRecord& rec);

/// Accepts a record, a surface report or a bare fan.
SurfaceRecord record_from_json(const json& j);

json triple_json(const MarkovEquation& eq, const MarkovTriple& t);

json example_json(const MarkovExample& ex);

json report_json(const VerificationReport& r);

}  // namespace tdp
