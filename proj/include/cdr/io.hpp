#pragma once

#include <json.hpp>
#include <string>

#include "cdr/abelian.hpp"
#include "cdr/elliptic.hpp"
#include "cdr/graphs.hpp"
#include "cdr/monodromy.hpp"
#include "cdr/pixton.hpp"
#include "cdr/tropical.hpp"

namespace cdr {

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

json to_json(const Graph &g);
json to_json(const Subgroup &h);
json to_json(const MonodromyGraph &mg);
json to_json(const DivisorClass &c);
json to_json(const FanCone &c);
json to_json(const GluingReport &r);
json to_json(const PiecewisePolynomial &pp);
json to_json(const CorrelatedDRClass &c);
json to_json(const InvariantRow &r);
// Sparse map "e:j" -> value for interior points and "v" -> value for original vertices.
json divisor_json(const SubdividedGraph &s, const Divisor &d);

// {schema_version, command, parameters, result}
json envelope(const std::string &command, json parameters, json result);

}  // namespace cdr
