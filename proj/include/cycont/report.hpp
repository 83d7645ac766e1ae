#pragma once

// JSON encodings shared by the CLI and the tests. Big integers are written as
// decimal strings, Parikh vectors as arrays aligned with the alphabet order,
// words as strings over the alphabet's symbol names.

#include "json.hpp"

#include "cycont/continuants.hpp"
#include "cycont/extremal.hpp"
#include "cycont/singular.hpp"
#include "cycont/words.hpp"

namespace cycont::report {

using Json = nlohmann::ordered_json;

Json vector_json(const ParikhVector& v);
ParikhVector vector_from_json(const Json& j);

Json membership_json(const ClassMembership& m);
Json search_json(const SearchReport& r, const Alphabet& alphabet);
Json graph_json(const ExchangeGraph& g, const Alphabet& alphabet);
Json construction_json(const Construction& c, const Alphabet& alphabet);

}  // namespace cycont::report
