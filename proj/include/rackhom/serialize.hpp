#pragma once

#include "rackhom/cochain.hpp"
#include "rackhom/dgbial.hpp"
#include "rackhom/exactlin.hpp"
#include "rackhom/shelf.hpp"

#include <json.hpp>

#include <string>

namespace rackhom {

using Json = nlohmann::ordered_json;

// {"size": n, "table": [[...], ...]}; InputError on anything malformed.
OpTable table_from_json(const Json& j);
Json shelf_to_json(const FiniteShelf& shelf);

// {"size": m, "action": [[...], ...]} (m rows of length |X|).
OpTable action_from_json(const Json& j);
Json xset_to_json(const XSetAction& action);

// {"degree": n, "values": {"0,1": 3, ...}}; missing tuples are 0. With
// non-trivial coefficients keys read "s|x1,...,xn".
Cochain cochain_from_json(const Json& j, int shelf_size, int coeff_size = 1);
Json cochain_to_json(const Cochain& f);

Json bar_to_json(const BarElement& b);
Json tensor_to_json(const BarTensor& t);
Json homology_to_json(int degree, const HomologyGroup& h);

Json parse_json_file(const std::string& path);

}  // namespace rackhom
