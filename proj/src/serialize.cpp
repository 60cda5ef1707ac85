#include "rackhom/serialize.hpp"

#include "rackhom/basis.hpp"
#include "rackhom/errors.hpp"

#include <fstream>
#include <sstream>

namespace rackhom {

namespace {

int int_field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing field \"") + key + "\"");
    const Json& v = j.at(key);
    if (!v.is_number_integer())
        throw InputError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

OpTable rows_field(const Json& j, const char* key, int rows)
{
    if (!j.contains(key) || !j.at(key).is_array())
        throw InputError(std::string("field \"") + key + "\" must be an array of rows");
    const Json& a = j.at(key);
    if (static_cast<int>(a.size()) != rows)
        throw InputError(std::string("field \"") + key + "\" has " + std::to_string(a.size()) + " rows, expected " +
                         std::to_string(rows));
    OpTable out;
    for (const Json& row : a) {
        if (!row.is_array())
            throw InputError(std::string("field \"") + key + "\" rows must be arrays");
        std::vector<int> r;
        for (const Json& v : row) {
            if (!v.is_number_integer())
                throw InputError(std::string("field \"") + key + "\" entries must be integers");
            r.push_back(v.get<int>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string tuple_key(const Tuple& t)
{
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(t[i]);
    }
    return s;
}

Tuple parse_tuple_key(const std::string& key, int shelf_size)
{
    Tuple t;
    if (key.empty())
        return t;
    std::stringstream in(key);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(part, &used);
            if (used != part.size())
                throw std::invalid_argument(part);
            if (v < 0 || v >= shelf_size)
                throw InputError("cochain key \"" + key + "\" has an element outside {0.." +
                                 std::to_string(shelf_size - 1) + "}");
            t.push_back(v);
        } catch (const std::logic_error& e) {
            if (dynamic_cast<const InputError*>(&e))
                throw;
            throw InputError("cochain key \"" + key + "\" is not a comma-separated list of integers");
        }
    }
    return t;
}

Json integer_json(const Integer& v)
{
    if (v.fits_slong_p())
        return Json(v.get_si());
    return Json(v.get_str());
}

Integer integer_from_json(const Json& v)
{
    if (v.is_number_integer())
        return Integer(v.get<long>());
    if (v.is_string()) {
        Integer out;
        if (out.set_str(v.get<std::string>(), 10) != 0)
            throw InputError("bad integer \"" + v.get<std::string>() + "\"");
        return out;
    }
    throw InputError("cochain values must be integers");
}

}  // namespace

OpTable table_from_json(const Json& j)
{
    const int n = int_field(j, "size");
    if (n < 1)
        throw InputError("shelf size must be positive");
    return rows_field(j, "table", n);
}

Json shelf_to_json(const FiniteShelf& shelf)
{
    return Json{{"size", shelf.size()}, {"table", shelf.table()}};
}

OpTable action_from_json(const Json& j)
{
    const int m = int_field(j, "size");
    if (m < 1)
        throw InputError("X-set size must be positive");
    return rows_field(j, "action", m);
}

Json xset_to_json(const XSetAction& action)
{
    return Json{{"size", action.size()}, {"action", action.action()}};
}

Cochain cochain_from_json(const Json& j, int shelf_size, int coeff_size)
{
    const int n = int_field(j, "degree");
    if (n < 0)
        throw InputError("cochain degree must be non-negative");
    Cochain f(n, shelf_size, coeff_size);
    if (!j.contains("values") || !j.at("values").is_object())
        throw InputError("field \"values\" must be an object");
    for (const auto& [key, value] : j.at("values").items()) {
        int s = 0;
        std::string rest = key;
        if (auto bar = key.find('|'); bar != std::string::npos) {
            try {
                s = std::stoi(key.substr(0, bar));
            } catch (const std::logic_error&) {
                throw InputError("cochain key \"" + key + "\" has a bad coefficient index");
            }
            rest = key.substr(bar + 1);
        }
        if (s < 0 || s >= coeff_size)
            throw InputError("cochain key \"" + key + "\" has a coefficient index outside the coefficient set");
        Tuple t = parse_tuple_key(rest, shelf_size);
        if (static_cast<int>(t.size()) != n)
            throw InputError("cochain key \"" + key + "\" does not have length " + std::to_string(n));
        f.set(t, integer_from_json(value), s);
    }
    return f;
}

Json cochain_to_json(const Cochain& f)
{
    Json values = Json::object();
    for (std::size_t i = 0; i < f.dimension(); ++i) {
        if (f[i] == 0)
            continue;
        auto [s, t] = decode(f.shelf_size(), f.degree(), i);
        std::string key = tuple_key(t);
        if (f.coeff_size() > 1)
            key = std::to_string(s) + "|" + key;
        values[key] = integer_json(f[i]);
    }
    Json out{{"degree", f.degree()}, {"values", values}};
    if (f.modulus())
        out["modulus"] = *f.modulus();
    return out;
}

Json bar_to_json(const BarElement& b)
{
    Json terms = Json::array();
    int degree = -1;
    for (const auto& [t, c] : b) {
        terms.push_back(Json{{"tuple", t}, {"coeff", integer_json(c)}});
        degree = static_cast<int>(t.size());
    }
    Json out = Json::object();
    if (degree >= 0)
        out["degree"] = degree;
    out["terms"] = terms;
    return out;
}

Json tensor_to_json(const BarTensor& t)
{
    Json terms = Json::array();
    for (const auto& [k, c] : t)
        terms.push_back(Json{{"left", k.first}, {"right", k.second}, {"coeff", integer_json(c)}});
    return Json{{"terms", terms}};
}

Json homology_to_json(int degree, const HomologyGroup& h)
{
    Json torsion = Json::array();
    for (const auto& v : h.torsion)
        torsion.push_back(integer_json(v));
    return Json{{"degree", degree}, {"free_rank", h.free_rank}, {"torsion", torsion}, {"group", h.to_string()}};
}

Json parse_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

}  // namespace rackhom
