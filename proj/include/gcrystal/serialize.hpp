#ifndef GCRYSTAL_SERIALIZE_HPP
#define GCRYSTAL_SERIALIZE_HPP

// JSON encodings:
//   points   {"n":N,"k":K,"kind":"x"|"y"|"trop"|"trop-y","entries":{"l,m":"p/q" | int}}
//   elements {"n":N,"k":K,"kind":"b","entries":{"j,i":int}}
//   vectors  {"n":N,"k":K,"kind":"w","coeffs":{"i1,...,ik":"p/q"}}
//   paths    [[l,m], ...]

#include "gcrystal/bkinf.hpp"
#include "gcrystal/fundrep.hpp"
#include "gcrystal/lattice.hpp"
#include "gcrystal/paths.hpp"

#include <json.hpp>

#include <charconv>
#include <set>
#include <string>
#include <variant>

namespace gcrystal {

using Json = nlohmann::json;

namespace detail {

template <class P>
constexpr const char* kind_name()
{
    if constexpr (std::is_same_v<P, XPoint>) {
        return "x";
    } else if constexpr (std::is_same_v<P, YPoint>) {
        return "y";
    } else if constexpr (std::is_same_v<P, TropPoint>) {
        return "trop";
    } else {
        static_assert(std::is_same_v<P, TropYPoint>, "no JSON kind for this point type");
        return "trop-y";
    }
}

inline std::vector<int> parse_int_list(const std::string& key)
{
    std::vector<int> out;
    const char* p = key.data();
    const char* end = key.data() + key.size();
    while (p < end) {
        int v = 0;
        const auto [next, ec] = std::from_chars(p, end, v);
        if (ec != std::errc{}) {
            throw ValidationError("malformed index key '" + key + "'");
        }
        out.push_back(v);
        p = next;
        if (p < end) {
            if (*p != ',') {
                throw ValidationError("malformed index key '" + key + "'");
            }
            ++p;
            if (p == end) {
                throw ValidationError("malformed index key '" + key + "'");
            }
        }
    }
    if (out.empty()) {
        throw ValidationError("empty index key");
    }
    return out;
}

inline Shape shape_of(const Json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j["n"].is_number_integer() ||
        !j["k"].is_number_integer()) {
        throw ValidationError("object needs integer fields n and k");
    }
    return Shape{j["n"].get<int>(), j["k"].get<int>()};
}

inline const Json& entries_of(const Json& j, const char* field = "entries")
{
    if (!j.contains(field) || !j[field].is_object()) {
        throw ValidationError(std::string{"object needs an object field '"} + field + "'");
    }
    return j[field];
}

inline std::int64_t integer_of(const Json& v, const std::string& key)
{
    if (!v.is_number_integer()) {
        throw ValidationError("entry '" + key + "' must be an integer");
    }
    return v.get<std::int64_t>();
}

inline Rational rational_of(const Json& v, const std::string& key)
{
    if (v.is_string()) {
        return parse_rational(v.get<std::string>());
    }
    if (v.is_number_integer()) {
        return Rational{mpz_class{std::to_string(v.get<std::int64_t>())}};
    }
    throw ValidationError("entry '" + key + "' must be a \"p/q\" string");
}

} // namespace detail

inline std::string coord_key(int a, int b) { return std::to_string(a) + "," + std::to_string(b); }

template <class P>
Json to_json(const P& p)
{
    Json entries = Json::object();
    for (const auto& c : p.shape().nodes(P::side)) {
        if constexpr (std::is_same_v<typename P::value_type, Rational>) {
            entries[to_string(c)] = to_string(p.get(c));
        } else {
            entries[to_string(c)] = p.get(c);
        }
    }
    return Json{{"n", p.shape().n()}, {"k", p.shape().k()}, {"kind", detail::kind_name<P>()}, {"entries", entries}};
}

inline Json to_json(const BElement& b)
{
    Json entries = Json::object();
    for (int j = 1; j <= b.shape().k(); ++j) {
        for (int i = j; i <= j + b.shape().kprime(); ++i) {
            entries[coord_key(j, i)] = b.get(j, i);
        }
    }
    return Json{{"n", b.shape().n()}, {"k", b.shape().k()}, {"kind", "b"}, {"entries", entries}};
}

inline Json to_json(const FundVector& v)
{
    Json coeffs = Json::object();
    for (const auto& [t, c] : v.coeffs()) {
        std::string key;
        for (std::size_t j = 0; j < t.size(); ++j) {
            key += (j ? "," : "") + std::to_string(t[j]);
        }
        coeffs[key] = to_string(c);
    }
    return Json{{"n", v.shape().n()}, {"k", v.shape().k()}, {"kind", "w"}, {"coeffs", coeffs}};
}

inline Json to_json(const Path& p)
{
    Json out = Json::array();
    for (const auto& c : p.points) {
        out.push_back(Json::array({c.l, c.m}));
    }
    return out;
}

inline Json to_json(const CTuple& c) { return Json(c); }

/// Reads a point of type P; the entry keys must be exactly the lattice nodes.
template <class P>
P point_from_json(const Json& j)
{
    const Shape shape = detail::shape_of(j);
    if (!j.contains("kind") || j["kind"] != detail::kind_name<P>()) {
        throw ValidationError(std::string{"expected kind \""} + detail::kind_name<P>() + "\"");
    }
    const Json& entries = detail::entries_of(j);
    P p{shape};
    std::set<Coord> seen;
    for (const auto& [key, value] : entries.items()) {
        const auto idx = detail::parse_int_list(key);
        if (idx.size() != 2 || !shape.contains(P::side, idx[0], idx[1])) {
            throw ValidationError("entry '" + key + "' is not a lattice node");
        }
        if constexpr (std::is_same_v<typename P::value_type, Rational>) {
            const Rational q = detail::rational_of(value, key);
            if (!(q > 0)) {
                throw ValidationError("entry '" + key + "' must be positive");
            }
            p.set(idx[0], idx[1], q);
        } else {
            p.set(idx[0], idx[1], detail::integer_of(value, key));
        }
        seen.insert({idx[0], idx[1]});
    }
    if (seen.size() != static_cast<std::size_t>(shape.size())) {
        throw ValidationError("point must give every lattice node exactly once");
    }
    return p;
}

inline BElement belement_from_json(const Json& j)
{
    const Shape shape = detail::shape_of(j);
    if (!j.contains("kind") || j["kind"] != "b") {
        throw ValidationError("expected kind \"b\"");
    }
    const Json& entries = detail::entries_of(j);
    BElement b{shape};
    std::size_t count = 0;
    for (const auto& [key, value] : entries.items()) {
        const auto idx = detail::parse_int_list(key);
        if (idx.size() != 2 || !b.contains(idx[0], idx[1])) {
            throw ValidationError("entry '" + key + "' is outside the array");
        }
        b.add(idx[0], idx[1], detail::integer_of(value, key));
        ++count;
    }
    if (count != b.entries().size()) {
        throw ValidationError("element must give every entry exactly once");
    }
    for (int r = 1; r <= shape.k(); ++r) {
        if (b.row_sum(r) != 0) {
            throw ValidationError("row " + std::to_string(r) + " does not sum to zero");
        }
    }
    return b;
}

using AnyObject = std::variant<XPoint, YPoint, TropPoint, BElement>;

inline AnyObject object_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw ValidationError("object needs a string field 'kind'");
    }
    const auto kind = j["kind"].get<std::string>();
    if (kind == "x") {
        return point_from_json<XPoint>(j);
    }
    if (kind == "y") {
        return point_from_json<YPoint>(j);
    }
    if (kind == "trop") {
        return point_from_json<TropPoint>(j);
    }
    if (kind == "b") {
        return belement_from_json(j);
    }
    throw ValidationError("unknown kind '" + kind + "'");
}

} // namespace gcrystal

#endif
