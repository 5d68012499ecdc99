#include "e6cs/serialization.hpp"

#include "e6cs/errors.hpp"

#include "json_util.hpp"

namespace e6cs {

namespace detail {

using ojson = nlohmann::ordered_json;

ojson vec_json(const Vec6& v)
{
    ojson a = ojson::array();
    for (int x : v)
        a.push_back(x);
    return a;
}

Vec6 vec_from(const ojson& j)
{
    if (!j.is_array() || j.size() != kRank)
        throw ParseError("expected an array of six integers");
    Vec6 v{};
    for (std::size_t i = 0; i < kRank; ++i) {
        if (!j[i].is_number_integer())
            throw ParseError("expected an array of six integers");
        v[i] = j[i].get<int>();
    }
    return v;
}

ojson terms_json(const Polynomial& p)
{
    ojson a = ojson::array();
    for (const auto& [e, c] : p) {
        ojson t;
        t["exp"] = vec_json(e);
        t["coef"] = to_string(c);
        a.push_back(std::move(t));
    }
    return a;
}

Polynomial terms_from(const ojson& j)
{
    if (!j.is_array())
        throw ParseError("expected an array of terms");
    Polynomial p;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coef") || !t["coef"].is_string())
            throw ParseError("malformed term");
        Exponent e = vec_from(t["exp"]);
        if (!is_dominant(e))
            throw ParseError("negative exponent");
        Rational c = parse_rational(t["coef"].get<std::string>());
        if (c == 0)
            throw ParseError("zero coefficient stored");
        if (p.coefficient_of(e) != 0)
            throw ParseError("duplicate exponent " + format_weight(e));
        p.add_term(e, c);
    }
    return p;
}

ojson parse_json(std::string_view text)
{
    try {
        return ojson::parse(text.begin(), text.end());
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what());
    }
}

}  // namespace detail

using detail::ojson;

std::string polynomial_to_json(const Polynomial& p)
{
    return detail::terms_json(p).dump();
}

Polynomial polynomial_from_json(std::string_view text)
{
    return detail::terms_from(detail::parse_json(text));
}

std::string character_to_json(const Character& c)
{
    ojson j;
    j["weight"] = detail::vec_json(c.weight);
    j["terms"] = detail::terms_json(c.poly);
    j["method"] = std::string(to_string(c.method));
    j["version"] = CharacterCache::kVersion;
    return j.dump();
}

Character character_from_json(std::string_view text)
{
    ojson j = detail::parse_json(text);
    if (!j.is_object() || !j.contains("weight") || !j.contains("terms") || !j.contains("method")
        || !j.contains("version"))
        throw ParseError("character JSON needs weight, terms, method and version");
    if (!j["version"].is_number_integer() || j["version"].get<int>() != CharacterCache::kVersion)
        throw ParseError("unsupported character version");
    if (!j["method"].is_string())
        throw ParseError("method must be a string");
    Character c;
    c.weight = detail::vec_from(j["weight"]);
    if (!is_dominant(c.weight))
        throw ParseError("weight labels must be non-negative");
    c.poly = detail::terms_from(j["terms"]);
    if (!has_integer_coefficients(c.poly))
        throw ParseError("character coefficients must be integers");
    c.method = parse_method(j["method"].get<std::string>());
    return c;
}

std::string series_to_json(const CGSeries& s)
{
    ojson j;
    ojson f = ojson::array();
    for (const auto& w : s.factors)
        f.push_back(detail::vec_json(w));
    j["factors"] = std::move(f);
    ojson t = ojson::array();
    for (const auto& term : s.terms) {
        ojson x;
        x["weight"] = detail::vec_json(term.weight);
        x["mult"] = term.mult;
        t.push_back(std::move(x));
    }
    j["terms"] = std::move(t);
    return j.dump();
}

CGSeries series_from_json(std::string_view text)
{
    ojson j = detail::parse_json(text);
    if (!j.is_object() || !j.contains("factors") || !j.contains("terms") || !j["factors"].is_array()
        || !j["terms"].is_array())
        throw ParseError("series JSON needs factors and terms arrays");
    CGSeries s;
    for (const auto& f : j["factors"])
        s.factors.push_back(detail::vec_from(f));
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("weight") || !t.contains("mult") || !t["mult"].is_number_integer())
            throw ParseError("malformed series term");
        s.terms.push_back({detail::vec_from(t["weight"]), t["mult"].get<std::int64_t>()});
    }
    return s;
}

}  // namespace e6cs
