#include "e6cs/golden.hpp"

#include "e6cs/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace e6cs::golden {

namespace data {
extern const std::string_view kCharacters;
extern const std::string_view kSeries;
extern const std::string_view kDimensions;
extern const std::string_view kErrata;
}  // namespace data

namespace {

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

template <class F>
void for_each_record(std::string_view text, F&& f)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        try {
            f(t);
        } catch (const ParseError& ex) {
            throw ParseError("line " + std::to_string(no) + ": " + ex.what());
        }
    }
}

std::vector<std::string> words(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;)
        out.push_back(w);
    return out;
}

SeriesTerm parse_term(const std::string& tok)
{
    auto colon = tok.find(':');
    if (colon == std::string::npos)
        throw ParseError("expected <weight>:<multiplicity>, got '" + tok + "'");
    Rational m = parse_rational(tok.substr(colon + 1));
    if (!is_integer(m) || m <= 0)
        throw ParseError("bad multiplicity in '" + tok + "'");
    return {parse_weight(tok.substr(0, colon)), m.get_num().get_si()};
}

std::vector<std::string> split_bar(const std::string& s)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto bar = s.find('|', start);
        out.push_back(trim(std::string_view(s).substr(start, bar - start)));
        if (bar == std::string::npos)
            return out;
        start = bar + 1;
    }
}

}  // namespace

std::vector<CharacterEntry> parse_characters(std::string_view text)
{
    std::vector<CharacterEntry> out;
    for_each_record(text, [&](const std::string& line) {
        auto colon = line.find(" : ");
        if (colon == std::string::npos)
            throw ParseError("expected '<source> <weight> : <polynomial>'");
        auto head = words(line.substr(0, colon));
        if (head.size() != 2)
            throw ParseError("expected '<source> <weight> : <polynomial>'");
        out.push_back({head[0], parse_weight(head[1]), parse_polynomial(line.substr(colon + 3))});
    });
    return out;
}

std::vector<SeriesEntry> parse_series(std::string_view text)
{
    std::vector<SeriesEntry> out;
    for_each_record(text, [&](const std::string& line) {
        auto eq = line.find(" = ");
        if (eq == std::string::npos)
            throw ParseError("expected '<source> <factors> = <terms>'");
        auto head = words(line.substr(0, eq));
        if (head.size() < 2)
            throw ParseError("series needs a source and at least one factor");
        SeriesEntry s;
        s.source = head[0];
        for (std::size_t i = 1; i < head.size(); ++i)
            s.factors.push_back(parse_weight(head[i]));
        for (const auto& tok : words(line.substr(eq + 3)))
            s.terms.push_back(parse_term(tok));
        out.push_back(std::move(s));
    });
    return out;
}

std::vector<DimensionEntry> parse_dimensions(std::string_view text)
{
    std::vector<DimensionEntry> out;
    for_each_record(text, [&](const std::string& line) {
        auto w = words(line);
        if (w.size() != 3)
            throw ParseError("expected '<source> <weight> <dimension>'");
        Rational d = parse_rational(w[2]);
        if (!is_integer(d) || d <= 0)
            throw ParseError("bad dimension '" + w[2] + "'");
        out.push_back({w[0], parse_weight(w[1]), d.get_num()});
    });
    return out;
}

std::vector<Erratum> parse_errata(std::string_view text)
{
    std::vector<Erratum> out;
    for_each_record(text, [&](const std::string& line) {
        auto f = split_bar(line);
        if (f.size() != 4 || (f[0] != "dimension" && f[0] != "series"))
            throw ParseError("expected '<kind> | <key> | <printed> | <corrected>'");
        out.push_back({f[0], f[1], f[2], f[3]});
    });
    return out;
}

std::vector<CharacterEntry> characters()
{
    return parse_characters(data::kCharacters);
}

std::vector<SeriesEntry> series()
{
    return parse_series(data::kSeries);
}

std::vector<DimensionEntry> dimensions()
{
    return parse_dimensions(data::kDimensions);
}

std::vector<Erratum> errata()
{
    return parse_errata(data::kErrata);
}

std::string series_key(const std::vector<Weight>& factors)
{
    std::string k;
    for (const auto& f : factors) {
        if (!k.empty())
            k += ' ';
        k += format_weight(f);
    }
    return k;
}

int apply_errata(std::vector<SeriesEntry>& s, const std::vector<Erratum>& e)
{
    int applied = 0;
    for (const auto& fix : e) {
        if (fix.kind != "series")
            continue;
        SeriesTerm from = parse_term(fix.printed), to = parse_term(fix.corrected);
        bool done = false;
        for (auto& entry : s) {
            if (series_key(entry.factors) != fix.key)
                continue;
            for (auto& t : entry.terms)
                if (t == from) {
                    t = to;
                    done = true;
                    break;
                }
        }
        if (!done)
            throw ParseError("erratum for '" + fix.key + "' does not match the series data");
        ++applied;
    }
    return applied;
}

int apply_errata(std::vector<DimensionEntry>& d, const std::vector<Erratum>& e)
{
    int applied = 0;
    for (const auto& fix : e) {
        if (fix.kind != "dimension")
            continue;
        Weight w = parse_weight(fix.key);
        Integer from(fix.printed, 10), to(fix.corrected, 10);
        bool done = false;
        for (auto& entry : d)
            if (entry.weight == w && entry.dim == from) {
                entry.dim = to;
                done = true;
            }
        if (!done)
            throw ParseError("erratum for '" + fix.key + "' does not match the dimension data");
        ++applied;
    }
    return applied;
}

Exponent monomial_of(const std::vector<Weight>& factors)
{
    Exponent e{};
    for (const auto& f : factors) {
        int nonzero = 0;
        for (std::size_t i = 0; i < kRank; ++i)
            nonzero += f[i] != 0;
        if (nonzero != 1 || height(f) != 1)
            throw std::invalid_argument("(" + format_weight(f) + ") is not fundamental");
        e = e + f;
    }
    return e;
}

}  // namespace e6cs::golden
