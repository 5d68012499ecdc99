#include "e6cs/rational.hpp"

#include "e6cs/errors.hpp"

#include <cctype>

namespace e6cs {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Integer to_integer(std::string_view s)
{
    if (s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw ParseError("not a rational: '" + std::string(text) + "'");
    Rational q(to_integer(num));
    if (slash != std::string_view::npos) {
        std::string_view den = text.substr(slash + 1);
        if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
            throw ParseError("not a rational: '" + std::string(text) + "'");
        Integer d = to_integer(den);
        if (d == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        q = Rational(q.get_num(), d);
        q.canonicalize();
    }
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

}  // namespace e6cs
