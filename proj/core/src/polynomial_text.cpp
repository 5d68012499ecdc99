#include "e6cs/errors.hpp"
#include "e6cs/polynomial.hpp"

#include <cctype>

namespace e6cs {

namespace {

std::string monomial_text(const Exponent& e)
{
    std::string s;
    for (std::size_t i = 0; i < kRank; ++i) {
        if (e[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += 'z';
        s += std::to_string(i + 1);
        if (e[i] > 1) {
            s += '^';
            s += std::to_string(e[i]);
        }
    }
    return s;
}

// Recursive descent over
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := ('-'|'+') unary | power
//   power  := atom ('^' digits)?
//   atom   := digits | 'z' digit | '(' expr ')'
class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("polynomial at column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        return std::string(s_.substr(start, pos_ - start));
    }

    Polynomial expr()
    {
        Polynomial p = term();
        for (;;) {
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                return p;
        }
    }

    Polynomial term()
    {
        Polynomial p = unary();
        for (;;) {
            if (accept('*')) {
                p = p * unary();
            } else if (accept('/')) {
                Polynomial d = unary();
                if (d.is_zero())
                    fail("division by zero");
                if (d.size() != 1 || total_degree(d.begin()->first) != 0)
                    fail("division by a non-constant");
                p *= 1 / d.begin()->second;
            } else {
                return p;
            }
        }
    }

    Polynomial unary()
    {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    Polynomial power()
    {
        Polynomial base = atom();
        if (accept('^')) {
            skip();
            std::string d = digits();
            if (d.size() > 4)
                fail("exponent too large");
            return pow(base, static_cast<unsigned>(std::stoul(d)));
        }
        return base;
    }

    Polynomial atom()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')'))
                fail("expected ')'");
            return p;
        }
        if (c == 'z') {
            ++pos_;
            if (pos_ >= s_.size() || s_[pos_] < '1' || s_[pos_] > '6')
                fail("expected a variable z1..z6");
            int j = s_[pos_++] - '0';
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected a variable z1..z6");
            return Polynomial::variable(j);
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Polynomial(Rational(Integer(digits(), 10)));
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Polynomial& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p) {
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string mono = monomial_text(e);
        if (mono.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += to_string(mag) + "*" + mono;
    }
    return out;
}

Polynomial parse_polynomial(std::string_view text)
{
    return Parser(text).parse();
}

}  // namespace e6cs
