#include "e6cs/polynomial.hpp"

#include <stdexcept>

namespace e6cs {

int total_degree(const Exponent& e)
{
    int d = 0;
    for (int x : e)
        d += x;
    return d;
}

Polynomial::Polynomial(const Rational& c)
{
    if (c != 0)
        terms_.emplace(Exponent{}, c);
}

Polynomial::Polynomial(int c) : Polynomial(Rational(c)) {}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c)
{
    Polynomial p;
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::variable(int j)
{
    if (j < 1 || j > static_cast<int>(kRank))
        throw std::out_of_range("variable index " + std::to_string(j));
    Exponent e{};
    e[j - 1] = 1;
    return monomial(e);
}

Rational Polynomial::coefficient_of(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Polynomial::add_scaled(const Polynomial& p, const Rational& c)
{
    if (c == 0)
        return;
    for (const auto& [e, x] : p.terms_)
        add_term(e, x * c);
}

Polynomial& Polynomial::operator+=(const Polynomial& p)
{
    for (const auto& [e, x] : p.terms_)
        add_term(e, x);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& p)
{
    for (const auto& [e, x] : p.terms_)
        add_term(e, -x);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_)
        x *= c;
    return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q)
{
    const Polynomial& small = p.size() <= q.size() ? p : q;
    const Polynomial& large = p.size() <= q.size() ? q : p;
    Polynomial r;
    Rational t;
    for (const auto& [e1, c1] : small.terms_)
        for (const auto& [e2, c2] : large.terms_) {
            t = c1 * c2;
            r.add_term(e1 + e2, t);
        }
    return r;
}

Polynomial pow(const Polynomial& p, unsigned n)
{
    Polynomial result(1), base = p;
    while (n) {
        if (n & 1u)
            result = result * base;
        n >>= 1;
        if (n)
            base = base * base;
    }
    return result;
}

Polynomial partial_derivative(const Polynomial& p, int j)
{
    if (j < 1 || j > static_cast<int>(kRank))
        throw std::out_of_range("variable index " + std::to_string(j));
    const std::size_t v = static_cast<std::size_t>(j - 1);
    Polynomial r;
    for (const auto& [e, c] : p) {
        if (e[v] == 0)
            continue;
        Exponent d = e;
        d[v] -= 1;
        r.add_term(d, c * e[v]);
    }
    return r;
}

Rational evaluate(const Polynomial& p, const std::array<Rational, kRank>& point)
{
    Rational s = 0, t;
    for (const auto& [e, c] : p) {
        t = c;
        for (std::size_t i = 0; i < kRank; ++i)
            for (int k = 0; k < e[i]; ++k)
                t *= point[i];
        s += t;
    }
    return s;
}

Polynomial conjugate_poly(const Polynomial& p)
{
    Polynomial r;
    for (const auto& [e, c] : p)
        r.add_term(conjugate(e), c);
    return r;
}

bool has_integer_coefficients(const Polynomial& p)
{
    for (const auto& [e, c] : p)
        if (!is_integer(c))
            return false;
    return true;
}

}  // namespace e6cs
