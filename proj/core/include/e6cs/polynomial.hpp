#pragma once

#include "e6cs/lattice.hpp"
#include "e6cs/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

namespace e6cs {

/// Powers (n1..n6) of the monomial z1^n1 ... z6^n6.
using Exponent = Vec6;

int total_degree(const Exponent& e);

/// Graded lexicographic order, largest first.
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const
    {
        int da = total_degree(a), db = total_degree(b);
        if (da != db)
            return da > db;
        return a > b;
    }
};

/// Sparse polynomial in z1..z6 with exact rational coefficients. No zero
/// coefficient is ever stored.
class Polynomial {
public:
    using Terms = std::map<Exponent, Rational, GrlexGreater>;
    using const_iterator = Terms::const_iterator;

    Polynomial() = default;
    Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
    Polynomial(int c);              // NOLINT

    static Polynomial monomial(const Exponent& e, const Rational& c = 1);
    /// z_j for j in 1..6.
    static Polynomial variable(int j);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const Terms& terms() const { return terms_; }

    /// Stored coefficient or 0.
    Rational coefficient_of(const Exponent& e) const;
    /// Adds c·z^e in place, dropping the term if it cancels.
    void add_term(const Exponent& e, const Rational& c);
    /// this += c·p
    void add_scaled(const Polynomial& p, const Rational& c);

    Polynomial& operator+=(const Polynomial& p);
    Polynomial& operator-=(const Polynomial& p);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator-(Polynomial p) { return p *= -1; }
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.terms_ == q.terms_; }

private:
    Terms terms_;
};

Polynomial pow(const Polynomial& p, unsigned n);

/// ∂/∂z_j for j in 1..6.
Polynomial partial_derivative(const Polynomial& p, int j);

Rational evaluate(const Polynomial& p, const std::array<Rational, kRank>& point);

/// Swaps z1<->z6 and z3<->z5.
Polynomial conjugate_poly(const Polynomial& p);

bool has_integer_coefficients(const Polynomial& p);

/// Graded-lex text form, e.g. "224/3*z1^2 - 8*z3 - 40*z6". Zero prints "0".
std::string to_string(const Polynomial& p);

/// Parses an expression in z1..z6 with rational literals, + - * / ^ and
/// parentheses. Division is only allowed by constants. Throws ParseError.
Polynomial parse_polynomial(std::string_view text);

}  // namespace e6cs
