#pragma once

#include "e6cs/lattice.hpp"
#include "e6cs/polynomial.hpp"
#include "e6cs/rational.hpp"

#include <array>
#include <string_view>
#include <utility>
#include <vector>

namespace e6cs {

/// Coefficient polynomials of the κ=1 operator
///   Δ = Σ_{j,k} a_jk ∂_j ∂_k + Σ_j b_j ∂_j
/// with a_kj = a_jk. Immutable once built.
class OperatorTables {
public:
    /// Tables shipped with the library.
    static const OperatorTables& builtin();

    /// Reads the table file format: an array of
    /// {"kind":"a"|"b","indices":[...],"terms":[{"exp":[6],"coef":"p/q"}]}.
    /// Every a_jk (j<=k) and b_j must appear exactly once. Throws ParseError.
    static OperatorTables from_json(std::string_view text);

    /// j, k in 1..6, either order.
    const Polynomial& a(int j, int k) const;
    const Polynomial& b(int j) const;

private:
    OperatorTables() = default;
    std::array<std::array<Polynomial, kRank>, kRank> a_;
    std::array<Polynomial, kRank> b_;
};

/// 2(λ,λ) + 4κ(λ,ρ) for λ = Σ m_i λ_i.
Rational eigenvalue(const Weight& m, const Rational& kappa);

struct Energy {
    Rational total;   ///< 2(λ+κρ, λ+κρ)
    Rational ground;  ///< 2(ρ,ρ)κ²
};
Energy energy(const Weight& m, const Rational& kappa);

Polynomial apply_delta(const Polynomial& p, const OperatorTables& tables = OperatorTables::builtin());

struct ShiftTerm {
    RootVector beta;
    Rational k;
    friend bool operator==(const ShiftTerm&, const ShiftTerm&) = default;
};

/// Δ z^n = Σ k_β z^(n−β), with β in the simple-root basis. Ordered by
/// height of β, then lexicographically. Throws NonIntegral if some β is
/// outside the root lattice.
std::vector<ShiftTerm> monomial_expansion(const Exponent& n,
                                          const OperatorTables& tables = OperatorTables::builtin());

}  // namespace e6cs
