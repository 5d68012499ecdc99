#pragma once

#include "e6cs/characters.hpp"
#include "e6cs/lattice.hpp"
#include "e6cs/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace e6cs {

struct SeriesTerm {
    Weight weight{};
    std::int64_t mult = 0;
    friend bool operator==(const SeriesTerm&, const SeriesTerm&) = default;
};

/// Clebsch-Gordan series. Terms are in peeling order (increasing height of
/// top − weight) and carry positive multiplicities only.
struct CGSeries {
    std::vector<Weight> factors;
    std::vector<SeriesTerm> terms;

    Weight top() const;
    /// 0 when absent.
    std::int64_t multiplicity(const Weight& w) const;
};

/// Peels `product` against characters below `top`. Throws
/// NegativeMultiplicity or NonzeroResidual.
CGSeries decompose_product(const Polynomial& product, const Weight& top, std::vector<Weight> factors,
                           CharacterEngine& engine);

CGSeries tensor_decompose(const Weight& m, const Weight& n, CharacterEngine& engine);
CGSeries tensor_decompose(const std::vector<Weight>& factors, CharacterEngine& engine);

/// z^n read as the product of n_i copies of each fundamental character.
CGSeries monomial_decompose(const Exponent& n, CharacterEngine& engine);

/// mult of λ_k in λ_i⊗λ_j equals mult of λ_j in λ_k⊗λ_i*. Indices 1..6.
bool verify_orthogonality(int i, int j, int k, CharacterEngine& engine);

/// z1·χ_{nλ_k}. Requires n >= 1 and k in 1..6.
CGSeries series_z1_times_power(int k, int n, CharacterEngine& engine);

/// The closed-form terms expected for z1·χ_{nλ_k}, in peeling order.
std::vector<SeriesTerm> z1_power_closed_form(int k, int n);

/// Same weights and multiplicities, ignoring order.
bool same_terms(const std::vector<SeriesTerm>& a, const std::vector<SeriesTerm>& b);

/// Checks the highest-weight multiplicity, support and dimension balance.
/// Empty string when valid.
std::string series_defect(const CGSeries& s);

CGSeries conjugate_series(const CGSeries& s);

}  // namespace e6cs
