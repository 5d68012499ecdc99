#include "e6cs/tensor.hpp"

#include "e6cs/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace e6cs {

namespace {

void sort_peel_order(std::vector<SeriesTerm>& terms, const Weight& top)
{
    auto key = [&](const Weight& w) { return height(to_root_basis(top - w)); };
    std::sort(terms.begin(), terms.end(), [&](const SeriesTerm& a, const SeriesTerm& b) {
        int ha = key(a.weight), hb = key(b.weight);
        return ha != hb ? ha < hb : a.weight < b.weight;
    });
}

Weight scaled(const Weight& w, int n)
{
    Weight r = w;
    for (int& x : r)
        x *= n;
    return r;
}

}  // namespace

Weight CGSeries::top() const
{
    Weight t{};
    for (const auto& f : factors)
        t = t + f;
    return t;
}

std::int64_t CGSeries::multiplicity(const Weight& w) const
{
    for (const auto& t : terms)
        if (t.weight == w)
            return t.mult;
    return 0;
}

CGSeries decompose_product(const Polynomial& product, const Weight& top, std::vector<Weight> factors,
                           CharacterEngine& engine)
{
    CGSeries s;
    s.factors = std::move(factors);
    Polynomial residual = product;
    for (const Weight& mu : dominant_weights_below(top)) {
        Rational c = residual.coefficient_of(mu);
        if (c == 0)
            continue;
        if (!is_integer(c))
            throw InternalInconsistency("non-integer multiplicity " + to_string(c) + " for (" + format_weight(mu)
                                        + ")");
        if (c < 0)
            throw NegativeMultiplicity("multiplicity " + to_string(c) + " for (" + format_weight(mu) + ")");
        if (!c.get_num().fits_slong_p())
            throw InternalInconsistency("multiplicity overflow for (" + format_weight(mu) + ")");
        residual.add_scaled(engine.character(mu)->poly, -c);
        s.terms.push_back({mu, c.get_num().get_si()});
    }
    if (!residual.is_zero()) {
        const auto& [e, c] = *residual.begin();
        throw NonzeroResidual("residual of " + std::to_string(residual.size()) + " terms after peeling, leading "
                              + to_string(c) + "*z^(" + format_weight(e) + ")");
    }
    return s;
}

CGSeries tensor_decompose(const std::vector<Weight>& factors, CharacterEngine& engine)
{
    Polynomial product(1);
    Weight top{};
    for (const auto& f : factors) {
        product = product * engine.character(f)->poly;
        top = top + f;
    }
    return decompose_product(product, top, factors, engine);
}

CGSeries tensor_decompose(const Weight& m, const Weight& n, CharacterEngine& engine)
{
    return tensor_decompose(std::vector<Weight>{m, n}, engine);
}

CGSeries monomial_decompose(const Exponent& n, CharacterEngine& engine)
{
    if (!is_dominant(n))
        throw std::invalid_argument("negative exponent in (" + format_weight(n) + ")");
    std::vector<Weight> factors;
    for (int k = 1; k <= static_cast<int>(kRank); ++k)
        for (int r = 0; r < n[k - 1]; ++r)
            factors.push_back(fundamental_weight(k));
    return decompose_product(Polynomial::monomial(n), n, std::move(factors), engine);
}

bool verify_orthogonality(int i, int j, int k, CharacterEngine& engine)
{
    const Weight li = fundamental_weight(i), lj = fundamental_weight(j), lk = fundamental_weight(k);
    auto lhs = tensor_decompose(li, lj, engine).multiplicity(lk);
    auto rhs = tensor_decompose(lk, conjugate(li), engine).multiplicity(lj);
    return lhs == rhs;
}

CGSeries series_z1_times_power(int k, int n, CharacterEngine& engine)
{
    if (n < 1)
        throw std::invalid_argument("power must be positive");
    const Weight l1 = fundamental_weight(1);
    const Weight w = scaled(fundamental_weight(k), n);
    Polynomial product = Polynomial::variable(1) * engine.character(w)->poly;
    return decompose_product(product, l1 + w, {l1, w}, engine);
}

std::vector<SeriesTerm> z1_power_closed_form(int k, int n)
{
    if (n < 1)
        throw std::invalid_argument("power must be positive");
    const int p = n - 1;
    std::vector<Weight> w;
    switch (k) {
    case 1:
        w = {{n + 1, 0, 0, 0, 0, 0}, {p, 0, 1, 0, 0, 0}, {p, 0, 0, 0, 0, 1}};
        break;
    case 2:
        w = {{1, n, 0, 0, 0, 0}, {0, p, 0, 0, 1, 0}, {1, p, 0, 0, 0, 0}};
        break;
    case 3:
        w = {{1, 0, n, 0, 0, 0}, {0, 0, p, 1, 0, 0}, {0, 1, p, 0, 0, 0}, {1, 0, p, 0, 0, 1}};
        break;
    case 4:
        w = {{1, 0, 0, n, 0, 0}, {0, 1, 0, p, 1, 0}, {0, 0, 1, p, 0, 1}, {1, 1, 0, p, 0, 0}, {0, 0, 0, p, 1, 0}};
        break;
    case 5:
        w = {{1, 0, 0, 0, n, 0}, {0, 1, 0, 0, p, 1}, {0, 0, 1, 0, p, 0}, {0, 0, 0, 0, p, 1}};
        break;
    case 6:
        w = {{1, 0, 0, 0, 0, n}, {0, 1, 0, 0, 0, p}, {0, 0, 0, 0, 0, p}};
        break;
    default:
        throw std::out_of_range("fundamental index " + std::to_string(k));
    }
    std::vector<SeriesTerm> terms;
    for (const auto& x : w)
        terms.push_back({x, 1});
    sort_peel_order(terms, fundamental_weight(1) + scaled(fundamental_weight(k), n));
    return terms;
}

bool same_terms(const std::vector<SeriesTerm>& a, const std::vector<SeriesTerm>& b)
{
    auto key = [](std::vector<SeriesTerm> v) {
        std::sort(v.begin(), v.end(), [](const SeriesTerm& x, const SeriesTerm& y) { return x.weight < y.weight; });
        return v;
    };
    return key(a) == key(b);
}

std::string series_defect(const CGSeries& s)
{
    const Weight top = s.top();
    if (s.multiplicity(top) != 1)
        return "highest weight has multiplicity " + std::to_string(s.multiplicity(top));
    Integer expected = 1;
    for (const auto& f : s.factors)
        expected *= weyl_dimension(f);
    Integer total = 0;
    for (const auto& t : s.terms) {
        if (t.mult <= 0)
            return "non-positive multiplicity for (" + format_weight(t.weight) + ")";
        RootVector d;
        try {
            d = to_root_basis(top - t.weight);
        } catch (const NonIntegral&) {
            return "(" + format_weight(t.weight) + ") is in the wrong root class";
        }
        if (!is_dominant(d) || !is_dominant(t.weight))
            return "(" + format_weight(t.weight) + ") is not a dominant weight below the top";
        total += weyl_dimension(t.weight) * Integer(static_cast<long>(t.mult));
    }
    if (total != expected)
        return "dimension balance " + total.get_str() + " != " + expected.get_str();
    return {};
}

CGSeries conjugate_series(const CGSeries& s)
{
    CGSeries c;
    for (const auto& f : s.factors)
        c.factors.push_back(conjugate(f));
    for (const auto& t : s.terms)
        c.terms.push_back({conjugate(t.weight), t.mult});
    sort_peel_order(c.terms, c.top());
    return c;
}

}  // namespace e6cs
