#include "e6cs/characters.hpp"

#include "e6cs/errors.hpp"

#include <stdexcept>

namespace e6cs {

std::string_view to_string(Method m)
{
    switch (m) {
    case Method::recursion:
        return "recursion";
    case Method::annihilator:
        return "annihilator";
    case Method::golden:
        return "golden";
    }
    return "?";
}

Method parse_method(std::string_view name)
{
    if (name == "recursion")
        return Method::recursion;
    if (name == "annihilator")
        return Method::annihilator;
    if (name == "golden")
        return Method::golden;
    throw ParseError("unknown method '" + std::string(name) + "'");
}

Character character_recursion(const Weight& m, const OperatorTables& tables)
{
    const std::vector<Weight> cand = dominant_weights_below(m);
    std::map<Exponent, std::size_t> pos;
    for (std::size_t i = 0; i < cand.size(); ++i)
        pos.emplace(cand[i], i);

    const Rational eps_m = eigenvalue(m, 1);
    std::vector<Rational> acc(cand.size()), coef(cand.size());
    Rational t;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        const Exponent& e = cand[i];
        if (i == 0) {
            coef[i] = 1;
        } else {
            Rational gap = eps_m - eigenvalue(e, 1);
            if (gap == 0)
                throw ZeroDenominator("eigenvalues of (" + format_weight(m) + ") and (" + format_weight(e)
                                      + ") coincide");
            if (acc[i] == 0)
                continue;
            coef[i] = acc[i] / gap;
        }
        // push c_e·Δz^e onto the lower exponents
        for (const auto& [f, k] : apply_delta(Polynomial::monomial(e), tables)) {
            if (f == e)
                continue;
            auto it = pos.find(f);
            if (it == pos.end() || it->second <= i)
                throw InternalInconsistency("operator maps z^(" + format_weight(e) + ") outside the dominance cone of ("
                                            + format_weight(m) + ")");
            t = coef[i] * k;
            acc[it->second] += t;
        }
    }
    Character c{m, {}, Method::recursion};
    for (std::size_t i = 0; i < cand.size(); ++i)
        c.poly.add_term(cand[i], coef[i]);
    return c;
}

Character character_annihilator(const Weight& m, const OperatorTables& tables)
{
    const std::vector<Weight> cand = dominant_weights_below(m);
    Polynomial p = Polynomial::monomial(m);
    for (std::size_t i = 1; i < cand.size(); ++i) {
        Polynomial d = apply_delta(p, tables);
        d.add_scaled(p, -eigenvalue(cand[i], 1));
        p = std::move(d);
    }
    Rational lead = p.coefficient_of(m);
    if (lead == 0)
        throw DegenerateScale("annihilator product kills the leading term of (" + format_weight(m) + ")");
    p *= 1 / lead;
    return {m, std::move(p), Method::annihilator};
}

std::string character_defect(const Character& c, const OperatorTables& tables)
{
    const Weight& m = c.weight;
    if (!is_dominant(m))
        return "weight is not dominant";
    if (c.poly.coefficient_of(m) != 1)
        return "leading coefficient is " + to_string(c.poly.coefficient_of(m)) + ", not 1";
    if (!has_integer_coefficients(c.poly))
        return "non-integer coefficient";
    for (const auto& [e, x] : c.poly) {
        RootVector d;
        try {
            d = to_root_basis(m - e);
        } catch (const NonIntegral&) {
            return "exponent (" + format_weight(e) + ") is not in the root class of the weight";
        }
        if (!is_dominant(d))
            return "exponent (" + format_weight(e) + ") is not below the weight";
    }
    Polynomial residual = apply_delta(c.poly, tables);
    residual.add_scaled(c.poly, -eigenvalue(m, 1));
    if (!residual.is_zero())
        return "not an eigenvector of the operator";
    std::array<Rational, kRank> dims;
    for (int k = 1; k <= static_cast<int>(kRank); ++k)
        dims[k - 1] = Rational(weyl_dimension(fundamental_weight(k)));
    Rational value = evaluate(c.poly, dims);
    Integer expected = weyl_dimension(m);
    if (value != Rational(expected))
        return "evaluates to " + to_string(value) + " at the fundamental dimensions, expected " + expected.get_str();
    return {};
}

CharacterEngine::CharacterEngine(std::shared_ptr<const CharacterCache> disk, Method method,
                                 const OperatorTables& tables)
    : disk_(std::move(disk)), method_(method), tables_(tables)
{
    if (method == Method::golden)
        throw std::invalid_argument("golden is not a computation method");
}

std::shared_ptr<const Character> CharacterEngine::character(const Weight& m)
{
    {
        std::lock_guard lock(mutex_);
        auto it = memory_.find(m);
        if (it != memory_.end())
            return it->second;
    }
    std::shared_ptr<const Character> result;
    if (disk_) {
        if (auto hit = disk_->load(m, tables_))
            result = std::make_shared<const Character>(std::move(*hit));
    }
    if (!result) {
        Character c = method_ == Method::annihilator ? character_annihilator(m, tables_)
                                                    : character_recursion(m, tables_);
        if (auto why = character_defect(c, tables_); !why.empty())
            throw InternalInconsistency("computed character (" + format_weight(m) + ") invalid: " + why);
        ++computations_;
        if (disk_)
            disk_->store(c);
        result = std::make_shared<const Character>(std::move(c));
    }
    std::lock_guard lock(mutex_);
    memory_[m] = result;
    return result;
}

}  // namespace e6cs
