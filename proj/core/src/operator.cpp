#include "e6cs/operator.hpp"

#include "e6cs/errors.hpp"
#include "json_util.hpp"

#include <algorithm>

namespace e6cs {

namespace detail {
extern const std::string_view kOperatorTablesJson;
}

namespace {

std::size_t index_from(const detail::ojson& j)
{
    if (!j.is_number_integer())
        throw ParseError("table index must be an integer");
    int i = j.get<int>();
    if (i < 1 || i > static_cast<int>(kRank))
        throw ParseError("table index out of range: " + std::to_string(i));
    return static_cast<std::size_t>(i - 1);
}

void check_index(int j)
{
    if (j < 1 || j > static_cast<int>(kRank))
        throw std::out_of_range("operator index " + std::to_string(j));
}

}  // namespace

const OperatorTables& OperatorTables::builtin()
{
    static const OperatorTables t = from_json(detail::kOperatorTablesJson);
    return t;
}

OperatorTables OperatorTables::from_json(std::string_view text)
{
    auto doc = detail::parse_json(text);
    if (!doc.is_array())
        throw ParseError("operator table file must be a JSON array");
    OperatorTables t;
    std::array<std::array<bool, kRank>, kRank> seen_a{};
    std::array<bool, kRank> seen_b{};
    for (const auto& rec : doc) {
        if (!rec.is_object() || !rec.contains("kind") || !rec.contains("indices") || !rec.contains("terms")
            || !rec["indices"].is_array())
            throw ParseError("malformed operator table record");
        const auto& idx = rec["indices"];
        std::string kind = rec["kind"].is_string() ? rec["kind"].get<std::string>() : "";
        Polynomial p = detail::terms_from(rec["terms"]);
        if (kind == "a") {
            if (idx.size() != 2)
                throw ParseError("a-record needs two indices");
            std::size_t j = index_from(idx[0]), k = index_from(idx[1]);
            if (j > k)
                std::swap(j, k);
            if (seen_a[j][k])
                throw ParseError("duplicate a_" + std::to_string(j + 1) + std::to_string(k + 1));
            seen_a[j][k] = true;
            t.a_[j][k] = p;
            t.a_[k][j] = std::move(p);
        } else if (kind == "b") {
            if (idx.size() != 1)
                throw ParseError("b-record needs one index");
            std::size_t j = index_from(idx[0]);
            if (seen_b[j])
                throw ParseError("duplicate b_" + std::to_string(j + 1));
            seen_b[j] = true;
            t.b_[j] = std::move(p);
        } else {
            throw ParseError("unknown operator table kind '" + kind + "'");
        }
    }
    for (std::size_t j = 0; j < kRank; ++j) {
        if (!seen_b[j])
            throw ParseError("missing b_" + std::to_string(j + 1));
        for (std::size_t k = j; k < kRank; ++k)
            if (!seen_a[j][k])
                throw ParseError("missing a_" + std::to_string(j + 1) + std::to_string(k + 1));
    }
    return t;
}

const Polynomial& OperatorTables::a(int j, int k) const
{
    check_index(j);
    check_index(k);
    return a_[j - 1][k - 1];
}

const Polynomial& OperatorTables::b(int j) const
{
    check_index(j);
    return b_[j - 1];
}

Rational eigenvalue(const Weight& m, const Rational& kappa)
{
    return 2 * inner_product(m, m) + 4 * kappa * inner_product(m, weyl_vector());
}

Energy energy(const Weight& m, const Rational& kappa)
{
    const auto& inv = inverse_cartan();
    // λ + κρ has Dynkin labels m_i + κ.
    std::array<Rational, kRank> shifted;
    for (std::size_t i = 0; i < kRank; ++i)
        shifted[i] = m[i] + kappa;
    Rational total = 0;
    for (std::size_t i = 0; i < kRank; ++i)
        for (std::size_t j = 0; j < kRank; ++j)
            total += inv[i][j] * shifted[i] * shifted[j];
    total *= 2;
    Rational ground = 2 * inner_product(weyl_vector(), weyl_vector()) * kappa * kappa;
    return {total, ground};
}

Polynomial apply_delta(const Polynomial& p, const OperatorTables& tables)
{
    Polynomial out;
    Rational f;
    for (const auto& [n, c] : p) {
        for (int j = 1; j <= static_cast<int>(kRank); ++j) {
            const int nj = n[j - 1];
            if (nj == 0)
                continue;
            for (int k = j; k <= static_cast<int>(kRank); ++k) {
                const int nk = n[k - 1];
                // full double sum: the (j,k) and (k,j) terms coincide
                long factor = (j == k) ? static_cast<long>(nj) * (nj - 1) : 2L * nj * nk;
                if (factor == 0)
                    continue;
                Exponent base = n;
                base[j - 1] -= 1;
                base[k - 1] -= 1;
                for (const auto& [e, a] : tables.a(j, k)) {
                    f = c * a;
                    f *= factor;
                    out.add_term(base + e, f);
                }
            }
            Exponent base = n;
            base[j - 1] -= 1;
            for (const auto& [e, b] : tables.b(j)) {
                f = c * b;
                f *= nj;
                out.add_term(base + e, f);
            }
        }
    }
    return out;
}

std::vector<ShiftTerm> monomial_expansion(const Exponent& n, const OperatorTables& tables)
{
    std::vector<ShiftTerm> out;
    for (const auto& [e, k] : apply_delta(Polynomial::monomial(n), tables))
        out.push_back({to_root_basis(n - e), k});
    std::sort(out.begin(), out.end(), [](const ShiftTerm& x, const ShiftTerm& y) {
        int hx = height(x.beta), hy = height(y.beta);
        return hx != hy ? hx < hy : x.beta < y.beta;
    });
    return out;
}

}  // namespace e6cs
