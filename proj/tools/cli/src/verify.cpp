#include "e6cs/verify.hpp"

#include "e6cs/e6cs.hpp"
#include "e6cs/golden.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace e6cs::verify {

namespace {

std::string series_text(const std::vector<SeriesTerm>& terms)
{
    std::string s;
    for (const auto& t : terms) {
        if (!s.empty())
            s += ' ';
        s += format_weight(t.weight) + ":" + std::to_string(t.mult);
    }
    return s;
}

// Terms of `a` missing from or differing in `b`, for failure messages.
std::string series_diff(const std::vector<SeriesTerm>& expected, const std::vector<SeriesTerm>& computed)
{
    std::map<Weight, std::pair<std::int64_t, std::int64_t>> m;
    for (const auto& t : expected)
        m[t.weight].first = t.mult;
    for (const auto& t : computed)
        m[t.weight].second = t.mult;
    std::string s;
    for (const auto& [w, p] : m)
        if (p.first != p.second)
            s += " (" + format_weight(w) + ") expected " + std::to_string(p.first) + " computed "
                 + std::to_string(p.second) + ";";
    return s;
}

std::vector<Weight> weights_up_to(int total)
{
    std::vector<Weight> out;
    Weight w{};
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == kRank) {
            out.push_back(w);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            w[i] = x;
            rec(i + 1, left - x);
        }
        w[i] = 0;
    };
    rec(0, total);
    return out;
}

class Builder {
public:
    explicit Builder(Report& r) : r_(r) {}

    void check(bool ok, std::string name, std::string detail = {})
    {
        r_.checks.push_back({ok, std::move(name), std::move(detail)});
    }

    // Runs f, turning engine exceptions into a failed check.
    template <class F>
    void guarded(const std::string& name, F&& f)
    {
        try {
            f();
        } catch (const std::exception& e) {
            check(false, name, std::string("error: ") + e.what());
        }
    }

private:
    Report& r_;
};

void suite_roots(Builder& b, bool use_errata, Report& r)
{
    const auto& roots = positive_roots();
    b.check(roots.size() == 36, "positive roots", std::to_string(roots.size()) + " (expected 36)");

    std::vector<int> hist(12, 0);
    for (const auto& a : roots)
        if (height(a) >= 1 && height(a) <= 11)
            ++hist[height(a)];
    const std::vector<int> expected{0, 6, 5, 5, 5, 4, 3, 3, 2, 1, 1, 1};
    std::string h;
    for (int i = 1; i <= 11; ++i)
        h += (i > 1 ? "," : "") + std::to_string(hist[i]);
    b.check(hist == expected, "height histogram", h + " (expected 6,5,5,5,4,3,3,2,1,1,1)");
    b.check(roots.back() == RootVector{1, 2, 2, 3, 2, 1}, "highest root", format_weight(roots.back()));

    RootVector rho = weyl_vector_in_root_basis();
    b.check(rho == RootVector{8, 11, 15, 21, 15, 8} && to_root_basis(weyl_vector()) == rho, "weyl vector",
            format_weight(rho));
    Rational rr = inner_product(weyl_vector(), weyl_vector());
    Energy e0 = energy(Weight{}, 1);
    b.check(rr == 78 && e0.ground == 156 && e0.total == 156, "ground energy",
            "(rho,rho) = " + to_string(rr) + ", E0(1) = " + to_string(e0.ground));

    const auto& a = cartan_matrix();
    const auto& inv = inverse_cartan();
    bool identity = true;
    for (std::size_t i = 0; i < kRank; ++i)
        for (std::size_t j = 0; j < kRank; ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < kRank; ++k)
                s += a[i][k] * inv[k][j];
            identity = identity && s == (i == j ? 1 : 0);
        }
    b.check(identity, "cartan inverse");

    auto dims = golden::dimensions();
    if (use_errata)
        r.errata_applied += golden::apply_errata(dims, golden::errata());
    for (const auto& d : dims)
        b.guarded("dimension " + format_weight(d.weight), [&] {
            Integer got = weyl_dimension(d.weight);
            b.check(got == d.dim, d.source + " dimension (" + format_weight(d.weight) + ")",
                    "expected " + d.dim.get_str() + " computed " + got.get_str());
        });
}

std::vector<golden::SeriesEntry> golden_series(const std::string& source, bool use_errata, Report& r)
{
    std::vector<golden::SeriesEntry> out;
    for (auto& s : golden::series())
        if (s.source == source)
            out.push_back(std::move(s));
    if (use_errata) {
        std::vector<golden::Erratum> relevant;
        for (const auto& e : golden::errata())
            if (std::any_of(out.begin(), out.end(),
                            [&](const golden::SeriesEntry& s) { return golden::series_key(s.factors) == e.key; }))
                relevant.push_back(e);
        r.errata_applied += golden::apply_errata(out, relevant);
    }
    return out;
}

void suite_tables(Builder& b, CharacterEngine& eng, bool use_errata, Report& r)
{
    const std::vector<Rational> eps{Rational(104, 3), 48, Rational(200, 3), 96, Rational(200, 3), Rational(104, 3)};
    for (int j = 1; j <= 6; ++j) {
        Rational e = eigenvalue(fundamental_weight(j), 1);
        Polynomial z = Polynomial::variable(j);
        Polynomial got = apply_delta(z, eng.tables());
        b.check(e == eps[j - 1] && got == e * z, "b_" + std::to_string(j),
                "delta z" + std::to_string(j) + " = " + to_string(got) + ", expected " + to_string(eps[j - 1] * z));
    }
    for (const auto& s : golden_series("quadratic", use_errata, r)) {
        const std::string name = "a-table (" + golden::series_key(s.factors) + ")";
        b.guarded(name, [&] {
            Polynomial product = Polynomial::monomial(golden::monomial_of(s.factors));
            Polynomial sum, expansion;
            for (const auto& t : s.terms) {
                const Polynomial& chi = eng.character(t.weight)->poly;
                sum.add_scaled(chi, t.mult);
                expansion.add_scaled(chi, eigenvalue(t.weight, 1) * t.mult);
            }
            Polynomial got = apply_delta(product, eng.tables());
            bool ok = sum == product && got == expansion;
            std::string detail;
            if (!ok)
                detail = "delta = " + to_string(got) + "; expected " + to_string(expansion);
            b.check(ok, name, detail);
        });
    }
    b.guarded("monomial shifts", [&] {
        std::size_t n = 0;
        for (const auto& e : weights_up_to(3)) {
            monomial_expansion(e, eng.tables());
            ++n;
        }
        b.check(true, "monomial shifts", std::to_string(n) + " monomials of degree <= 3 shift within the root lattice");
    });
}

void check_characters(Builder& b, CharacterEngine& eng, const std::string& source, bool both_methods)
{
    for (const auto& g : golden::characters()) {
        if (g.source != source)
            continue;
        const std::string name = "character (" + format_weight(g.weight) + ")";
        b.guarded(name, [&] {
            std::vector<Character> got;
            if (both_methods) {
                got.push_back(character_recursion(g.weight, eng.tables()));
                got.push_back(character_annihilator(g.weight, eng.tables()));
            } else {
                got.push_back(*eng.character(g.weight));
            }
            for (const auto& c : got) {
                std::string why = character_defect(c, eng.tables());
                bool ok = why.empty() && c.poly == g.poly;
                std::string detail = std::string(to_string(c.method)) + ", " + std::to_string(c.poly.size()) + " terms";
                if (!why.empty())
                    detail += "; " + why;
                else if (!ok)
                    detail += "; expected " + to_string(g.poly) + "; computed " + to_string(c.poly);
                b.check(ok, name, detail);
            }
        });
    }
}

void check_series(Builder& b, CharacterEngine& eng, const std::vector<golden::SeriesEntry>& entries)
{
    for (const auto& s : entries) {
        const std::string name = "series (" + golden::series_key(s.factors) + ")";
        b.guarded(name, [&] {
            CGSeries got = tensor_decompose(s.factors, eng);
            std::string why = series_defect(got);
            bool ok = why.empty() && same_terms(got.terms, s.terms);
            std::string detail = std::to_string(got.terms.size()) + " terms";
            if (!why.empty())
                detail += "; " + why;
            else if (!ok)
                detail += ";" + series_diff(s.terms, got.terms) + " expected " + series_text(s.terms)
                          + "; computed " + series_text(got.terms);
            b.check(ok, name, detail);
        });
    }
}

void suite_quadratic(Builder& b, CharacterEngine& eng, bool use_errata, Report& r)
{
    check_characters(b, eng, "second-order", false);
    check_series(b, eng, golden_series("quadratic", use_errata, r));
}

void suite_appendix_a(Builder& b, CharacterEngine& eng)
{
    check_characters(b, eng, "appendix-a", true);
}

void suite_appendix_b(Builder& b, CharacterEngine& eng, bool use_errata, Report& r)
{
    auto cubic = golden_series("cubic", use_errata, r);
    check_series(b, eng, cubic);
    for (const auto& s : cubic)
        if (golden::monomial_of(s.factors) == Exponent{0, 0, 0, 3, 0, 0})
            b.check(true, "z4^3 term count", std::to_string(s.terms.size()) + " printed terms");
}

void suite_dims(Builder& b, CharacterEngine& eng)
{
    const CharacterCache* disk = eng.disk();
    std::vector<Weight> entries = disk ? disk->list() : std::vector<Weight>{};
    for (const auto& w : entries) {
        const std::string name = "cached (" + format_weight(w) + ")";
        b.guarded(name, [&] {
            auto c = disk->load(w, eng.tables());
            b.check(c.has_value(), name, c ? "dimension " + weyl_dimension(w).get_str() : "vanished");
        });
    }
    b.check(true, "cache entries", std::to_string(entries.size()) + " validated");
}

void suite_duality(Builder& b, CharacterEngine& eng)
{
    auto weights = weights_up_to(3);
    std::size_t chars = 0, products = 0;
    for (const auto& m : weights) {
        b.guarded("duality (" + format_weight(m) + ")", [&] {
            bool ok = conjugate_poly(eng.character(m)->poly) == eng.character(conjugate(m))->poly
                      && weyl_dimension(m) == weyl_dimension(conjugate(m));
            if (!ok)
                b.check(false, "duality (" + format_weight(m) + ")");
            ++chars;
        });
    }
    b.check(chars == weights.size(), "conjugate characters", std::to_string(chars) + " weights with sum <= 3");

    for (std::size_t i = 0; i < weights.size(); ++i)
        for (std::size_t j = i; j < weights.size(); ++j) {
            const Weight &m = weights[i], &n = weights[j];
            if (height(m) == 0 || height(n) == 0 || height(m) + height(n) > 3)
                continue;
            const std::string name = "equivariance (" + format_weight(m) + ")x(" + format_weight(n) + ")";
            b.guarded(name, [&] {
                CGSeries s = tensor_decompose(m, n, eng);
                CGSeries c = tensor_decompose(conjugate(m), conjugate(n), eng);
                bool ok = conjugate_series(s).terms == c.terms && series_defect(s).empty()
                          && same_terms(tensor_decompose(n, m, eng).terms, s.terms);
                if (!ok)
                    b.check(false, name);
                ++products;
            });
        }
    b.check(true, "conjugation equivariance", std::to_string(products) + " products");

    int good = 0;
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            for (int k = 1; k <= 6; ++k)
                b.guarded("orthogonality", [&] {
                    if (verify_orthogonality(i, j, k, eng))
                        ++good;
                    else
                        b.check(false, "orthogonality (" + std::to_string(i) + "," + std::to_string(j) + ","
                                           + std::to_string(k) + ")");
                });
    b.check(good == 216, "orthogonality", std::to_string(good) + "/216 triples");
}

void suite_closed_forms(Builder& b, CharacterEngine& eng)
{
    for (int k = 1; k <= 6; ++k)
        for (int n = 1; n <= 4; ++n) {
            const std::string name = "z1*chi(" + std::to_string(n) + "*l" + std::to_string(k) + ")";
            b.guarded(name, [&] {
                CGSeries s = series_z1_times_power(k, n, eng);
                auto expected = z1_power_closed_form(k, n);
                bool ok = same_terms(s.terms, expected) && series_defect(s).empty();
                b.check(ok, name, ok ? "" : "expected " + series_text(expected) + "; computed " + series_text(s.terms));
            });
        }
}

}  // namespace

bool Report::passed() const
{
    return failures() == 0;
}

std::size_t Report::failures() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.ok; }));
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"roots",      "tables",  "quadratic", "appendix-a",
                                                "appendix-b", "dims",    "duality",   "closed-forms"};
    return names;
}

Report run_suite(std::string_view name, CharacterEngine& engine, bool use_errata)
{
    Report r;
    r.suite = std::string(name);
    Builder b(r);
    if (name == "roots")
        suite_roots(b, use_errata, r);
    else if (name == "tables")
        suite_tables(b, engine, use_errata, r);
    else if (name == "quadratic")
        suite_quadratic(b, engine, use_errata, r);
    else if (name == "appendix-a")
        suite_appendix_a(b, engine);
    else if (name == "appendix-b")
        suite_appendix_b(b, engine, use_errata, r);
    else if (name == "dims")
        suite_dims(b, engine);
    else if (name == "duality")
        suite_duality(b, engine);
    else if (name == "closed-forms")
        suite_closed_forms(b, engine);
    else
        throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
    return r;
}

void print(std::ostream& out, const Report& r)
{
    const Check* first = nullptr;
    for (const auto& c : r.checks) {
        out << (c.ok ? "PASS " : "FAIL ") << r.suite << ": " << c.name;
        if (!c.detail.empty())
            out << " - " << c.detail;
        out << '\n';
        if (!c.ok && !first)
            first = &c;
    }
    out << r.suite << ": " << (r.checks.size() - r.failures()) << "/" << r.checks.size() << " checks passed";
    if (r.errata_applied)
        out << " (" << r.errata_applied << " golden errata applied)";
    out << '\n';
    if (first)
        out << r.suite << ": first failure: " << first->name << " - " << first->detail << '\n';
}

}  // namespace e6cs::verify
