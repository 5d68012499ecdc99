// Acceptance runner. Prints one PASS/FAIL line per criterion and exits
// nonzero if any selected criterion fails. Golden data is compared exactly as
// printed; errata are never applied here.
//
//   e6cs_acceptance        run all criteria
//   e6cs_acceptance N...   run the listed criteria

#include <e6cs/e6cs.hpp>
#include <e6cs/golden.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace e6cs;

namespace {

// Wall-clock limits in seconds. Zero means unlimited.
constexpr double kLimit[9] = {0, 1, 1, 10, 60, 60, 1800, 300, 0};
// Criterion 6 also has a softer target; exceeding it is reported but passes.
constexpr double kCubicTarget = 600;

// Collects failures; only the first few are printed.
class Outcome {
public:
    void require(bool ok, const std::string& what)
    {
        if (ok)
            return;
        ++failures_;
        if (failures_ <= 3)
            detail_ += (detail_.empty() ? "" : "; ") + what;
    }
    template <class F>
    void guarded(const std::string& what, F&& f)
    {
        try {
            f();
        } catch (const std::exception& e) {
            require(false, what + ": " + e.what());
        }
    }
    void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }

    bool ok() const { return failures_ == 0; }
    std::string text() const
    {
        std::string s = notes_;
        if (failures_ > 0) {
            s += (s.empty() ? "" : "; ") + std::to_string(failures_) + " failed: " + detail_;
            if (failures_ > 3)
                s += "; ...";
        }
        return s;
    }

private:
    int failures_ = 0;
    std::string detail_, notes_;
};

std::string w(const Weight& m)
{
    return "(" + format_weight(m) + ")";
}

std::string terms_text(const std::vector<SeriesTerm>& t)
{
    std::string s;
    for (const auto& x : t)
        s += (s.empty() ? "" : " ") + format_weight(x.weight) + ":" + std::to_string(x.mult);
    return s;
}

std::string diff_text(const std::vector<SeriesTerm>& expected, const std::vector<SeriesTerm>& got)
{
    std::map<Weight, std::pair<std::int64_t, std::int64_t>> m;
    for (const auto& t : expected)
        m[t.weight].first = t.mult;
    for (const auto& t : got)
        m[t.weight].second = t.mult;
    std::string s;
    for (const auto& [k, v] : m)
        if (v.first != v.second)
            s += " " + w(k) + " printed " + std::to_string(v.first) + " computed " + std::to_string(v.second);
    return s;
}

std::vector<golden::SeriesEntry> series_from(const std::string& source)
{
    std::vector<golden::SeriesEntry> out;
    for (auto& s : golden::series())
        if (s.source == source)
            out.push_back(std::move(s));
    return out;
}

std::vector<Weight> weights_up_to(int total)
{
    std::vector<Weight> out;
    Weight m{};
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == kRank) {
            out.push_back(m);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            m[i] = x;
            rec(i + 1, left - x);
        }
        m[i] = 0;
    };
    rec(0, total);
    return out;
}

Integer dimension_sum(const std::vector<SeriesTerm>& terms)
{
    Integer s = 0;
    for (const auto& t : terms)
        s += weyl_dimension(t.weight) * Integer(static_cast<long>(t.mult));
    return s;
}

void check_series(Outcome& o, CharacterEngine& eng, const std::vector<golden::SeriesEntry>& entries)
{
    for (const auto& s : entries)
        o.guarded("series " + golden::series_key(s.factors), [&] {
            CGSeries got = tensor_decompose(s.factors, eng);
            std::string defect = series_defect(got);
            o.require(defect.empty(), "series " + golden::series_key(s.factors) + ": " + defect);
            o.require(same_terms(got.terms, s.terms),
                      "series " + golden::series_key(s.factors) + ":" + diff_text(s.terms, got.terms));
        });
}

// Root data.
void criterion1(Outcome& o, CharacterEngine&)
{
    const auto& roots = positive_roots();
    o.require(roots.size() == 36, std::to_string(roots.size()) + " positive roots");
    std::vector<int> hist(12, 0);
    for (const auto& a : roots)
        if (height(a) >= 1 && height(a) <= 11)
            ++hist[height(a)];
    o.require(hist == std::vector<int>{0, 6, 5, 5, 5, 4, 3, 3, 2, 1, 1, 1}, "height histogram");
    o.require(weyl_vector_in_root_basis() == RootVector{8, 11, 15, 21, 15, 8}, "rho in the root basis");
    o.require(inner_product(weyl_vector(), weyl_vector()) == 78, "(rho,rho)");
    o.require(energy(Weight{}, 1).ground == 156, "ground energy");
    o.note("36 roots, rho = (8,11,15,21,15,8), E0(1) = 156");
}

// Dimensions of the fundamentals and the printed table.
void criterion2(Outcome& o, CharacterEngine&)
{
    int n = 0;
    for (const auto& d : golden::dimensions()) {
        Integer got = weyl_dimension(d.weight);
        o.require(got == d.dim, "dim " + w(d.weight) + " printed " + d.dim.get_str() + " computed " + got.get_str());
        ++n;
    }
    o.note(std::to_string(n) + " dimensions");
}

// Operator tables against the eigenvalues and the printed quadratic series.
void criterion3(Outcome& o, CharacterEngine& eng)
{
    const std::vector<Rational> eps{Rational(104, 3), 48, Rational(200, 3), 96, Rational(200, 3), Rational(104, 3)};
    for (int j = 1; j <= 6; ++j) {
        Polynomial z = Polynomial::variable(j);
        o.require(eigenvalue(fundamental_weight(j), 1) == eps[j - 1], "eigenvalue of l" + std::to_string(j));
        o.require(apply_delta(z, eng.tables()) == eps[j - 1] * z, "b_" + std::to_string(j));
    }
    int pairs = 0;
    for (const auto& s : series_from("quadratic")) {
        const std::string name = "a-table " + golden::series_key(s.factors);
        o.guarded(name, [&] {
            Polynomial product = Polynomial::monomial(golden::monomial_of(s.factors));
            Polynomial expansion;
            for (const auto& t : s.terms)
                expansion.add_scaled(eng.character(t.weight)->poly, eigenvalue(t.weight, 1) * t.mult);
            o.require(apply_delta(product, eng.tables()) == expansion, name);
            ++pairs;
        });
    }
    o.require(pairs == 21, std::to_string(pairs) + " pairs");
    o.note("6 eigenvalues, " + std::to_string(pairs) + " pairs");
}

// Golden characters by both methods.
void criterion4(Outcome& o, CharacterEngine& eng)
{
    const std::vector<Integer> fund{27, 78, 351, 2925, 351, 27};
    int n = 0;
    for (const auto& g : golden::characters()) {
        const std::string name = "character " + w(g.weight);
        o.guarded(name, [&] {
            Character r = character_recursion(g.weight, eng.tables());
            Character a = character_annihilator(g.weight, eng.tables());
            o.require(r.poly == g.poly, name + " recursion differs from the printed polynomial");
            o.require(a.poly == g.poly, name + " annihilator differs from the printed polynomial");
            o.require(r.poly == a.poly, name + " methods disagree");
            o.require(r.poly.coefficient_of(g.weight) == 1, name + " not monic");
            o.require(has_integer_coefficients(r.poly), name + " non-integral");
            o.require(apply_delta(r.poly, eng.tables()) == eigenvalue(g.weight, 1) * r.poly, name + " not an eigenvector");
            std::array<Rational, kRank> at;
            for (std::size_t i = 0; i < kRank; ++i)
                at[i] = fund[i];
            o.require(evaluate(r.poly, at) == weyl_dimension(g.weight), name + " dimension");
            ++n;
        });
    }
    o.note(std::to_string(n) + " characters");
}

// Quadratic series as printed, with the multiplicities named in the text.
void criterion5(Outcome& o, CharacterEngine& eng)
{
    auto quadratic = series_from("quadratic");
    o.require(quadratic.size() == 21, std::to_string(quadratic.size()) + " quadratic series");
    check_series(o, eng, quadratic);

    o.guarded("l3 x l4", [&] {
        CGSeries s = tensor_decompose(fundamental_weight(3), fundamental_weight(4), eng);
        auto expect = [&](const Weight& m, std::int64_t n) {
            o.require(s.multiplicity(m) == n, "n" + w(m) + " = " + std::to_string(s.multiplicity(m)) + ", expected "
                                                  + std::to_string(n));
        };
        expect({0, 1, 1, 0, 0, 0}, 2);
        expect({1, 0, 0, 0, 1, 0}, 2);
        expect({0, 1, 0, 0, 0, 1}, 2);
        expect({0, 0, 0, 0, 0, 1}, 2);
        for (const Weight& m : std::vector<Weight>{
                 {0, 0, 0, 0, 2, 0}, {0, 2, 0, 0, 0, 1}, {0, 0, 0, 1, 0, 1}, {2, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 2}})
            expect(m, 1);
        Integer total = dimension_sum(s.terms);
        o.require(total == 1026675, "dimension balance " + total.get_str());
        o.note("l3 x l4 = " + terms_text(s.terms));
    });
}

// Cubic series as printed, with spot checks on z4^3.
void criterion6(Outcome& o, CharacterEngine& eng)
{
    auto cubic = series_from("cubic");
    o.require(cubic.size() == 31, std::to_string(cubic.size()) + " cubic series");
    check_series(o, eng, cubic);
    o.guarded("z4^3", [&] {
        CGSeries s = monomial_decompose({0, 0, 0, 3, 0, 0}, eng);
        o.require(s.multiplicity({1, 0, 0, 1, 0, 1}) == 156, "z4^3 (1,0,0,1,0,1)");
        o.require(s.multiplicity({1, 1, 0, 0, 0, 1}) == 150, "z4^3 (1,1,0,0,0,1)");
        o.require(s.multiplicity({0, 0, 1, 0, 1, 0}) == 128, "z4^3 (0,0,1,0,1,0)");
        o.require(s.multiplicity(Weight{}) == 2, "z4^3 (0,0,0,0,0,0)");
        o.require(dimension_sum(s.terms) == Integer(2925) * 2925 * 2925, "z4^3 dimension");
        o.note(std::to_string(cubic.size()) + " series, z4^3 has " + std::to_string(s.terms.size()) + " terms");
    });
}

// Closed-form families.
void criterion7(Outcome& o, CharacterEngine& eng)
{
    int n_checked = 0;
    for (int k = 1; k <= 6; ++k)
        for (int n = 2; n <= 4; ++n) {
            const std::string name = "z1*chi(" + std::to_string(n) + "l" + std::to_string(k) + ")";
            o.guarded(name, [&] {
                CGSeries s = series_z1_times_power(k, n, eng);
                auto expected = z1_power_closed_form(k, n);
                o.require(s.terms == expected, name + ":" + diff_text(expected, s.terms));
                o.require(dimension_sum(s.terms) == 27 * weyl_dimension(s.factors.back()), name + " dimension");
                ++n_checked;
            });
        }
    o.note(std::to_string(n_checked) + " families");
}

// Property suites.
void criterion8(Outcome& o, CharacterEngine& eng)
{
    auto weights = weights_up_to(3);
    for (const auto& m : weights)
        o.guarded("conjugate " + w(m), [&] {
            o.require(conjugate_poly(eng.character(m)->poly) == eng.character(conjugate(m))->poly,
                      "conjugate character " + w(m));
        });

    int products = 0;
    for (std::size_t i = 0; i < weights.size(); ++i)
        for (std::size_t j = i; j < weights.size(); ++j) {
            const Weight &m = weights[i], &n = weights[j];
            int h = 0;
            for (std::size_t r = 0; r < kRank; ++r)
                h += m[r] + n[r];
            if (h > 3 || m == Weight{} || n == Weight{})
                continue;
            const std::string name = w(m) + "x" + w(n);
            o.guarded(name, [&] {
                // decompose_product throws on a negative multiplicity or a
                // nonzero residual, which guarded() records as a failure.
                CGSeries s = tensor_decompose(m, n, eng);
                CGSeries c = tensor_decompose(conjugate(m), conjugate(n), eng);
                o.require(conjugate_series(s).terms == c.terms, "equivariance " + name);
                o.require(series_defect(s).empty(), "defect " + name);
                ++products;
            });
        }

    int good = 0;
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            for (int k = 1; k <= 6; ++k)
                o.guarded("orthogonality", [&] {
                    bool ok = verify_orthogonality(i, j, k, eng);
                    o.require(ok, "orthogonality (" + std::to_string(i) + "," + std::to_string(j) + ","
                                      + std::to_string(k) + ")");
                    good += ok;
                });

    for (int n = 1; n <= 3; ++n)
        for (const auto& e : weights_up_to(n)) {
            int deg = 0;
            for (int x : e)
                deg += x;
            if (deg != n)
                continue;
            o.guarded("monomial " + w(e), [&] {
                o.require(series_defect(monomial_decompose(e, eng)).empty(), "monomial " + w(e));
                ++products;
            });
        }
    o.note(std::to_string(weights.size()) + " conjugate pairs, " + std::to_string(products) + " products, "
           + std::to_string(good) + "/216 orthogonality triples");
}

using Criterion = void (*)(Outcome&, CharacterEngine&);
constexpr Criterion kCriteria[9] = {nullptr,    criterion1, criterion2, criterion3, criterion4,
                                    criterion5, criterion6, criterion7, criterion8};
const char* const kTitle[9] = {"",
                               "root data",
                               "dimensions",
                               "operator tables",
                               "characters",
                               "quadratic series",
                               "cubic series",
                               "closed-form families",
                               "property suites"};

bool run(int n)
{
    CharacterEngine engine(nullptr);
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    o.guarded("criterion", [&] { kCriteria[n](o, engine); });
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (kLimit[n] > 0) {
        std::ostringstream lim;
        lim << "exceeded " << kLimit[n] << " s limit";
        o.require(secs < kLimit[n], lim.str());
    }
    if (n == 6 && secs >= kCubicTarget)
        o.note("over the 600 s target");

    std::cout << (o.ok() ? "PASS" : "FAIL") << " criterion " << n << ": " << kTitle[n];
    if (!o.text().empty())
        std::cout << ": " << o.text();
    std::cout << " (" << std::fixed << std::setprecision(3) << secs << " s)" << std::endl;
    return o.ok();
}

}  // namespace

int main(int argc, char** argv)
{
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) {
        char* end = nullptr;
        long n = std::strtol(argv[i], &end, 10);
        if (*end != '\0' || n < 1 || n > 8) {
            std::cerr << "usage: e6cs_acceptance [1-8 ...]\n";
            return 2;
        }
        which.push_back(static_cast<int>(n));
    }
    if (which.empty())
        for (int n = 1; n <= 8; ++n)
            which.push_back(n);
    bool ok = true;
    for (int n : which)
        ok = run(n) && ok;
    return ok ? 0 : 1;
}
