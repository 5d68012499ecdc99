#include "e6cs/lattice.hpp"

#include "e6cs/errors.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace e6cs {

namespace {

constexpr CartanMatrix kCartan = {{
    {2, 0, -1, 0, 0, 0},
    {0, 2, 0, -1, 0, 0},
    {-1, 0, 2, -1, 0, 0},
    {0, -1, -1, 2, -1, 0},
    {0, 0, 0, -1, 2, -1},
    {0, 0, 0, 0, -1, 2},
}};

InverseCartan invert(const CartanMatrix& a)
{
    std::array<std::array<Rational, 2 * kRank>, kRank> m;
    for (std::size_t i = 0; i < kRank; ++i)
        for (std::size_t j = 0; j < kRank; ++j) {
            m[i][j] = a[i][j];
            m[i][kRank + j] = (i == j) ? 1 : 0;
        }
    for (std::size_t col = 0; col < kRank; ++col) {
        std::size_t piv = col;
        while (piv < kRank && m[piv][col] == 0)
            ++piv;
        if (piv == kRank)
            throw InternalInconsistency("singular Cartan matrix");
        std::swap(m[piv], m[col]);
        Rational inv = 1 / m[col][col];
        for (auto& x : m[col])
            x *= inv;
        for (std::size_t r = 0; r < kRank; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            Rational f = m[r][col];
            for (std::size_t j = 0; j < 2 * kRank; ++j)
                m[r][j] -= f * m[col][j];
        }
    }
    InverseCartan out;
    for (std::size_t i = 0; i < kRank; ++i)
        for (std::size_t j = 0; j < kRank; ++j)
            out[i][j] = m[i][kRank + j];
    return out;
}

// 3·A⁻¹ is integral for E6; used for fast floor bounds.
std::array<std::array<long, kRank>, kRank> triple_inverse()
{
    std::array<std::array<long, kRank>, kRank> t{};
    const auto& inv = inverse_cartan();
    for (std::size_t i = 0; i < kRank; ++i)
        for (std::size_t j = 0; j < kRank; ++j) {
            Rational x = inv[i][j] * 3;
            if (!is_integer(x))
                throw InternalInconsistency("inverse Cartan denominators exceed 3");
            t[i][j] = x.get_num().get_si();
        }
    return t;
}

// <v, α_i^∨> for v in the root basis.
int pairing(const RootVector& v, std::size_t i)
{
    int s = 0;
    for (std::size_t j = 0; j < kRank; ++j)
        s += v[j] * kCartan[j][i];
    return s;
}

std::vector<RootVector> generate_roots()
{
    std::set<RootVector> found;
    std::vector<RootVector> layer;
    for (std::size_t i = 0; i < kRank; ++i) {
        RootVector s{};
        s[i] = 1;
        layer.push_back(s);
        found.insert(s);
    }
    std::vector<RootVector> all = layer;
    while (!layer.empty()) {
        std::set<RootVector> next;
        for (const auto& r : layer) {
            for (std::size_t i = 0; i < kRank; ++i) {
                // root string r - pα_i, ..., r + qα_i with p - q = <r, α_i^∨>
                int p = 0;
                for (RootVector down = r;;) {
                    down[i] -= 1;
                    if (!found.count(down))
                        break;
                    ++p;
                }
                int q = p - pairing(r, i);
                if (q > 0) {
                    RootVector up = r;
                    up[i] += 1;
                    if (!found.count(up))
                        next.insert(up);
                }
            }
        }
        layer.assign(next.begin(), next.end());
        for (const auto& r : layer) {
            found.insert(r);
            all.push_back(r);
        }
    }
    std::sort(all.begin(), all.end(), [](const RootVector& a, const RootVector& b) {
        int ha = height(a), hb = height(b);
        return ha != hb ? ha < hb : a < b;
    });
    if (all.size() != 36)
        throw InternalInconsistency("root closure produced " + std::to_string(all.size()) + " roots");
    return all;
}

}  // namespace

const CartanMatrix& cartan_matrix()
{
    return kCartan;
}

const InverseCartan& inverse_cartan()
{
    static const InverseCartan inv = invert(kCartan);
    return inv;
}

Weight fundamental_weight(int k)
{
    if (k < 1 || k > static_cast<int>(kRank))
        throw std::out_of_range("fundamental weight index " + std::to_string(k));
    Weight w{};
    w[k - 1] = 1;
    return w;
}

int height(const RootVector& v)
{
    int h = 0;
    for (int c : v)
        h += c;
    return h;
}

bool is_dominant(const Weight& w)
{
    return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
}

const std::vector<RootVector>& positive_roots()
{
    static const std::vector<RootVector> roots = generate_roots();
    return roots;
}

RootVector weyl_vector_in_root_basis()
{
    RootVector sum{};
    for (const auto& r : positive_roots())
        sum = sum + r;
    RootVector rho{};
    for (std::size_t i = 0; i < kRank; ++i) {
        if (sum[i] % 2 != 0)
            throw InternalInconsistency("sum of positive roots is not even");
        rho[i] = sum[i] / 2;
    }
    return rho;
}

Weight weyl_vector()
{
    return {1, 1, 1, 1, 1, 1};
}

RootVector to_root_basis(const Weight& w)
{
    const auto& inv = inverse_cartan();
    RootVector v{};
    for (std::size_t i = 0; i < kRank; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < kRank; ++j)
            s += inv[i][j] * w[j];
        if (!is_integer(s))
            throw NonIntegral("(" + format_weight(w) + ") is not in the root lattice");
        v[i] = static_cast<int>(s.get_num().get_si());
    }
    return v;
}

Weight from_root_basis(const RootVector& v)
{
    Weight w{};
    for (std::size_t i = 0; i < kRank; ++i)
        for (std::size_t j = 0; j < kRank; ++j)
            w[i] += kCartan[i][j] * v[j];
    return w;
}

Rational inner_product(const Weight& u, const Weight& v)
{
    const auto& inv = inverse_cartan();
    Rational s = 0;
    for (std::size_t i = 0; i < kRank; ++i) {
        if (u[i] == 0)
            continue;
        for (std::size_t j = 0; j < kRank; ++j)
            if (v[j] != 0)
                s += inv[i][j] * (u[i] * v[j]);
    }
    return s;
}

Integer weyl_dimension(const Weight& m)
{
    Integer num = 1, den = 1;
    for (const auto& a : positive_roots()) {
        long f = 0;
        for (std::size_t i = 0; i < kRank; ++i)
            f += static_cast<long>(a[i]) * (m[i] + 1);
        num *= f;
        den *= height(a);
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw InternalInconsistency("Weyl dimension of (" + format_weight(m) + ") is not an integer");
    Integer q = num / den;
    return q;
}

std::vector<Weight> dominant_weights_below(const Weight& m)
{
    static const auto inv3 = triple_inverse();
    const auto& a = kCartan;

    // m − μ = Σ c_j α_j with c ≥ 0, and μ ≥ 0 forces c ≤ A⁻¹m.
    std::array<long, kRank> bound{};
    for (std::size_t i = 0; i < kRank; ++i) {
        long s = 0;
        for (std::size_t j = 0; j < kRank; ++j)
            s += inv3[i][j] * m[j];
        bound[i] = s < 0 ? -1 : s / 3;
    }

    auto label = [&](const std::array<long, kRank>& c, std::size_t i) {
        long s = m[i];
        for (std::size_t j = 0; j < kRank; ++j)
            s -= a[i][j] * c[j];
        return s;
    };

    // Loop order c1,c3,c4,c2,c5,c6 lets each label be tested as soon as every
    // c_j it depends on is fixed (the Cartan matrix is sparse).
    struct Found {
        int h;
        Weight mu;
    };
    std::vector<Found> out;
    std::array<long, kRank> c{};
    for (c[0] = 0; c[0] <= bound[0]; ++c[0])
        for (c[2] = 0; c[2] <= bound[2]; ++c[2]) {
            c[3] = c[1] = c[4] = c[5] = 0;
            if (label(c, 0) < 0)
                continue;
            for (c[3] = 0; c[3] <= bound[3]; ++c[3]) {
                c[1] = c[4] = c[5] = 0;
                if (label(c, 2) < 0)
                    continue;
                for (c[1] = 0; c[1] <= bound[1]; ++c[1]) {
                    c[4] = c[5] = 0;
                    if (label(c, 1) < 0)
                        continue;
                    for (c[4] = 0; c[4] <= bound[4]; ++c[4]) {
                        c[5] = 0;
                        if (label(c, 3) < 0)
                            continue;
                        for (c[5] = 0; c[5] <= bound[5]; ++c[5]) {
                            if (label(c, 4) < 0 || label(c, 5) < 0)
                                continue;
                            Weight mu;
                            long h = 0;
                            for (std::size_t i = 0; i < kRank; ++i) {
                                mu[i] = static_cast<int>(label(c, i));
                                h += c[i];
                            }
                            out.push_back({static_cast<int>(h), mu});
                        }
                    }
                }
            }
        }
    std::sort(out.begin(), out.end(), [](const Found& x, const Found& y) {
        return x.h != y.h ? x.h < y.h : x.mu < y.mu;
    });
    std::vector<Weight> result;
    result.reserve(out.size());
    for (auto& f : out)
        result.push_back(f.mu);
    return result;
}

Weight conjugate(const Weight& w)
{
    return {w[5], w[1], w[4], w[3], w[2], w[0]};
}

Vec6 operator+(const Vec6& a, const Vec6& b)
{
    Vec6 r;
    for (std::size_t i = 0; i < kRank; ++i)
        r[i] = a[i] + b[i];
    return r;
}

Vec6 operator-(const Vec6& a, const Vec6& b)
{
    Vec6 r;
    for (std::size_t i = 0; i < kRank; ++i)
        r[i] = a[i] - b[i];
    return r;
}

std::string format_weight(const Vec6& w)
{
    std::string s;
    for (std::size_t i = 0; i < kRank; ++i) {
        if (i)
            s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

Vec6 parse_vec6(std::string_view text)
{
    Vec6 v{};
    std::size_t i = 0;
    const char* p = text.data();
    const char* end = text.data() + text.size();
    for (; i < kRank; ++i) {
        if (p != end && *p == '+')
            ++p;
        auto [next, ec] = std::from_chars(p, end, v[i]);
        if (ec != std::errc())
            break;
        p = next;
        if (i + 1 < kRank) {
            if (p == end || *p != ',')
                break;
            ++p;
        }
    }
    if (i != kRank || p != end)
        throw ParseError("expected six comma-separated integers, got '" + std::string(text) + "'");
    return v;
}

Weight parse_weight(std::string_view text)
{
    Weight w = parse_vec6(text);
    if (!is_dominant(w))
        throw ParseError("weight labels must be non-negative: '" + std::string(text) + "'");
    return w;
}

}  // namespace e6cs
