#pragma once

#include "e6cs/rational.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace e6cs {

inline constexpr std::size_t kRank = 6;

/// Six integers. Used for Dynkin labels (fundamental-weight basis), for
/// coordinates in the simple-root basis, and for polynomial exponents.
using Vec6 = std::array<int, kRank>;
using Weight = Vec6;
using RootVector = Vec6;

using CartanMatrix = std::array<std::array<int, kRank>, kRank>;
using InverseCartan = std::array<std::array<Rational, kRank>, kRank>;

const CartanMatrix& cartan_matrix();
const InverseCartan& inverse_cartan();

/// λ_k for k in 1..6.
Weight fundamental_weight(int k);

int height(const RootVector& v);
bool is_dominant(const Weight& w);

/// The 36 positive roots in the simple-root basis, ordered by height then
/// lexicographically.
const std::vector<RootVector>& positive_roots();

RootVector weyl_vector_in_root_basis();
Weight weyl_vector();

/// Solves w = A·v for v. Throws NonIntegral if w is outside the root lattice.
RootVector to_root_basis(const Weight& w);
/// Dynkin labels of Σ v_j α_j.
Weight from_root_basis(const RootVector& v);

Rational inner_product(const Weight& u, const Weight& v);

/// Throws InternalInconsistency if the Weyl product does not divide exactly.
Integer weyl_dimension(const Weight& m);

/// Every dominant μ with m − μ in the non-negative root lattice, m first.
/// Ordered by height of m − μ, ties by ascending labels.
std::vector<Weight> dominant_weights_below(const Weight& m);

/// Swaps labels 1<->6 and 3<->5.
Weight conjugate(const Weight& w);

Vec6 operator+(const Vec6& a, const Vec6& b);
Vec6 operator-(const Vec6& a, const Vec6& b);

/// "1,0,0,0,0,0"
std::string format_weight(const Vec6& w);
/// Six comma-separated integers. Throws ParseError.
Vec6 parse_vec6(std::string_view text);
/// As parse_vec6 but also rejects negative labels.
Weight parse_weight(std::string_view text);

}  // namespace e6cs
