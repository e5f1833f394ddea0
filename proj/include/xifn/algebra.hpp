#pragma once

#include <array>

#include "xifn/linalg.hpp"

namespace xifn {

enum class Algebra { C2, G2 };

// Coordinate bases: simple roots, coroots, weights, coweights.
enum class Basis { Alpha, AlphaVee, Omega, OmegaVee };

// The continuous orthogonality constant |W||F|.  Exactly 2 for C2 and
// sqrt(3) for G2; kept as (rational, sqrt3 flag) so equality tests stay exact.
struct OrthoConstK {
    Rat rational;
    bool times_sqrt3 = false;

    double value() const;
    friend bool operator==(const OrthoConstK&, const OrthoConstK&) = default;
};

// Exact rank-2 root-system data.
//
// Basis ordering convention: (alpha_s, alpha_l) for C2 and (alpha_l, alpha_s)
// for G2.  Every 2-vector of coordinates in this codebase follows that order;
// short_index/long_index record which slot is which.
struct RootData {
    Algebra kind;
    Mat2i cartan;                   // C_ij = <alpha_i, alpha_j^vee>
    Mat2i coxeter;
    std::array<Rat, 2> root_norms;  // <alpha_i, alpha_i>
    int short_index = 0;
    int long_index = 0;
    Vec2i highest_root_marks;  // xi  = m_1 alpha_1 + m_2 alpha_2
    Vec2i dual_marks;          // eta = m^v_1 alpha^v_1 + m^v_2 alpha^v_2
    i64 det_cartan = 0;
    OrthoConstK K;  // |W| |F|
    i64 k = 0;      // |W| det C / 2
    i64 weyl_order = 0;

    Mat2q cartan_q;
    Mat2q cartan_inv;                     // C^-1, exact
    std::array<Mat2q, 4> to_alphavee;     // indexed by Basis: basis coords -> alpha^vee coords
    std::array<Mat2q, 4> from_alphavee;   // inverses of the above
};

const RootData& root_data(Algebra kind);

// Coordinates of the same geometric vector in another basis.
Vec2q change_basis(const Vec2q& v, Basis from, Basis to, const RootData& data);

// <lambda, x> for lambda in omega-coordinates and x in alpha^vee-coordinates.
// These bases are mutually dual, so the pairing is the plain dot product.
Rat pairing(const Vec2i& lambda_omega, const Vec2q& x_alphavee);
double pairing(const Vec2i& lambda_omega, const Vec2d& x_alphavee);

}  // namespace xifn
