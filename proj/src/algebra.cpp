#include "xifn/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace xifn {

double OrthoConstK::value() const {
    double v = to_double(rational);
    return times_sqrt3 ? v * std::sqrt(3.0) : v;
}

namespace {

// D = diag(<alpha_i,alpha_i>/2) converts alpha -> alpha^vee coordinates.
Mat2q half_norm_diag(const std::array<Rat, 2>& norms) {
    return {norms[0] / 2, Rat(0), Rat(0), norms[1] / 2};
}

RootData build(Algebra kind) {
    RootData d;
    d.kind = kind;
    if (kind == Algebra::C2) {
        d.cartan = {2, -1, -2, 2};
        d.coxeter = {1, 4, 4, 1};
        d.root_norms = {Rat(1), Rat(2)};
        d.short_index = 0;
        d.long_index = 1;
        d.highest_root_marks = {2, 1};  // xi = 2 alpha_s + alpha_l
        d.dual_marks = {1, 2};          // eta = alpha_s^vee + 2 alpha_l^vee
        d.K = {Rat(2), false};
        d.weyl_order = 8;
    } else {
        d.cartan = {2, -3, -1, 2};
        d.coxeter = {1, 6, 6, 1};
        d.root_norms = {Rat(2), Rat(2, 3)};
        d.short_index = 1;
        d.long_index = 0;
        d.highest_root_marks = {2, 3};  // xi = 2 alpha_l + 3 alpha_s
        d.dual_marks = {3, 2};          // eta = 3 alpha_l^vee + 2 alpha_s^vee
        d.K = {Rat(1), true};
        d.weyl_order = 12;
    }
    d.det_cartan = d.cartan.det();
    d.k = d.weyl_order * d.det_cartan / 2;

    d.cartan_q = to_rat(d.cartan);
    d.cartan_inv = d.cartan_q.inverse();

    // Transition matrices to alpha^vee coordinates, derived from C and the
    // root norms: v_alpha^vee = D v_alpha, v_omega^vee = C v_alpha^vee,
    // v_omega = Cᵀ v_alpha.
    Mat2q D = half_norm_diag(d.root_norms);
    d.to_alphavee[static_cast<int>(Basis::Alpha)] = D;
    d.to_alphavee[static_cast<int>(Basis::AlphaVee)] = Mat2q::identity();
    d.to_alphavee[static_cast<int>(Basis::Omega)] = d.cartan_inv * D;
    d.to_alphavee[static_cast<int>(Basis::OmegaVee)] = d.cartan_inv;
    for (int i = 0; i < 4; ++i) d.from_alphavee[i] = d.to_alphavee[i].inverse();

    // Double-entry guard: the matrices derived from C and the norms must
    // reproduce literal expected values.
    const bool c2 = kind == Algebra::C2;
    const Mat2q want_alpha = c2 ? Mat2q{Rat(1, 2), Rat(0), Rat(0), Rat(1)}
                                : Mat2q{Rat(1), Rat(0), Rat(0), Rat(1, 3)};
    const Mat2q want_omega = c2 ? Mat2q{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1)}
                                : Mat2q{Rat(2), Rat(1), Rat(1), Rat(2, 3)};
    const Mat2q want_omegavee =
        c2 ? Mat2q{Rat(1), Rat(1, 2), Rat(1), Rat(1)} : Mat2q{Rat(2), Rat(3), Rat(1), Rat(2)};
    if (!(d.to_alphavee[static_cast<int>(Basis::Alpha)] == want_alpha) ||
        !(d.to_alphavee[static_cast<int>(Basis::Omega)] == want_omega) ||
        !(d.to_alphavee[static_cast<int>(Basis::OmegaVee)] == want_omegavee))
        throw std::logic_error("root_data: basis-change derivation mismatch");
    if (d.det_cartan != (c2 ? 2 : 1))
        throw std::logic_error("root_data: det C mismatch");
    return d;
}

}  // namespace

const RootData& root_data(Algebra kind) {
    static const RootData c2 = build(Algebra::C2);
    static const RootData g2 = build(Algebra::G2);
    return kind == Algebra::C2 ? c2 : g2;
}

Vec2q change_basis(const Vec2q& v, Basis from, Basis to, const RootData& data) {
    if (from == to) return v;
    return data.from_alphavee[static_cast<int>(to)] * (data.to_alphavee[static_cast<int>(from)] * v);
}

Rat pairing(const Vec2i& lambda_omega, const Vec2q& x_alphavee) {
    return Rat(lambda_omega.x) * x_alphavee.x + Rat(lambda_omega.y) * x_alphavee.y;
}

double pairing(const Vec2i& lambda_omega, const Vec2d& x_alphavee) {
    return static_cast<double>(lambda_omega.x) * x_alphavee.x +
           static_cast<double>(lambda_omega.y) * x_alphavee.y;
}

}  // namespace xifn
