#include <doctest.h>

#include "xifn/algebra.hpp"

using namespace xifn;

namespace {

// <alpha_i, alpha_j> built in the test from the root norms and the obtuse
// angle between the simple roots (cos^2 = 1/2 for C2, 3/4 for G2).  The
// off-diagonal entry squared is n_i n_j cos^2 and the sign is negative; both
// algebras give exactly -1.
Mat2q gram_from_norms(const RootData& d) {
    Rat cos2 = d.kind == Algebra::C2 ? Rat(1, 2) : Rat(3, 4);
    Rat off2 = d.root_norms[0] * d.root_norms[1] * cos2;
    REQUIRE(off2 == Rat(1));
    Rat off(-1);
    return {d.root_norms[0], off, off, d.root_norms[1]};
}

}  // namespace

TEST_CASE("root data constants match the printed values") {
    const RootData& c2 = root_data(Algebra::C2);
    const RootData& g2 = root_data(Algebra::G2);

    CHECK(c2.k == 8);
    CHECK(g2.k == 6);
    CHECK(c2.coxeter.b == 4);
    CHECK(g2.coxeter.b == 6);
    CHECK(c2.det_cartan == 2);
    CHECK(g2.det_cartan == 1);
    CHECK(c2.weyl_order == 8);
    CHECK(g2.weyl_order == 12);

    // K exactly: 2 for C2; sqrt(3) for G2 so K^2 = 3.
    CHECK(c2.K == OrthoConstK{Rat(2), false});
    CHECK(g2.K == OrthoConstK{Rat(1), true});
    CHECK(g2.K.value() * g2.K.value() == doctest::Approx(3.0).epsilon(1e-15));

    // xi = 2 alpha_s + alpha_l (C2), 2 alpha_l + 3 alpha_s (G2)
    CHECK(c2.highest_root_marks == Vec2i{2, 1});
    CHECK(g2.highest_root_marks == Vec2i{2, 3});
    CHECK(c2.dual_marks == Vec2i{1, 2});
    CHECK(g2.dual_marks == Vec2i{3, 2});
}

TEST_CASE("Cartan matrix is reproduced from the Gram matrix") {
    for (Algebra kind : {Algebra::C2, Algebra::G2}) {
        const RootData& d = root_data(kind);
        Mat2q g = gram_from_norms(d);
        // C_ij = 2 <alpha_i, alpha_j> / <alpha_j, alpha_j>
        CHECK(Rat(d.cartan.a) == 2 * g.a / g.a);
        CHECK(Rat(d.cartan.b) == 2 * g.b / g.d);
        CHECK(Rat(d.cartan.c) == 2 * g.c / g.a);
        CHECK(Rat(d.cartan.d) == 2 * g.d / g.d);
    }
}

TEST_CASE("change_basis: identity conversion") {
    const RootData& d = root_data(Algebra::C2);
    Vec2q v{Rat(3, 7), Rat(-2, 5)};
    CHECK(change_basis(v, Basis::Alpha, Basis::Alpha, d) == v);
}

TEST_CASE("change_basis: C2 coweight in coroot coordinates solves the duality system") {
    // Oracle: omega_s^vee is the vector u (alpha^vee coords) with <u, alpha_j> = delta_sj,
    // i.e. C u = e_s; solve the 2x2 system by Cramer's rule here.
    const RootData& d = root_data(Algebra::C2);
    Rat det(d.cartan.det());
    Vec2q expected{Rat(d.cartan.d) / det, Rat(-d.cartan.c) / det};  // C^{-1} e_1
    Vec2q got = change_basis({Rat(1), Rat(0)}, Basis::OmegaVee, Basis::AlphaVee, d);
    CHECK(got == expected);
    CHECK(got == Vec2q{Rat(1), Rat(1)});
}

TEST_CASE("change_basis: G2 long simple root in omega coordinates") {
    // alpha_i = sum_j C_ij omega_j; the first G2 row is (2,-3), as the Figure-3
    // orbit arrows require (r_l(a,b) = (-a, 3a+b)).
    const RootData& d = root_data(Algebra::G2);
    Vec2q got = change_basis({Rat(1), Rat(0)}, Basis::Alpha, Basis::Omega, d);
    CHECK(got == Vec2q{Rat(2), Rat(-3)});
}

TEST_CASE("change_basis: round trips through all four bases are exact") {
    const Basis all[] = {Basis::Alpha, Basis::AlphaVee, Basis::Omega, Basis::OmegaVee};
    for (Algebra kind : {Algebra::C2, Algebra::G2}) {
        const RootData& d = root_data(kind);
        Vec2q v{Rat(5, 3), Rat(-7, 11)};
        for (Basis b1 : all)
            for (Basis b2 : all)
                for (Basis b3 : all) {
                    Vec2q w = change_basis(change_basis(change_basis(v, b1, b2, d), b2, b3, d),
                                           b3, b1, d);
                    CHECK(w == v);
                }
    }
}

TEST_CASE("pairing: examples and basis invariance") {
    CHECK(pairing(Vec2i{0, 0}, Vec2q{Rat(9, 2), Rat(-3)}) == Rat(0));
    CHECK(pairing(Vec2i{1, 1}, Vec2q{Rat(1, 2), Rat(1, 3)}) == Rat(5, 6));
    CHECK(pairing(Vec2i{2, 3}, Vec2q{Rat(1, 4), Rat(1, 5)}) == Rat(2, 4) + Rat(3, 5));

    // Invariance: the same value from alpha-coordinates with the Gram matrix
    // G = C.diag(n_i/2).
    for (Algebra kind : {Algebra::C2, Algebra::G2}) {
        const RootData& d = root_data(kind);
        Mat2q gram = gram_from_norms(d);
        Vec2i lambda{3, -2};
        Vec2q x{Rat(1, 6), Rat(5, 4)};
        Vec2q la = change_basis(to_rat(lambda), Basis::Omega, Basis::Alpha, d);
        Vec2q xa = change_basis(x, Basis::AlphaVee, Basis::Alpha, d);
        Rat via_gram = la.x * (gram.a * xa.x + gram.b * xa.y) + la.y * (gram.c * xa.x + gram.d * xa.y);
        CHECK(via_gram == pairing(lambda, x));
    }
}
