#include <doctest.h>

#include <random>

#include "xifn/orbitfn.hpp"

using namespace xifn;

namespace {

Vec2i random_weight(std::mt19937_64& rng, i64 lo = -8, i64 hi = 8) {
    std::uniform_int_distribution<i64> d(lo, hi);
    return {d(rng), d(rng)};
}

Vec2d random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.5, 1.5);
    return {d(rng), d(rng)};
}

}  // namespace

TEST_CASE("psi at lambda = 0 and the sign-cancellation zero") {
    const EvalPoint origin = EvalPoint::rational({Rat(0), Rat(0)});
    CHECK(std::abs(psi(SignHom::Identity, {0, 0}, origin, Algebra::C2) - Complex(8.0)) < 1e-15);
    CHECK(std::abs(psi(SignHom::Identity, {0, 0}, origin, Algebra::G2) - Complex(12.0)) < 1e-15);
    CHECK(std::abs(psi(SignHom::SigmaE, {0, 0}, origin, Algebra::C2)) < 1e-15);
    CHECK(std::abs(psi(SignHom::SigmaE, {0, 0}, origin, Algebra::G2)) < 1e-15);

    // sigma^s splits W(C2) into 4 plus and 4 minus, so the 8-term sum at x=0
    // collapses to 0 whatever lambda is.
    const WeylSystem& sys = weyl_system(Algebra::C2);
    int plus = 0, minus = 0;
    for (const GroupElement& w : sys.group)
        (sign(SignHom::SigmaS, w, *sys.data) == 1 ? plus : minus)++;
    CHECK(plus == 4);
    CHECK(minus == 4);
    CHECK(std::abs(psi(SignHom::SigmaS, {1, 0}, origin, Algebra::C2)) < 1e-15);
}

TEST_CASE("xi at lambda = 0 and the e- zero at x = 0") {
    const EvalPoint origin = EvalPoint::rational({Rat(0), Rat(0)});
    CHECK(std::abs(xi(Family::SPlus, {0, 0}, origin, Algebra::C2) - Complex(4.0)) < 1e-15);
    CHECK(std::abs(xi(Family::SPlus, {0, 0}, origin, Algebra::G2) - Complex(6.0)) < 1e-15);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        CHECK(std::abs(xi(Family::EMinus, random_weight(rng), origin, Algebra::C2)) < 1e-13);
        CHECK(std::abs(xi(Family::EMinus, random_weight(rng), origin, Algebra::G2)) < 1e-13);
    }
}

TEST_CASE("triangle inequality bound |Xi| <= |kernel|") {
    std::mt19937_64 rng(11);
    for (Algebra kind : {Algebra::C2, Algebra::G2}) {
        const double bound = kind == Algebra::C2 ? 4.0 : 6.0;
        for (Family fam : kAllFamilies)
            for (int t = 0; t < 50; ++t) {
                Complex v = xi(fam, random_weight(rng), EvalPoint::real(random_point(rng)), kind);
                CHECK(std::abs(v) <= bound + 1e-12);
            }
    }
}

TEST_CASE("exact and floating evaluation agree") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<i64> num(-12, 12);
    for (Algebra kind : {Algebra::C2, Algebra::G2})
        for (Family fam : kAllFamilies)
            for (int t = 0; t < 30; ++t) {
                Vec2q xq{Rat(num(rng), 7), Rat(num(rng), 5)};
                Vec2i la = random_weight(rng);
                Complex exact = xi(fam, la, EvalPoint::rational(xq), kind);
                Complex fl = xi(fam, la, EvalPoint::real(to_double(xq)), kind);
                CHECK(std::abs(exact - fl) < 1e-12);
            }
}

TEST_CASE("sum identities: 2 Xi = psi + psi") {
    struct Identity {
        Family fam;
        SignHom first, second;
    };
    const Identity ids[] = {
        {Family::EPlus, SignHom::Identity, SignHom::SigmaE},
        {Family::EMinus, SignHom::SigmaS, SignHom::SigmaL},
        {Family::SPlus, SignHom::Identity, SignHom::SigmaS},
        {Family::SMinus, SignHom::SigmaL, SignHom::SigmaE},
        {Family::LPlus, SignHom::Identity, SignHom::SigmaL},
        {Family::LMinus, SignHom::SigmaS, SignHom::SigmaE},
    };
    std::mt19937_64 rng(17);
    for (Algebra kind : {Algebra::C2, Algebra::G2})
        for (const Identity& id : ids)
            for (int t = 0; t < 50; ++t) {
                Vec2i la = random_weight(rng);
                EvalPoint x = EvalPoint::real(random_point(rng));
                Complex lhs = 2.0 * xi(id.fam, la, x, kind);
                Complex rhs = psi(id.first, la, x, kind) + psi(id.second, la, x, kind);
                CHECK(std::abs(lhs - rhs) < 1e-12);
            }
}

TEST_CASE("closed forms match the kernel sums") {
    std::mt19937_64 rng(19);
    for (Algebra kind : {Algebra::C2, Algebra::G2})
        for (Family fam : kAllFamilies) {
            double max_err = 0.0;
            for (int t = 0; t < 200; ++t) {
                Vec2i la = random_weight(rng);
                Vec2d x = random_point(rng);
                Complex generic = xi(fam, la, EvalPoint::real(x), kind);
                Complex closed = xi_closed_form(kind, fam, la, x);
                max_err = std::max(max_err, std::abs(generic - closed));
            }
            CHECK(max_err < 1e-10);
        }
}

TEST_CASE("the printed G2 e- closed form needs the corrected final argument") {
    std::mt19937_64 rng(23);
    double printed_err = 0.0;
    for (int t = 0; t < 200; ++t) {
        Vec2i la = random_weight(rng);
        Vec2d x = random_point(rng);
        Complex generic = xi(Family::EMinus, la, EvalPoint::real(x), Algebra::G2);
        printed_err = std::max(printed_err,
                               std::abs(generic - xi_closed_form(Algebra::G2, Family::EMinus, la,
                                                                 x, ClosedFormReading::AsPublished)));
    }
    CHECK(printed_err > 1e-3);  // the as-printed reading is not an identity
}

TEST_CASE("C2 s+ closed form at the printed example point") {
    // (a,b)=(1,0), (x,y)=(1/4,0): 2{cos(pi/2) + cos(pi/2)} = 0
    Complex v = xi_closed_form(Algebra::C2, Family::SPlus, {1, 0}, {0.25, 0.0});
    CHECK(std::abs(v) < 1e-15);
    Complex g = xi(Family::SPlus, {1, 0}, EvalPoint::rational({Rat(1, 4), Rat(0)}), Algebra::C2);
    CHECK(std::abs(g) < 1e-13);
    // l+ at lambda = 0 is the constant 4
    CHECK(std::abs(xi_closed_form(Algebra::C2, Family::LPlus, {0, 0}, {0.37, -0.81}) -
                   Complex(4.0)) < 1e-12);
}

TEST_CASE("G2 e- values are purely imaginary") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 100; ++t) {
        Complex v = xi(Family::EMinus, random_weight(rng), EvalPoint::real(random_point(rng)),
                       Algebra::G2);
        CHECK(std::abs(v.real()) < 1e-12);
    }
}

TEST_CASE("kernel and weight (anti-)invariance and periodicity") {
    std::mt19937_64 rng(31);
    for (Algebra kind : {Algebra::C2, Algebra::G2}) {
        const WeylSystem& sys = weyl_system(kind);
        for (Family fam : kAllFamilies) {
            const Subgroup& ker = sys.subgroup(family_kernel(fam));
            const std::optional<SignHom> twist = family_twist(fam);
            for (int t = 0; t < 25; ++t) {
                Vec2i la = random_weight(rng);
                Vec2q xq{Rat(std::uniform_int_distribution<i64>(-20, 20)(rng), 12),
                         Rat(std::uniform_int_distribution<i64>(-20, 20)(rng), 12)};
                EvalPoint x = EvalPoint::rational(xq);
                Complex base = xi(fam, la, x, kind);

                for (const GroupElement& w : ker.elements) {
                    double s = twist ? sign(*twist, w, *sys.data) : 1.0;
                    // argument (anti-)invariance
                    EvalPoint wx = EvalPoint::rational(to_rat(w.alphavee) * xq);
                    CHECK(std::abs(xi(fam, la, wx, kind) - s * base) < 1e-12);
                    // weight (anti-)invariance
                    CHECK(std::abs(xi(fam, w.omega * la, x, kind) - s * base) < 1e-12);
                }

                // periodicity under Q^vee shifts
                std::uniform_int_distribution<i64> shift(-3, 3);
                Vec2q xs = xq + Vec2q{Rat(shift(rng)), Rat(shift(rng))};
                CHECK(std::abs(xi(fam, la, EvalPoint::rational(xs), kind) - base) < 1e-12);
            }
        }
    }
}

TEST_CASE("boundary zero sets") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<i64> num(0, 24);
    for (Algebra kind : {Algebra::C2, Algebra::G2}) {
        const DomainSpec& spec = domain_spec(kind);
        // rational points on the three closed edges of F
        auto edge_point = [&](const Vec2q& v0, const Vec2q& v1, i64 n, i64 den) {
            Rat t(n, den);
            return v0 + t * (v1 - v0);
        };
        const Vec2q O = spec.vertices_F[0], A = spec.vertices_F[1], B = spec.vertices_F[2];
        for (int t = 0; t < 40; ++t) {
            Vec2i la = random_weight(rng);
            i64 n = num(rng);
            // Y_s: the edge fixed by r_s carries <x, alpha_s> = 0.  Zero set of l-.
            Vec2q ys = kind == Algebra::C2 ? edge_point(O, B, n, 24) : edge_point(O, A, n, 24);
            REQUIRE(spec.mirror_s(ys) == Rat(0));
            CHECK(std::abs(xi(Family::LMinus, la, EvalPoint::rational(ys), kind)) < 1e-12);

            // Y_l and Y_0: zero set of s-.
            Vec2q yl = kind == Algebra::C2 ? edge_point(O, A, n, 24) : edge_point(O, B, n, 24);
            REQUIRE(spec.mirror_l(yl) == Rat(0));
            CHECK(std::abs(xi(Family::SMinus, la, EvalPoint::rational(yl), kind)) < 1e-12);
            Vec2q y0 = edge_point(A, B, n, 24);
            REQUIRE(spec.level(y0) == Rat(1));
            CHECK(std::abs(xi(Family::SMinus, la, EvalPoint::rational(y0), kind)) < 1e-12);

            // e-: zeros on (Y_l u Y_0) n Y_s, which is the pair of vertices O and
            // the corner of Y_s on Y_0.
            CHECK(std::abs(xi(Family::EMinus, la, EvalPoint::rational(O), kind)) < 1e-12);
            Vec2q corner = kind == Algebra::C2 ? B : A;
            REQUIRE(spec.mirror_s(corner) == Rat(0));
            REQUIRE(spec.level(corner) == Rat(1));
            CHECK(std::abs(xi(Family::EMinus, la, EvalPoint::rational(corner), kind)) < 1e-12);
        }
    }
}
