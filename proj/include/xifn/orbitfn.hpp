#pragma once

#include <complex>

#include "xifn/domains.hpp"

namespace xifn {

using Complex = std::complex<double>;

// Evaluation point in alpha^vee coordinates.  Exact points keep their
// rational phases: <w lambda, x> is reduced mod 1 before exponentiation, so
// grid sums reproduce bit-for-bit.
struct EvalPoint {
    bool exact = false;
    Vec2q q;  // valid when exact
    Vec2d d;

    static EvalPoint rational(const Vec2q& x) { return {true, x, to_double(x)}; }
    static EvalPoint real(const Vec2d& x) { return {false, {}, x}; }
};

// e^{2 pi i t} for t in turns.
Complex unit_phase(double turns);

// psi^sigma_lambda(x) = sum over the FULL Weyl group of sigma(w) e^{2pi i <w lambda, x>}.
Complex psi(SignHom hom, const Vec2i& lambda, const EvalPoint& x, Algebra kind);

// Xi^{sigma±}_lambda(x): sum over the family kernel, twisted for the minus
// families.  Any lambda in P is accepted.
Complex xi(Family fam, const Vec2i& lambda, const EvalPoint& x, Algebra kind);

// Reading of the explicit G2 e- formula: the corrected final argument
// (a+b)x - (3a+2b)y, or the text as published with a trailing x in place of y.
enum class ClosedFormReading { Corrected, AsPublished };

// The explicit per-family trigonometric forms, evaluated verbatim.
Complex xi_closed_form(Algebra kind, Family fam, const Vec2i& lambda, const Vec2d& x,
                       ClosedFormReading reading = ClosedFormReading::Corrected);

}  // namespace xifn
