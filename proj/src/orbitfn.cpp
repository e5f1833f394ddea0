#include "xifn/orbitfn.hpp"

#include <cmath>
#include <numbers>

namespace xifn {

Complex unit_phase(double turns) {
    const double th = 2.0 * std::numbers::pi * turns;
    return {std::cos(th), std::sin(th)};
}

namespace {

Complex phase_term(const Vec2i& mu, const EvalPoint& x) {
    if (x.exact) return unit_phase(to_double(rat_frac(pairing(mu, x.q))));
    return unit_phase(pairing(mu, x.d));
}

}  // namespace

Complex psi(SignHom hom, const Vec2i& lambda, const EvalPoint& x, Algebra kind) {
    const WeylSystem& sys = weyl_system(kind);
    Complex sum = 0.0;
    for (const GroupElement& w : sys.group)
        sum += static_cast<double>(sign(hom, w, *sys.data)) * phase_term(w.omega * lambda, x);
    return sum;
}

Complex xi(Family fam, const Vec2i& lambda, const EvalPoint& x, Algebra kind) {
    const WeylSystem& sys = weyl_system(kind);
    const Subgroup& ker = sys.subgroup(family_kernel(fam));
    const std::optional<SignHom> twist = family_twist(fam);
    Complex sum = 0.0;
    for (const GroupElement& w : ker.elements) {
        double s = twist ? static_cast<double>(sign(*twist, w, *sys.data)) : 1.0;
        sum += s * phase_term(w.omega * lambda, x);
    }
    return sum;
}

namespace {

double cos2pi(double t) { return std::cos(2.0 * std::numbers::pi * t); }
double sin2pi(double t) { return std::sin(2.0 * std::numbers::pi * t); }
Complex e2pi(double t) { return unit_phase(t); }

Complex closed_form_c2(Family fam, double a, double b, double x, double y) {
    switch (fam) {
        case Family::EPlus:
            return 2.0 * (cos2pi(a * x + b * y) + cos2pi((a + 2 * b) * x - (a + b) * y));
        case Family::EMinus:
            return 2.0 * (cos2pi(a * x + b * y) - cos2pi((a + 2 * b) * x - (a + b) * y));
        case Family::SPlus:
            return 2.0 * (cos2pi(a * x + b * y) + cos2pi((a + 2 * b) * x - b * y));
        case Family::SMinus:
            return 2.0 * (cos2pi(a * x + b * y) - cos2pi((a + 2 * b) * x - b * y));
        case Family::LPlus:
            return 2.0 * (cos2pi(a * x + b * y) + cos2pi(a * x - (a + b) * y));
        case Family::LMinus:
            return 2.0 * (cos2pi(a * x + b * y) - cos2pi(a * x - (a + b) * y));
    }
    return 0.0;
}

Complex closed_form_g2(Family fam, double a, double b, double x, double y,
                       ClosedFormReading reading) {
    switch (fam) {
        case Family::EPlus:
            return 2.0 * (cos2pi(a * x + b * y) + cos2pi((2 * a + b) * x - (3 * a + b) * y) +
                          cos2pi((a + b) * x - (3 * a + 2 * b) * y));
        case Family::EMinus: {
            double last = reading == ClosedFormReading::Corrected
                              ? (a + b) * x - (3 * a + 2 * b) * y
                              : (a + b) * x - (3 * a + 2 * b) * x;
            double s = sin2pi(a * x + b * y) + sin2pi((3 * a + b) * y - (2 * a + b) * x) +
                       sin2pi(last);
            return Complex(0.0, 2.0 * s);
        }
        case Family::SPlus:
            return e2pi(a * x + b * y) + e2pi(-a * x + (3 * a + b) * y) +
                   e2pi((2 * a + b) * x - (3 * a + 2 * b) * y) +
                   e2pi((a + b) * x - (3 * a + 2 * b) * y) +
                   e2pi(-(2 * a + b) * x + (3 * a + b) * y) + e2pi(-(a + b) * x + b * y);
        case Family::SMinus:
            return e2pi(a * x + b * y) - e2pi(-a * x + (3 * a + b) * y) -
                   e2pi((2 * a + b) * x - (3 * a + 2 * b) * y) +
                   e2pi((a + b) * x - (3 * a + 2 * b) * y) +
                   e2pi(-(2 * a + b) * x + (3 * a + b) * y) - e2pi(-(a + b) * x + b * y);
        case Family::LPlus:
            return e2pi(a * x + b * y) + e2pi((a + b) * x - b * y) +
                   e2pi(-(2 * a + b) * x + (3 * a + 2 * b) * y) +
                   e2pi((a + b) * x - (3 * a + 2 * b) * y) +
                   e2pi(-(2 * a + b) * x + (3 * a + b) * y) + e2pi(a * x - (3 * a + b) * y);
        case Family::LMinus:
            return e2pi(a * x + b * y) - e2pi((a + b) * x - b * y) -
                   e2pi(-(2 * a + b) * x + (3 * a + 2 * b) * y) +
                   e2pi((a + b) * x - (3 * a + 2 * b) * y) +
                   e2pi(-(2 * a + b) * x + (3 * a + b) * y) - e2pi(a * x - (3 * a + b) * y);
    }
    return 0.0;
}

}  // namespace

Complex xi_closed_form(Algebra kind, Family fam, const Vec2i& lambda, const Vec2d& x,
                       ClosedFormReading reading) {
    const double a = static_cast<double>(lambda.x), b = static_cast<double>(lambda.y);
    if (kind == Algebra::C2) return closed_form_c2(fam, a, b, x.x, x.y);
    return closed_form_g2(fam, a, b, x.x, x.y, reading);
}

}  // namespace xifn
