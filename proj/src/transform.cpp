#include "xifn/transform.hpp"

#include <map>
#include <numbers>
#include <stdexcept>

namespace xifn {

namespace {

Complex e_reduced(const Rat& t) { return unit_phase(to_double(rat_frac(t))); }

// g(t) = (e^{2 pi i t} - 1) / (2 pi i t), g(0) = 1
Complex g_kernel(const Rat& t) {
    if (t == Rat(0)) return 1.0;
    const Complex z(0.0, 2.0 * std::numbers::pi * to_double(t));
    return (e_reduced(t) - Complex(1.0)) / z;
}

// Integral of e^{2 pi i (alpha s + beta t)} over the standard simplex
// {s,t >= 0, s+t <= 1}.
Complex simplex_exp(const Rat& alpha, const Rat& beta) {
    const Rat zero(0);
    if (alpha == zero && beta == zero) return 0.5;
    if (beta == zero) {
        const Complex z(0.0, 2.0 * std::numbers::pi * to_double(alpha));
        return (g_kernel(alpha) - Complex(1.0)) / z;
    }
    const Complex z(0.0, 2.0 * std::numbers::pi * to_double(beta));
    return (e_reduced(beta) * g_kernel(alpha - beta) - g_kernel(alpha)) / z;
}

}  // namespace

Complex triangle_exp_integral(const Rat& p, const Rat& q, const std::array<Vec2q, 3>& tri) {
    const Vec2q e1 = tri[1] - tri[0], e2 = tri[2] - tri[0];
    const Rat det = e1.x * e2.y - e1.y * e2.x;
    if (det == Rat(0)) throw std::invalid_argument("triangle_exp_integral: degenerate triangle");
    const Rat c0 = p * tri[0].x + q * tri[0].y;
    const Rat alpha = p * e1.x + q * e1.y;
    const Rat beta = p * e2.x + q * e2.y;
    const double jac = std::abs(to_double(det));
    return jac * e_reduced(c0) * simplex_exp(alpha, beta);
}

Complex continuous_inner(Family fam, const Vec2i& lambda, const Vec2i& mu, Algebra kind) {
    if (!weight_in_cone(lambda, kind, fam) || !weight_in_cone(mu, kind, fam))
        throw std::domain_error("continuous_inner: weight outside the cone P_" + to_string(fam) +
                                ", orthogonality is not guaranteed there");
    const WeylSystem& sys = weyl_system(kind);
    const Subgroup& ker = sys.subgroup(family_kernel(fam));
    const std::optional<SignHom> twist = family_twist(fam);

    // Collect signed frequencies w lambda - w' mu of the expanded product.
    std::map<Vec2i, double> freq;
    for (const GroupElement& w : ker.elements) {
        const double sw = twist ? sign(*twist, w, *sys.data) : 1;
        const Vec2i wl = w.omega * lambda;
        for (const GroupElement& wp : ker.elements) {
            const double swp = twist ? sign(*twist, wp, *sys.data) : 1;
            freq[wl - wp.omega * mu] += sw * swp;
        }
    }

    const auto tris = family_triangles(kind, fam);
    Complex total = 0.0;
    for (const auto& [v, coeff] : freq) {
        if (coeff == 0.0) continue;
        Complex part = triangle_exp_integral(Rat(v.x), Rat(v.y), tris[0]) +
                       triangle_exp_integral(Rat(v.x), Rat(v.y), tris[1]);
        total += coeff * part;
    }
    return jacobian_alphavee(*sys.data) * total;
}

double continuous_orthogonality_constant(Family fam, const Vec2i& lambda, Algebra kind) {
    const WeylSystem& sys = weyl_system(kind);
    const double K = sys.data->K.value();
    if (fam == Family::SMinus || fam == Family::LMinus) return K;
    const Subgroup& ker = sys.subgroup(family_kernel(fam));
    return K * static_cast<double>(stab_order_d(ker, lambda));
}

Complex pairwise_sum(std::span<const Complex> v) {
    if (v.size() <= 8) {
        Complex s = 0.0;
        for (const Complex& c : v) s += c;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

DiscreteSetup make_discrete_setup(Algebra kind, Family fam, i64 M) {
    const WeylSystem& sys = weyl_system(kind);
    const Subgroup& ker = sys.subgroup(family_kernel(fam));

    DiscreteSetup s;
    s.alg = kind;
    s.fam = fam;
    s.M = M;
    s.grid = grid_points(kind, fam, M);
    s.weights = weight_points(kind, fam, M);

    s.eps.reserve(s.grid.size());
    for (const GridPoint& g : s.grid)
        s.eps.push_back(orbit_size_torus(ker, TorusPoint::reduce(g.alphavee)));
    s.h.reserve(s.weights.size());
    for (const WeightPoint& w : s.weights) s.h.push_back(stab_order_h(ker, w.omega, M, *sys.data));

    s.E.resize(s.weights.size());
    for (std::size_t li = 0; li < s.weights.size(); ++li) {
        s.E[li].resize(s.grid.size());
        for (std::size_t xi_ = 0; xi_ < s.grid.size(); ++xi_)
            s.E[li][xi_] = xi(fam, s.weights[li].omega, EvalPoint::rational(s.grid[xi_].alphavee),
                              kind);
    }
    return s;
}

namespace {

void require_match(Algebra alg, Family fam, i64 M, const DiscreteSetup& setup, const char* what) {
    if (alg != setup.alg || fam != setup.fam || M != setup.M)
        throw std::invalid_argument(std::string(what) +
                                    ": vector does not match the transform setup (algebra/family/M)");
}

}  // namespace

CoeffVector forward_discrete(const SampleVector& samples, const DiscreteSetup& setup) {
    require_match(samples.alg, samples.fam, samples.M, setup, "forward_discrete");
    if (samples.values.size() != setup.grid.size())
        throw std::invalid_argument("forward_discrete: incomplete sample vector (expected " +
                                    std::to_string(setup.grid.size()) + " grid values, got " +
                                    std::to_string(samples.values.size()) + ")");
    const RootData& data = root_data(setup.alg);
    const double kM2 = static_cast<double>(data.k) * static_cast<double>(setup.M) *
                       static_cast<double>(setup.M);

    CoeffVector out{setup.alg, setup.fam, setup.M, {}};
    out.values.resize(setup.weights.size());
    std::vector<Complex> terms(setup.grid.size());
    for (std::size_t li = 0; li < setup.weights.size(); ++li) {
        for (std::size_t xi_ = 0; xi_ < setup.grid.size(); ++xi_)
            terms[xi_] = static_cast<double>(setup.eps[xi_]) * samples.values[xi_] *
                         std::conj(setup.E[li][xi_]);
        out.values[li] = pairwise_sum(terms) / (kM2 * static_cast<double>(setup.h[li]));
    }
    return out;
}

SampleVector inverse_discrete(const CoeffVector& coeffs, const DiscreteSetup& setup) {
    require_match(coeffs.alg, coeffs.fam, coeffs.M, setup, "inverse_discrete");
    if (coeffs.values.size() != setup.weights.size())
        throw std::invalid_argument("inverse_discrete: incomplete coefficient vector (expected " +
                                    std::to_string(setup.weights.size()) + " weight values, got " +
                                    std::to_string(coeffs.values.size()) + ")");
    SampleVector out{setup.alg, setup.fam, setup.M, {}};
    out.values.resize(setup.grid.size());
    std::vector<Complex> terms(setup.weights.size());
    for (std::size_t xi_ = 0; xi_ < setup.grid.size(); ++xi_) {
        for (std::size_t li = 0; li < setup.weights.size(); ++li)
            terms[li] = coeffs.values[li] * setup.E[li][xi_];
        out.values[xi_] = pairwise_sum(terms);
    }
    return out;
}

CoeffVector forward_discrete(const SampleVector& samples) {
    return forward_discrete(samples, make_discrete_setup(samples.alg, samples.fam, samples.M));
}

SampleVector inverse_discrete(const CoeffVector& coeffs) {
    return inverse_discrete(coeffs, make_discrete_setup(coeffs.alg, coeffs.fam, coeffs.M));
}

std::vector<std::vector<Complex>> gram_discrete(const DiscreteSetup& setup) {
    const std::size_t n = setup.weights.size();
    std::vector<std::vector<Complex>> gram(n, std::vector<Complex>(n));
    std::vector<Complex> terms(setup.grid.size());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t xi_ = 0; xi_ < setup.grid.size(); ++xi_)
                terms[xi_] = static_cast<double>(setup.eps[xi_]) * setup.E[i][xi_] *
                             std::conj(setup.E[j][xi_]);
            gram[i][j] = pairwise_sum(terms);
        }
    }
    return gram;
}

}  // namespace xifn
