#pragma once

#include <span>
#include <vector>

#include "xifn/orbitfn.hpp"

namespace xifn {

// Exact value of the integral of e^{2 pi i (p u + q v)} over a triangle with
// rational vertices, in coordinate (not Euclidean) measure.  The degenerate
// phase branches (frequency zero along an edge or overall) are closed forms,
// selected by exact rational tests.
Complex triangle_exp_integral(const Rat& p, const Rat& q, const std::array<Vec2q, 3>& tri);

// Integral of Xi_lambda conj(Xi_mu) over F^{sigma±} in Euclidean measure,
// by expanding both kernel sums and integrating each exponential over the two
// triangles analytically.  Throws if a weight is outside P_{sigma±}.
Complex continuous_inner(Family fam, const Vec2i& lambda, const Vec2i& mu, Algebra kind);

// The published diagonal value: K d^sigma_lambda for the plus families and e-,
// plain K for s- and l-.
double continuous_orthogonality_constant(Family fam, const Vec2i& lambda, Algebra kind);

struct SampleVector {
    Algebra alg;
    Family fam;
    i64 M;
    std::vector<Complex> values;  // aligned with grid_points(alg, fam, M)
};

struct CoeffVector {
    Algebra alg;
    Family fam;
    i64 M;
    std::vector<Complex> values;  // aligned with weight_points(alg, fam, M)
};

// Everything the discrete transforms need for one (algebra, family, M):
// the grid, the weights, epsilon and h factors computed from orbit counting,
// and the matrix of Xi values.
struct DiscreteSetup {
    Algebra alg;
    Family fam;
    i64 M;
    std::vector<GridPoint> grid;
    std::vector<WeightPoint> weights;
    std::vector<i64> eps;                // epsilon^sigma(x) per grid point
    std::vector<i64> h;                  // h^{sigma^vee}_lambda per weight
    std::vector<std::vector<Complex>> E; // E[lambda][x] = Xi_lambda(x)
};

DiscreteSetup make_discrete_setup(Algebra kind, Family fam, i64 M);

// c_lambda = (1 / (k M^2 h_lambda)) sum_x epsilon(x) f(x) conj(Xi_lambda(x))
CoeffVector forward_discrete(const SampleVector& samples, const DiscreteSetup& setup);
// f(x) = sum_lambda c_lambda Xi_lambda(x)
SampleVector inverse_discrete(const CoeffVector& coeffs, const DiscreteSetup& setup);

CoeffVector forward_discrete(const SampleVector& samples);
SampleVector inverse_discrete(const CoeffVector& coeffs);

// G[lambda][mu] = sum_x epsilon(x) Xi_lambda(x) conj(Xi_mu(x))
std::vector<std::vector<Complex>> gram_discrete(const DiscreteSetup& setup);

Complex pairwise_sum(std::span<const Complex> v);

}  // namespace xifn
