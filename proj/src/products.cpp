#include "xifn/products.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace xifn {

namespace {

Family plus_family(SubgroupLabel kernel) {
    switch (kernel) {
        case SubgroupLabel::We: return Family::EPlus;
        case SubgroupLabel::Ws: return Family::SPlus;
        default: return Family::LPlus;
    }
}

Family minus_family(SubgroupLabel kernel) {
    switch (kernel) {
        case SubgroupLabel::We: return Family::EMinus;
        case SubgroupLabel::Ws: return Family::SMinus;
        default: return Family::LMinus;
    }
}

}  // namespace

SignedWeightSum decompose(Family left, Family right, const Vec2i& lambda, const Vec2i& lambda_p,
                          Algebra kind) {
    const SubgroupLabel kl = family_kernel(left);
    if (kl != family_kernel(right))
        throw std::invalid_argument("decompose: " + to_string(left) + " and " + to_string(right) +
                                    " do not share a kernel; no decomposition identity exists");
    const WeylSystem& sys = weyl_system(kind);
    const Subgroup& ker = sys.subgroup(kl);

    // The twisting sign enters through the right factor; the target family is
    // plus when the factor signs agree and minus otherwise.
    const bool left_minus = family_is_minus(left), right_minus = family_is_minus(right);
    const Family target = left_minus == right_minus ? plus_family(kl) : minus_family(kl);
    const SignHom mix = *family_twist(minus_family(kl));

    SignedWeightSum out{target, {}};
    out.terms.reserve(ker.elements.size());
    for (const GroupElement& w : ker.elements) {
        const int s = right_minus ? sign(mix, w, *sys.data) : 1;
        out.terms.push_back({s, lambda + w.omega * lambda_p});
    }
    return out;
}

double verify_decomposition(const SignedWeightSum& d, Family left, Family right,
                            const Vec2i& lambda, const Vec2i& lambda_p, Algebra kind, int trials,
                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    double max_err = 0.0;
    for (int t = 0; t < trials; ++t) {
        const EvalPoint x = EvalPoint::real({coord(rng), coord(rng)});
        const Complex lhs = xi(left, lambda, x, kind) * xi(right, lambda_p, x, kind);
        Complex rhs = 0.0;
        for (const SignedWeightTerm& term : d.terms)
            rhs += static_cast<double>(term.sign) * xi(d.target, term.weight, x, kind);
        max_err = std::max(max_err, std::abs(lhs - rhs));
    }
    return max_err;
}

}  // namespace xifn
