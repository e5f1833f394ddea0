#pragma once

#include <cstdint>
#include <vector>

#include "xifn/orbitfn.hpp"

namespace xifn {

struct SignedWeightTerm {
    int sign;      // ±1
    Vec2i weight;  // lambda + w lambda', omega-coordinates
};

struct SignedWeightSum {
    Family target;
    std::vector<SignedWeightTerm> terms;  // one per kernel element
};

// Decomposition of Xi_lambda * Xi_lambda' into a signed sum of Xi functions.
// Both factors must share the kernel letter (e, s or l).  The terms are the
// raw lambda + w lambda' values, not folded to dominant representatives.
SignedWeightSum decompose(Family left, Family right, const Vec2i& lambda, const Vec2i& lambda_p,
                          Algebra kind);

// max over random x of |Xi_lambda Xi_lambda' - sum sign Xi_term|
double verify_decomposition(const SignedWeightSum& d, Family left, Family right,
                            const Vec2i& lambda, const Vec2i& lambda_p, Algebra kind, int trials,
                            std::uint64_t seed);

}  // namespace xifn
