#pragma once

#include <vector>

#include "xifn/algebra.hpp"

namespace xifn {

// W -> {±1}.  Identity is trivial; SigmaE is the determinant; SigmaS/SigmaL
// count the parity of short/long reflections in a word.
enum class SignHom { Identity, SigmaE, SigmaS, SigmaL };

enum class SubgroupLabel { We, Ws, Wl };

struct GroupElement {
    std::vector<int> word;  // generator indices, a reduced expression
    Mat2i omega;            // action on omega-coordinates (weights)
    Mat2i alphavee;         // action on alpha^vee-coordinates (torus)
    int det = 1;            // cached sigma^e value
};

struct Subgroup {
    SubgroupLabel label;
    std::vector<GroupElement> elements;  // closed under composition, contains 1
};

// Full Weyl group as distinct matrices with reduced words; order 8 for C2,
// 12 for G2.
std::vector<GroupElement> generate_group(Algebra kind);

// Matrices of the generating reflection r_i (i = 0, 1 in basis order) acting
// on the three integer coordinate systems.
Mat2i generator_omega(const RootData& data, int i);
Mat2i generator_alphavee(const RootData& data, int i);
Mat2i generator_omegavee(const RootData& data, int i);

int sign(SignHom hom, const GroupElement& w, const RootData& data);

// Kernel of a nontrivial sign homomorphism; index 2 in W.
Subgroup kernel(SignHom hom, const std::vector<GroupElement>& group, const RootData& data);

struct OrbitEntry {
    const GroupElement* g;
    Vec2i image;
};

// All pairs (w, w lambda), duplicates retained: |sub| entries.
std::vector<OrbitEntry> orbit_weight(const Subgroup& sub, const Vec2i& lambda_omega);

// |{w in sub : w lambda = lambda}|
i64 stab_order_d(const Subgroup& sub, const Vec2i& lambda_omega);

// Point of the torus R^2/Q^vee in alpha^vee coordinates: num/den with
// 0 <= num < den componentwise.  Q^vee is the integer lattice in this basis.
struct TorusPoint {
    Vec2i num;
    i64 den = 1;

    static TorusPoint reduce(const Vec2q& x_alphavee);
    friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
    friend bool operator<(const TorusPoint& a, const TorusPoint& b) {
        if (a.den != b.den) return a.den < b.den;
        return a.num < b.num;
    }
};

// epsilon^sigma(x): number of distinct images of x under sub on the torus.
i64 orbit_size_torus(const Subgroup& sub, const TorusPoint& x);

// h^{sigma^vee}_lambda: |{w in sub : w lambda ≡ lambda (mod M Q)}|.
// Membership in MQ is the integer-only test adj(Cᵀ) v ≡ 0 (mod M det C).
i64 stab_order_h(const Subgroup& sub, const Vec2i& lambda_omega, i64 M, const RootData& data);

// Per-algebra cache of the group and its three even subgroups.
struct WeylSystem {
    const RootData* data;
    std::vector<GroupElement> group;
    std::array<Subgroup, 3> kernels;  // indexed by SubgroupLabel

    const Subgroup& subgroup(SubgroupLabel label) const {
        return kernels[static_cast<int>(label)];
    }
};

const WeylSystem& weyl_system(Algebra kind);

}  // namespace xifn
