#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "xifn/weyl.hpp"

namespace xifn {

// The six families of generalized E-functions.
enum class Family { EPlus, EMinus, SPlus, SMinus, LPlus, LMinus };

constexpr std::array<Family, 6> kAllFamilies = {Family::EPlus,  Family::EMinus, Family::SPlus,
                                                Family::SMinus, Family::LPlus,  Family::LMinus};

SubgroupLabel family_kernel(Family fam);
// Twisting sign for the mixed (minus) families, restricted to the kernel;
// none for the plus families.  On W^e, sigma^s and sigma^l agree, so either
// works for e-; sigma^s is used.
std::optional<SignHom> family_twist(Family fam);
bool family_is_minus(Family fam);
// Generator index of the reflection producing the second sheet (r_s for the
// e and s families, r_l for the l families).
int family_reflection_index(Family fam, const RootData& data);

std::string to_string(Family fam);
std::string to_string(Algebra kind);
Family parse_family(const std::string& s);
Algebra parse_algebra(const std::string& s);

enum class Sheet { Base, Reflected };

// Point of F_M^{sigma±}: the parametrization triple [c,a,b], the sheet, and
// exact coordinates (omega^vee with denominator M; alpha^vee with denominator
// M det C).
struct GridPoint {
    std::array<i64, 3> cab;
    Sheet sheet = Sheet::Base;
    Vec2q omegavee;
    Vec2q alphavee;
};

struct WeightPoint {
    std::array<i64, 3> cab;
    Sheet sheet = Sheet::Base;
    Vec2i omega;
};

// The plain sets F_M and Lambda_M (base parametrizations, no family).
std::vector<GridPoint> plain_grid(Algebra kind, i64 M);
std::vector<WeightPoint> plain_weights(Algebra kind, i64 M);

// The family grids F_M^{sigma±} and weight sets Lambda_M^{sigma±}, exactly as
// the published two-sheet parametrizations, duplicates rejected.
std::vector<GridPoint> grid_points(Algebra kind, Family fam, i64 M);
std::vector<WeightPoint> weight_points(Algebra kind, Family fam, i64 M);

// [c,a,b] triples excluded from the base sheet at this M (nonempty only for
// e-; the half-M exclusions appear only when M is even).
std::vector<std::array<i64, 3>> grid_exclusions(Algebra kind, Family fam, i64 M);
std::vector<std::array<i64, 3>> weight_exclusions(Algebra kind, Family fam, i64 M);

enum class Membership { InteriorBase, Boundary, Reflected, Outside };

// Classification of an exact point (alpha^vee coordinates) against the
// half-open domain F^{sigma±}.
Membership domain_membership(const Vec2q& x_alphavee, Algebra kind, Family fam);

// lambda in the weight cone P_{sigma±}.
bool weight_in_cone(const Vec2i& lambda_omega, Algebra kind, Family fam);

// Reflection codes returned by fold_to_F: 0/1 = generators, 2 = the affine
// reflection r_0.
inline constexpr int kAffineReflection = 2;

struct FoldResult {
    Vec2q point;                  // image in F, alpha^vee coordinates
    std::vector<int> reflections; // applied left to right
};

// Image of x under the affine Weyl group lying in F.
FoldResult fold_to_F(const Vec2q& x_alphavee, Algebra kind);

// Apply one fold reflection (generator or r_0) to a point.
Vec2q apply_fold_reflection(const Vec2q& x_alphavee, int code, Algebra kind);

struct DomainSpec {
    Algebra kind;
    std::array<Vec2q, 3> vertices_F;        // alpha^vee coordinates
    std::array<Vec2q, 3> vertices_Fvee;     // omega coordinates
    double euclidean_area_F;

    // Mirror values: <x,alpha_s>, <x,alpha_l>, <x,xi> for x in alpha^vee
    // coordinates; the F boundary is alpha_s = 0, alpha_l = 0, xi = 1.
    Rat mirror_s(const Vec2q& x_alphavee) const;
    Rat mirror_l(const Vec2q& x_alphavee) const;
    Rat level(const Vec2q& x_alphavee) const;
    bool in_F(const Vec2q& x_alphavee) const;

    // Dual counterparts on weight space (omega coordinates): the F^vee
    // boundary is the short coordinate = 0, long coordinate = 0, <x,eta> = 1.
    Rat dual_mirror_s(const Vec2q& lambda_omega) const;
    Rat dual_mirror_l(const Vec2q& lambda_omega) const;
    Rat dual_level(const Vec2q& lambda_omega) const;
    bool in_Fvee(const Vec2q& lambda_omega) const;
};

const DomainSpec& domain_spec(Algebra kind);

// sqrt(det Gram(alpha^vee)): the area element of alpha^vee coordinates.
double jacobian_alphavee(const RootData& data);

// The two triangles composing F^{sigma±} (base F and its reflected copy),
// alpha^vee coordinates.
std::array<std::array<Vec2q, 3>, 2> family_triangles(Algebra kind, Family fam);

}  // namespace xifn
