#include "xifn/domains.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace xifn {

SubgroupLabel family_kernel(Family fam) {
    switch (fam) {
        case Family::EPlus:
        case Family::EMinus:
            return SubgroupLabel::We;
        case Family::SPlus:
        case Family::SMinus:
            return SubgroupLabel::Ws;
        default:
            return SubgroupLabel::Wl;
    }
}

std::optional<SignHom> family_twist(Family fam) {
    switch (fam) {
        case Family::EMinus:
            return SignHom::SigmaS;
        case Family::SMinus:
            return SignHom::SigmaL;
        case Family::LMinus:
            return SignHom::SigmaS;
        default:
            return std::nullopt;
    }
}

bool family_is_minus(Family fam) {
    return fam == Family::EMinus || fam == Family::SMinus || fam == Family::LMinus;
}

int family_reflection_index(Family fam, const RootData& data) {
    return family_kernel(fam) == SubgroupLabel::Wl ? data.long_index : data.short_index;
}

std::string to_string(Family fam) {
    switch (fam) {
        case Family::EPlus: return "e+";
        case Family::EMinus: return "e-";
        case Family::SPlus: return "s+";
        case Family::SMinus: return "s-";
        case Family::LPlus: return "l+";
        case Family::LMinus: return "l-";
    }
    return "?";
}

std::string to_string(Algebra kind) { return kind == Algebra::C2 ? "c2" : "g2"; }

Family parse_family(const std::string& s) {
    for (Family f : kAllFamilies)
        if (to_string(f) == s) return f;
    throw std::invalid_argument("unknown family '" + s + "' (expected e+, e-, s+, s-, l+ or l-)");
}

Algebra parse_algebra(const std::string& s) {
    if (s == "c2" || s == "C2") return Algebra::C2;
    if (s == "g2" || s == "G2") return Algebra::G2;
    throw std::invalid_argument("unknown algebra '" + s + "' (expected c2 or g2)");
}

namespace {

struct SheetMins {
    i64 c = 0, a = 0, b = 0;
};

// One excluded [c,a,b] triple, entries as fractions of M.
struct Exclusion {
    std::pair<int, int> c, a, b;  // numerator/denominator of the multiple of M

    std::optional<std::array<i64, 3>> instantiate(i64 M) const {
        std::array<i64, 3> out{};
        const std::pair<int, int> parts[3] = {c, a, b};
        for (int i = 0; i < 3; ++i) {
            i64 num = M * parts[i].first;
            if (num % parts[i].second != 0) return std::nullopt;
            out[i] = num / parts[i].second;
        }
        return out;
    }
};

struct SetRule {
    SheetMins base;
    SheetMins refl;
    std::vector<Exclusion> excluded;  // base sheet only
};

constexpr std::pair<int, int> kZero{0, 1}, kM{1, 1}, kHalfM{1, 2};

// F_M^{sigma±} parametrizations.
SetRule grid_rule(Algebra kind, Family fam) {
    if (kind == Algebra::C2) {
        switch (fam) {
            case Family::EPlus: return {{0, 0, 0}, {1, 1, 1}, {}};
            case Family::EMinus:
                return {{0, 0, 0}, {1, 1, 1}, {{kM, kZero, kZero}, {kZero, kZero, kM}}};
            case Family::SPlus: return {{0, 0, 0}, {0, 1, 0}, {}};
            case Family::SMinus: return {{1, 0, 1}, {1, 1, 1}, {}};
            case Family::LPlus: return {{0, 0, 0}, {1, 0, 1}, {}};
            case Family::LMinus: return {{0, 1, 0}, {1, 1, 1}, {}};
        }
    } else {
        switch (fam) {
            case Family::EPlus: return {{0, 0, 0}, {1, 1, 1}, {}};
            case Family::EMinus:
                return {{0, 0, 0}, {1, 1, 1}, {{kM, kZero, kZero}, {kZero, kHalfM, kZero}}};
            case Family::SPlus: return {{0, 0, 0}, {0, 0, 1}, {}};
            case Family::SMinus: return {{1, 1, 0}, {1, 1, 1}, {}};
            case Family::LPlus: return {{0, 0, 0}, {1, 1, 0}, {}};
            case Family::LMinus: return {{0, 0, 1}, {1, 1, 1}, {}};
        }
    }
    throw std::logic_error("grid_rule");
}

// Lambda_M^{sigma±} parametrizations.
SetRule weight_rule(Algebra kind, Family fam) {
    if (kind == Algebra::C2) {
        switch (fam) {
            case Family::EPlus: return {{0, 0, 0}, {1, 1, 1}, {}};
            case Family::EMinus:
                return {{0, 0, 0}, {1, 1, 1}, {{kM, kZero, kZero}, {kZero, kM, kZero}}};
            case Family::SPlus: return {{0, 0, 0}, {1, 1, 0}, {}};
            case Family::SMinus: return {{0, 0, 1}, {1, 1, 1}, {}};
            case Family::LPlus: return {{0, 0, 0}, {0, 0, 1}, {}};
            case Family::LMinus: return {{1, 1, 0}, {1, 1, 1}, {}};
        }
    } else {
        switch (fam) {
            case Family::EPlus: return {{0, 0, 0}, {1, 1, 1}, {}};
            case Family::EMinus:
                return {{0, 0, 0}, {1, 1, 1}, {{kM, kZero, kZero}, {kZero, kZero, kHalfM}}};
            case Family::SPlus: return {{0, 0, 0}, {1, 0, 1}, {}};
            case Family::SMinus: return {{0, 1, 0}, {1, 1, 1}, {}};
            case Family::LPlus: return {{0, 0, 0}, {0, 1, 0}, {}};
            case Family::LMinus: return {{1, 0, 1}, {1, 1, 1}, {}};
        }
    }
    throw std::logic_error("weight_rule");
}

// Enumerate {[c,a,b] : c + p a + q b = M, componentwise minimums}.
template <class Fn>
void enumerate_cab(i64 M, i64 p, i64 q, const SheetMins& mins, Fn&& fn) {
    for (i64 a = mins.a; p * a <= M; ++a) {
        for (i64 b = mins.b;; ++b) {
            i64 c = M - p * a - q * b;
            if (c < mins.c) break;
            fn(c, a, b);
        }
    }
}

bool is_excluded(const std::vector<Exclusion>& excl, i64 M, i64 c, i64 a, i64 b) {
    for (const Exclusion& e : excl) {
        auto t = e.instantiate(M);
        if (t && (*t)[0] == c && (*t)[1] == a && (*t)[2] == b) return true;
    }
    return false;
}

GridPoint make_grid_point(const RootData& data, i64 M, i64 c, i64 a, i64 b, Sheet sheet,
                          const Mat2q& refl_omegavee) {
    GridPoint p;
    p.cab = {c, a, b};
    p.sheet = sheet;
    p.omegavee = {Rat(a, M), Rat(b, M)};
    if (sheet == Sheet::Reflected) p.omegavee = refl_omegavee * p.omegavee;
    p.alphavee = data.cartan_inv * p.omegavee;
    return p;
}

// Canonical representative of lambda mod MQ, via adj(Cᵀ) lambda mod M det C.
Vec2i mod_MQ_key(const Vec2i& lambda, i64 M, const RootData& data) {
    const Mat2i adj_ct = data.cartan.transpose().adjugate();
    const i64 mod = M * data.det_cartan;
    Vec2i u = adj_ct * lambda;
    u.x %= mod;
    u.y %= mod;
    if (u.x < 0) u.x += mod;
    if (u.y < 0) u.y += mod;
    return u;
}

}  // namespace

std::vector<GridPoint> plain_grid(Algebra kind, i64 M) {
    const RootData& data = root_data(kind);
    std::vector<GridPoint> out;
    enumerate_cab(M, data.highest_root_marks.x, data.highest_root_marks.y, {0, 0, 0},
                  [&](i64 c, i64 a, i64 b) {
                      out.push_back(make_grid_point(data, M, c, a, b, Sheet::Base, {}));
                  });
    return out;
}

std::vector<WeightPoint> plain_weights(Algebra kind, i64 M) {
    const RootData& data = root_data(kind);
    std::vector<WeightPoint> out;
    enumerate_cab(M, data.dual_marks.x, data.dual_marks.y, {0, 0, 0}, [&](i64 c, i64 a, i64 b) {
        out.push_back({{c, a, b}, Sheet::Base, {a, b}});
    });
    return out;
}

std::vector<GridPoint> grid_points(Algebra kind, Family fam, i64 M) {
    if (M < 1) throw std::invalid_argument("grid_points: M must be >= 1");
    const RootData& data = root_data(kind);
    const SetRule rule = grid_rule(kind, fam);
    const i64 p = data.highest_root_marks.x, q = data.highest_root_marks.y;
    const Mat2q refl = to_rat(generator_omegavee(data, family_reflection_index(fam, data)));

    std::vector<GridPoint> out;
    enumerate_cab(M, p, q, rule.base, [&](i64 c, i64 a, i64 b) {
        if (is_excluded(rule.excluded, M, c, a, b)) return;
        out.push_back(make_grid_point(data, M, c, a, b, Sheet::Base, refl));
    });
    enumerate_cab(M, p, q, rule.refl, [&](i64 c, i64 a, i64 b) {
        out.push_back(make_grid_point(data, M, c, a, b, Sheet::Reflected, refl));
    });

    std::set<TorusPoint> distinct;
    for (const GridPoint& g : out) distinct.insert(TorusPoint::reduce(g.alphavee));
    if (distinct.size() != out.size())
        throw std::logic_error("grid_points: sheets overlap mod Q^vee");
    return out;
}

std::vector<WeightPoint> weight_points(Algebra kind, Family fam, i64 M) {
    if (M < 1) throw std::invalid_argument("weight_points: M must be >= 1");
    const RootData& data = root_data(kind);
    const SetRule rule = weight_rule(kind, fam);
    const i64 p = data.dual_marks.x, q = data.dual_marks.y;
    const Mat2i refl = generator_omega(data, family_reflection_index(fam, data));

    std::vector<WeightPoint> out;
    enumerate_cab(M, p, q, rule.base, [&](i64 c, i64 a, i64 b) {
        if (is_excluded(rule.excluded, M, c, a, b)) return;
        out.push_back({{c, a, b}, Sheet::Base, {a, b}});
    });
    enumerate_cab(M, p, q, rule.refl, [&](i64 c, i64 a, i64 b) {
        out.push_back({{c, a, b}, Sheet::Reflected, refl * Vec2i{a, b}});
    });

    std::set<Vec2i> distinct;
    for (const WeightPoint& w : out) distinct.insert(mod_MQ_key(w.omega, M, data));
    if (distinct.size() != out.size())
        throw std::logic_error("weight_points: sheets overlap mod MQ");
    return out;
}

namespace {

std::vector<std::array<i64, 3>> instantiate_exclusions(const SetRule& rule, i64 M) {
    std::vector<std::array<i64, 3>> out;
    for (const Exclusion& e : rule.excluded)
        if (auto t = e.instantiate(M)) out.push_back(*t);
    return out;
}

}  // namespace

std::vector<std::array<i64, 3>> grid_exclusions(Algebra kind, Family fam, i64 M) {
    return instantiate_exclusions(grid_rule(kind, fam), M);
}

std::vector<std::array<i64, 3>> weight_exclusions(Algebra kind, Family fam, i64 M) {
    return instantiate_exclusions(weight_rule(kind, fam), M);
}

Rat DomainSpec::mirror_s(const Vec2q& x) const {
    const RootData& d = root_data(kind);
    Vec2q cx = d.cartan_q * x;
    return d.short_index == 0 ? cx.x : cx.y;
}

Rat DomainSpec::mirror_l(const Vec2q& x) const {
    const RootData& d = root_data(kind);
    Vec2q cx = d.cartan_q * x;
    return d.long_index == 0 ? cx.x : cx.y;
}

Rat DomainSpec::level(const Vec2q& x) const {
    const RootData& d = root_data(kind);
    Vec2q cx = d.cartan_q * x;
    return Rat(d.highest_root_marks.x) * cx.x + Rat(d.highest_root_marks.y) * cx.y;
}

bool DomainSpec::in_F(const Vec2q& x) const {
    return mirror_s(x) >= Rat(0) && mirror_l(x) >= Rat(0) && level(x) <= Rat(1);
}

Rat DomainSpec::dual_mirror_s(const Vec2q& la) const {
    const RootData& d = root_data(kind);
    return d.short_index == 0 ? la.x : la.y;
}

Rat DomainSpec::dual_mirror_l(const Vec2q& la) const {
    const RootData& d = root_data(kind);
    return d.long_index == 0 ? la.x : la.y;
}

Rat DomainSpec::dual_level(const Vec2q& la) const {
    // <lambda, eta> with eta = sum m^vee_i alpha^vee_i is diagonal in omega coords.
    const RootData& d = root_data(kind);
    return Rat(d.dual_marks.x) * la.x + Rat(d.dual_marks.y) * la.y;
}

bool DomainSpec::in_Fvee(const Vec2q& la) const {
    return la.x >= Rat(0) && la.y >= Rat(0) && dual_level(la) <= Rat(1);
}

double jacobian_alphavee(const RootData& data) {
    // Gram(alpha^vee)_ij = 2 C_ij / <alpha_i, alpha_i>
    Mat2q g = {Rat(2) * Rat(data.cartan.a) / data.root_norms[0],
               Rat(2) * Rat(data.cartan.b) / data.root_norms[0],
               Rat(2) * Rat(data.cartan.c) / data.root_norms[1],
               Rat(2) * Rat(data.cartan.d) / data.root_norms[1]};
    return std::sqrt(to_double(g.det()));
}

const DomainSpec& domain_spec(Algebra kind) {
    static const auto build = [](Algebra k) {
        const RootData& d = root_data(k);
        DomainSpec s;
        s.kind = k;
        Vec2q col1{d.cartan_inv.a, d.cartan_inv.c}, col2{d.cartan_inv.b, d.cartan_inv.d};
        s.vertices_F = {Vec2q{Rat(0), Rat(0)}, Rat(1, d.highest_root_marks.x) * col1,
                        Rat(1, d.highest_root_marks.y) * col2};
        s.vertices_Fvee = {Vec2q{Rat(0), Rat(0)}, Vec2q{Rat(1, d.dual_marks.x), Rat(0)},
                           Vec2q{Rat(0), Rat(1, d.dual_marks.y)}};
        Vec2q e1 = s.vertices_F[1], e2 = s.vertices_F[2];
        Rat uv_area2 = e1.x * e2.y - e1.y * e2.x;
        if (uv_area2 < Rat(0)) uv_area2 = -uv_area2;
        s.euclidean_area_F = 0.5 * to_double(uv_area2) * jacobian_alphavee(d);
        return s;
    };
    static const DomainSpec c2 = build(Algebra::C2);
    static const DomainSpec g2 = build(Algebra::G2);
    return kind == Algebra::C2 ? c2 : g2;
}

namespace {

// Base-sheet membership in F^{sigma±}, stated through the mirror values so the
// same rules serve both algebras.
bool base_sheet_contains(const DomainSpec& spec, Family fam, const Vec2q& x) {
    const Rat s = spec.mirror_s(x), l = spec.mirror_l(x), t = spec.level(x);
    const Rat zero(0), one(1);
    if (s < zero || l < zero || t > one) return false;
    switch (fam) {
        case Family::EPlus:
        case Family::SPlus:
        case Family::LPlus:
            return true;
        case Family::EMinus:
            return !(s == zero && (l == zero || t == one));
        case Family::SMinus:
            return l > zero && t < one;
        case Family::LMinus:
            return s > zero;
    }
    return false;
}

// Conditions the pre-image y = r x must satisfy for x on the reflected sheet.
bool reflected_preimage_ok(const DomainSpec& spec, Family fam, const Vec2q& y) {
    const Rat s = spec.mirror_s(y), l = spec.mirror_l(y), t = spec.level(y);
    const Rat zero(0), one(1);
    switch (fam) {
        case Family::SPlus:
            return s > zero && l >= zero && t <= one;  // F \ Y_s
        case Family::LPlus:
            return s >= zero && l > zero && t < one;  // F \ (Y_l u Y_0)
        default:
            return s > zero && l > zero && t < one;  // interior of F
    }
}

}  // namespace

Membership domain_membership(const Vec2q& x_alphavee, Algebra kind, Family fam) {
    const DomainSpec& spec = domain_spec(kind);
    if (base_sheet_contains(spec, fam, x_alphavee)) {
        const Rat zero(0), one(1);
        bool interior = spec.mirror_s(x_alphavee) > zero && spec.mirror_l(x_alphavee) > zero &&
                        spec.level(x_alphavee) < one;
        return interior ? Membership::InteriorBase : Membership::Boundary;
    }
    const RootData& data = root_data(kind);
    const Mat2q refl = to_rat(generator_alphavee(data, family_reflection_index(fam, data)));
    if (reflected_preimage_ok(spec, fam, refl * x_alphavee)) return Membership::Reflected;
    return Membership::Outside;
}

bool weight_in_cone(const Vec2i& lambda, Algebra kind, Family fam) {
    const RootData& data = root_data(kind);
    auto coord = [&](const Vec2i& v, int idx) { return idx == 0 ? v.x : v.y; };
    i64 s = coord(lambda, data.short_index), l = coord(lambda, data.long_index);

    bool base = false;
    switch (fam) {
        case Family::EPlus:
        case Family::SPlus:
        case Family::LPlus:
            base = s >= 0 && l >= 0;
            break;
        case Family::EMinus:
            base = s >= 0 && l >= 0 && !(s == 0 && l == 0);
            break;
        case Family::SMinus:
            base = s >= 0 && l >= 1;
            break;
        case Family::LMinus:
            base = s >= 1 && l >= 0;
            break;
    }
    if (base) return true;

    Vec2i mu = generator_omega(data, family_reflection_index(fam, data)) * lambda;
    i64 ms = coord(mu, data.short_index), ml = coord(mu, data.long_index);
    switch (fam) {
        case Family::SPlus:
            return ms >= 1 && ml >= 0;
        case Family::LPlus:
            return ms >= 0 && ml >= 1;
        default:
            return ms >= 1 && ml >= 1;  // strictly dominant pre-image
    }
}

Vec2q apply_fold_reflection(const Vec2q& x, int code, Algebra kind) {
    const RootData& data = root_data(kind);
    if (code == kAffineReflection) {
        // r_0 x = x + (1 - <x,xi>) xi^vee
        const DomainSpec& spec = domain_spec(kind);
        Vec2q xivee{Rat(data.highest_root_marks.x) * data.root_norms[0] / 2,
                    Rat(data.highest_root_marks.y) * data.root_norms[1] / 2};
        Rat t = spec.level(x);
        return x + (Rat(1) - t) * xivee;
    }
    return to_rat(generator_alphavee(data, code)) * x;
}

FoldResult fold_to_F(const Vec2q& x_alphavee, Algebra kind) {
    const DomainSpec& spec = domain_spec(kind);
    const RootData& data = root_data(kind);
    FoldResult res{x_alphavee, {}};
    const Rat zero(0), one(1);
    for (int iter = 0; iter < 100000; ++iter) {
        Rat s = spec.mirror_s(res.point), l = spec.mirror_l(res.point), t = spec.level(res.point);
        int code;
        if (s < zero)
            code = data.short_index;
        else if (l < zero)
            code = data.long_index;
        else if (t > one)
            code = kAffineReflection;
        else
            return res;
        res.point = apply_fold_reflection(res.point, code, kind);
        res.reflections.push_back(code);
    }
    throw std::logic_error("fold_to_F: did not converge");
}

std::array<std::array<Vec2q, 3>, 2> family_triangles(Algebra kind, Family fam) {
    const DomainSpec& spec = domain_spec(kind);
    const RootData& data = root_data(kind);
    const Mat2q refl = to_rat(generator_alphavee(data, family_reflection_index(fam, data)));
    std::array<Vec2q, 3> base = spec.vertices_F;
    std::array<Vec2q, 3> reflected = {refl * base[0], refl * base[1], refl * base[2]};
    return {base, reflected};
}

}  // namespace xifn
