#include "xifn/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace xifn {

// Generator action on omega-coordinates: r_i lambda = lambda - lambda_i alpha_i,
// alpha_i being row i of the Cartan matrix in omega-coordinates.
// C2: r_s(a,b) = (-a, a+b), r_l(a,b) = (a+2b, -b), matching Figure arrows.
Mat2i generator_omega(const RootData& data, int i) {
    const Mat2i& c = data.cartan;
    if (i == 0)
        return {1 - c.a, 0, -c.b, 1};
    else
        return {1, -c.c, 0, 1 - c.d};
}

// Generator action on alpha^vee-coordinates: x -> x - (Cx)_i e_i.
Mat2i generator_alphavee(const RootData& data, int i) {
    const Mat2i& c = data.cartan;
    if (i == 0)
        return {1 - c.a, -c.b, 0, 1};
    else
        return {1, 0, -c.c, 1 - c.d};
}

// Generator action on omega^vee-coordinates (same shape with Cᵀ).
Mat2i generator_omegavee(const RootData& data, int i) {
    const Mat2i& c = data.cartan;
    if (i == 0)
        return {1 - c.a, 0, -c.c, 1};
    else
        return {1, -c.b, 0, 1 - c.d};
}

std::vector<GroupElement> generate_group(Algebra kind) {
    const RootData& data = root_data(kind);
    const Mat2i gen_w[2] = {generator_omega(data, 0), generator_omega(data, 1)};
    const Mat2i gen_a[2] = {generator_alphavee(data, 0), generator_alphavee(data, 1)};

    std::vector<GroupElement> group;
    group.push_back({{}, Mat2i::identity(), Mat2i::identity(), 1});

    auto known = [&](const Mat2i& m) {
        return std::any_of(group.begin(), group.end(),
                           [&](const GroupElement& g) { return g.omega == m; });
    };

    // Breadth-first closure: words found first are shortest, hence reduced.
    for (std::size_t head = 0; head < group.size(); ++head) {
        for (int i = 0; i < 2; ++i) {
            GroupElement g = group[head];  // copy; group may reallocate
            GroupElement next;
            next.word = g.word;
            next.word.push_back(i);
            next.omega = g.omega * gen_w[i];
            next.alphavee = g.alphavee * gen_a[i];
            next.det = g.det * -1;
            if (!known(next.omega)) group.push_back(std::move(next));
        }
    }
    if (static_cast<i64>(group.size()) != data.weyl_order)
        throw std::logic_error("generate_group: unexpected group order");
    return group;
}

int sign(SignHom hom, const GroupElement& w, const RootData& data) {
    switch (hom) {
        case SignHom::Identity:
            return 1;
        case SignHom::SigmaE:
            return w.det;
        case SignHom::SigmaS:
        case SignHom::SigmaL: {
            int idx = hom == SignHom::SigmaS ? data.short_index : data.long_index;
            int count = 0;
            for (int g : w.word)
                if (g == idx) ++count;
            return count % 2 == 0 ? 1 : -1;
        }
    }
    return 1;
}

Subgroup kernel(SignHom hom, const std::vector<GroupElement>& group, const RootData& data) {
    if (hom == SignHom::Identity)
        throw std::invalid_argument("kernel: the trivial homomorphism has no even subgroup");
    Subgroup sub;
    sub.label = hom == SignHom::SigmaE   ? SubgroupLabel::We
                : hom == SignHom::SigmaS ? SubgroupLabel::Ws
                                         : SubgroupLabel::Wl;
    for (const GroupElement& w : group)
        if (sign(hom, w, data) == 1) sub.elements.push_back(w);
    if (sub.elements.size() * 2 != group.size())
        throw std::logic_error("kernel: expected index 2");
    return sub;
}

std::vector<OrbitEntry> orbit_weight(const Subgroup& sub, const Vec2i& lambda_omega) {
    std::vector<OrbitEntry> out;
    out.reserve(sub.elements.size());
    for (const GroupElement& w : sub.elements) out.push_back({&w, w.omega * lambda_omega});
    return out;
}

i64 stab_order_d(const Subgroup& sub, const Vec2i& lambda_omega) {
    i64 n = 0;
    for (const GroupElement& w : sub.elements)
        if (w.omega * lambda_omega == lambda_omega) ++n;
    return n;
}

TorusPoint TorusPoint::reduce(const Vec2q& x) {
    i64 den = std::lcm(x.x.denominator(), x.y.denominator());
    auto num_of = [&](const Rat& r) {
        i64 n = r.numerator() * (den / r.denominator());
        n %= den;
        if (n < 0) n += den;
        return n;
    };
    return {{num_of(x.x), num_of(x.y)}, den};
}

i64 orbit_size_torus(const Subgroup& sub, const TorusPoint& x) {
    std::set<Vec2i> images;
    for (const GroupElement& w : sub.elements) {
        Vec2i v = w.alphavee * x.num;
        v.x %= x.den;
        v.y %= x.den;
        if (v.x < 0) v.x += x.den;
        if (v.y < 0) v.y += x.den;
        images.insert(v);
    }
    return static_cast<i64>(images.size());
}

i64 stab_order_h(const Subgroup& sub, const Vec2i& lambda_omega, i64 M, const RootData& data) {
    const Mat2i adj_ct = data.cartan.transpose().adjugate();
    const i64 mod = M * data.det_cartan;
    i64 n = 0;
    for (const GroupElement& w : sub.elements) {
        Vec2i v = (w.omega * lambda_omega) - lambda_omega;
        Vec2i u = adj_ct * v;
        if (u.x % mod == 0 && u.y % mod == 0) ++n;
    }
    return n;
}

const WeylSystem& weyl_system(Algebra kind) {
    static const WeylSystem c2 = [] {
        WeylSystem s;
        s.data = &root_data(Algebra::C2);
        s.group = generate_group(Algebra::C2);
        s.kernels = {kernel(SignHom::SigmaE, s.group, *s.data),
                     kernel(SignHom::SigmaS, s.group, *s.data),
                     kernel(SignHom::SigmaL, s.group, *s.data)};
        return s;
    }();
    static const WeylSystem g2 = [] {
        WeylSystem s;
        s.data = &root_data(Algebra::G2);
        s.group = generate_group(Algebra::G2);
        s.kernels = {kernel(SignHom::SigmaE, s.group, *s.data),
                     kernel(SignHom::SigmaS, s.group, *s.data),
                     kernel(SignHom::SigmaL, s.group, *s.data)};
        return s;
    }();
    return kind == Algebra::C2 ? c2 : g2;
}

}  // namespace xifn
