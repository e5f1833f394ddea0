#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>

#include <boost/rational.hpp>

namespace xifn {

using i64 = long long;
using Rat = boost::rational<i64>;

inline double to_double(const Rat& r) { return boost::rational_cast<double>(r); }

// floor(r) for normalized rationals (boost keeps the denominator positive).
inline i64 rat_floor(const Rat& r) {
    i64 n = r.numerator(), d = r.denominator();
    if (n >= 0) return n / d;
    return -((-n + d - 1) / d);
}

// fractional part in [0, 1)
inline Rat rat_frac(const Rat& r) { return r - Rat(rat_floor(r)); }

template <class T>
struct Vec2 {
    T x{}, y{};

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
    friend Vec2 operator*(const T& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Vec2& a, const Vec2& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
    friend std::ostream& operator<<(std::ostream& os, const Vec2& v) {
        return os << "(" << v.x << ", " << v.y << ")";
    }
};

using Vec2i = Vec2<i64>;
using Vec2q = Vec2<Rat>;
using Vec2d = Vec2<double>;

// row-major 2x2 matrix [[a, b], [c, d]]
template <class T>
struct Mat2 {
    T a{}, b{}, c{}, d{};

    static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }

    Vec2<T> operator*(const Vec2<T>& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    friend bool operator==(const Mat2& m, const Mat2& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }

    T det() const { return a * d - b * c; }
    Mat2 transpose() const { return {a, c, b, d}; }
    Mat2 adjugate() const { return {d, -b, -c, a}; }
    Mat2 inverse() const {
        T dt = det();
        if (dt == T(0)) throw std::domain_error("Mat2::inverse: singular matrix");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }
};

using Mat2i = Mat2<i64>;
using Mat2q = Mat2<Rat>;

inline Vec2q to_rat(const Vec2i& v) { return {Rat(v.x), Rat(v.y)}; }
inline Mat2q to_rat(const Mat2i& m) { return {Rat(m.a), Rat(m.b), Rat(m.c), Rat(m.d)}; }
inline Vec2d to_double(const Vec2q& v) { return {to_double(v.x), to_double(v.y)}; }

}  // namespace xifn
