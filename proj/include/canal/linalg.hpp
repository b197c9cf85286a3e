#ifndef CANAL_LINALG_HPP
#define CANAL_LINALG_HPP

#include <array>
#include <string>

#include "canal/rat.hpp"

namespace canal {

template <typename T>
struct Vec3 {
    T x{}, y{}, z{};

    Vec3() = default;
    Vec3(T xx, T yy, T zz) : x(std::move(xx)), y(std::move(yy)), z(std::move(zz)) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(const T& a) const { return {x * a, y * a, z * a}; }
    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator!=(const Vec3& o) const { return !(*this == o); }
};

template <typename T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
    return T(a.x * b.x + a.y * b.y + a.z * b.z);
}

template <typename T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
    return {T(a.y * b.z - a.z * b.y), T(a.z * b.x - a.x * b.z), T(a.x * b.y - a.y * b.x)};
}

template <typename T>
T norm_sq(const Vec3<T>& a) {
    return dot(a, a);
}

using RVec3 = Vec3<Rat>;
using DVec3 = Vec3<double>;

inline DVec3 to_double(const RVec3& v) {
    return {rat_to_double(v.x), rat_to_double(v.y), rat_to_double(v.z)};
}

// Row-major exact 3x3 matrix.
struct RMat3 {
    std::array<std::array<Rat, 3>, 3> m{};

    static RMat3 identity();
    static RMat3 diag(const Rat& a, const Rat& b, const Rat& c);
    static RMat3 from_columns(const RVec3& c0, const RVec3& c1, const RVec3& c2);
    static RMat3 from_rows(const RVec3& r0, const RVec3& r1, const RVec3& r2);

    RVec3 operator*(const RVec3& v) const;
    RMat3 operator*(const RMat3& o) const;
    RMat3 operator*(const Rat& a) const;
    RMat3 operator-(const RMat3& o) const;
    bool operator==(const RMat3& o) const { return m == o.m; }
    bool operator!=(const RMat3& o) const { return !(*this == o); }

    RMat3 transposed() const;
    Rat det() const;
    RMat3 inverse() const;  // throws DegenerateInput if singular
    RVec3 column(int j) const { return {m[0][j], m[1][j], m[2][j]}; }
    RVec3 row(int i) const { return {m[i][0], m[i][1], m[i][2]}; }

    bool is_orthogonal() const;

    std::string to_string() const;
};

// Exact affine isometry x -> Q x + b with Q orthogonal.
struct Isometry {
    RMat3 Q;
    RVec3 b;
    int det_sign = 1;

    Isometry() : Q(RMat3::identity()), b(Rat(0), Rat(0), Rat(0)) {}
    Isometry(RMat3 q, RVec3 t);  // validates orthogonality, sets det_sign

    static Isometry identity() { return Isometry(); }
    static Isometry rotation_z(const Rat& cos_a, const Rat& sin_a);  // requires cos^2+sin^2=1

    RVec3 apply(const RVec3& v) const { return Q * v + b; }
    Isometry compose(const Isometry& inner) const;  // x -> (*this)(inner(x))
    Isometry inverse() const;
    Isometry conjugate(const Isometry& g) const;  // g o (*this) o g^-1
    bool is_identity() const { return *this == identity(); }
    bool is_translation_free() const { return b == RVec3(Rat(0), Rat(0), Rat(0)); }

    // Order of the isometry as a group element, capped; 0 if above the cap.
    int order(int cap = 16) const;

    bool operator==(const Isometry& o) const { return Q == o.Q && b == o.b; }
    bool operator!=(const Isometry& o) const { return !(*this == o); }
    bool operator<(const Isometry& o) const;

    std::string to_string() const;
};

} // namespace canal

#endif
