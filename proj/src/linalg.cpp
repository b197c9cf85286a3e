#include "canal/linalg.hpp"

#include "canal/errors.hpp"

namespace canal {

RMat3 RMat3::identity() { return diag(Rat(1), Rat(1), Rat(1)); }

RMat3 RMat3::diag(const Rat& a, const Rat& b, const Rat& c) {
    RMat3 r;
    r.m[0][0] = a;
    r.m[1][1] = b;
    r.m[2][2] = c;
    return r;
}

RMat3 RMat3::from_columns(const RVec3& c0, const RVec3& c1, const RVec3& c2) {
    RMat3 r;
    r.m[0] = {c0.x, c1.x, c2.x};
    r.m[1] = {c0.y, c1.y, c2.y};
    r.m[2] = {c0.z, c1.z, c2.z};
    return r;
}

RMat3 RMat3::from_rows(const RVec3& r0, const RVec3& r1, const RVec3& r2) {
    RMat3 r;
    r.m[0] = {r0.x, r0.y, r0.z};
    r.m[1] = {r1.x, r1.y, r1.z};
    r.m[2] = {r2.x, r2.y, r2.z};
    return r;
}

RVec3 RMat3::operator*(const RVec3& v) const {
    return {Rat(m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z),
            Rat(m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z),
            Rat(m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z)};
}

RMat3 RMat3::operator*(const RMat3& o) const {
    RMat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r.m[i][j] += m[i][k] * o.m[k][j];
    return r;
}

RMat3 RMat3::operator*(const Rat& a) const {
    RMat3 r = *this;
    for (auto& row : r.m)
        for (auto& v : row) v *= a;
    return r;
}

RMat3 RMat3::operator-(const RMat3& o) const {
    RMat3 r = *this;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] -= o.m[i][j];
    return r;
}

RMat3 RMat3::transposed() const {
    RMat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
}

Rat RMat3::det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

RMat3 RMat3::inverse() const {
    Rat d = det();
    if (d == 0) throw DegenerateInput("inverse of a singular matrix");
    RMat3 adj;
    adj.m[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    adj.m[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
    adj.m[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
    adj.m[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
    adj.m[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
    adj.m[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
    adj.m[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    adj.m[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
    adj.m[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return adj * Rat(1 / d);
}

bool RMat3::is_orthogonal() const { return (*this) * transposed() == identity(); }

std::string RMat3::to_string() const {
    std::string s = "[";
    for (int i = 0; i < 3; ++i) {
        s += "[";
        for (int j = 0; j < 3; ++j) {
            s += rat_to_string(m[i][j]);
            if (j < 2) s += ", ";
        }
        s += (i < 2) ? "], " : "]";
    }
    return s + "]";
}

Isometry::Isometry(RMat3 q, RVec3 t) : Q(std::move(q)), b(std::move(t)) {
    if (!Q.is_orthogonal()) throw ExactnessRequired("isometry matrix is not orthogonal");
    Rat d = Q.det();
    if (d == 1)
        det_sign = 1;
    else if (d == -1)
        det_sign = -1;
    else
        throw ExactnessRequired("orthogonal matrix with determinant != +-1");
}

Isometry Isometry::rotation_z(const Rat& cos_a, const Rat& sin_a) {
    if (cos_a * cos_a + sin_a * sin_a != 1)
        throw InvalidParams("rotation parameters must satisfy cos^2 + sin^2 = 1");
    RMat3 q;
    q.m[0] = {cos_a, -sin_a, Rat(0)};
    q.m[1] = {sin_a, cos_a, Rat(0)};
    q.m[2] = {Rat(0), Rat(0), Rat(1)};
    return Isometry(q, RVec3(Rat(0), Rat(0), Rat(0)));
}

Isometry Isometry::compose(const Isometry& inner) const {
    return Isometry(Q * inner.Q, Q * inner.b + b);
}

Isometry Isometry::inverse() const {
    RMat3 qt = Q.transposed();
    return Isometry(qt, -(qt * b));
}

Isometry Isometry::conjugate(const Isometry& g) const {
    return g.compose(*this).compose(g.inverse());
}

int Isometry::order(int cap) const {
    Isometry p = *this;
    for (int k = 1; k <= cap; ++k) {
        if (p.is_identity()) return k;
        p = compose(p);
    }
    return 0;
}

bool Isometry::operator<(const Isometry& o) const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (Q.m[i][j] != o.Q.m[i][j]) return Q.m[i][j] < o.Q.m[i][j];
    if (b.x != o.b.x) return b.x < o.b.x;
    if (b.y != o.b.y) return b.y < o.b.y;
    return b.z < o.b.z;
}

std::string Isometry::to_string() const {
    return "Q=" + Q.to_string() + ", b=[" + rat_to_string(b.x) + ", " + rat_to_string(b.y) +
           ", " + rat_to_string(b.z) + "]";
}

} // namespace canal
