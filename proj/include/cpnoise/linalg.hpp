#pragma once

#include <array>
#include <cmath>
#include <complex>

// Small fixed-size linear algebra for single-qubit propagators (2x2 complex)
// and their SO(3) adjoint images (3x3 real). Row vectors act on the right of
// 3x3 matrices throughout: (vM)_j = sum_i v_i M_ij.

namespace cpnoise {

using cplx = std::complex<double>;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator*(double s, Vec3 v) { return v *= s; }
inline Vec3 operator*(Vec3 v, double s) { return v *= s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm_sq(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm_sq(v)); }

struct Mat3 {
    // row-major
    std::array<double, 9> m{};

    double& operator()(int i, int j) { return m[3 * i + j]; }
    double operator()(int i, int j) const { return m[3 * i + j]; }

    static Mat3 identity() {
        Mat3 r;
        r.m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
        return r;
    }
};

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

// v^T M (row vector times matrix)
inline Vec3 apply_row(const Vec3& v, const Mat3& m) {
    return {v.x * m(0, 0) + v.y * m(1, 0) + v.z * m(2, 0),
            v.x * m(0, 1) + v.y * m(1, 1) + v.z * m(2, 1),
            v.x * m(0, 2) + v.y * m(1, 2) + v.z * m(2, 2)};
}

inline double det(const Mat3& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// max |(M M^T - I)_ij|
inline double orthogonality_defect(const Mat3& m) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += m(i, k) * m(j, k);
            if (i == j) s -= 1.0;
            worst = std::max(worst, std::abs(s));
        }
    return worst;
}

struct Mat2 {
    cplx a00{}, a01{}, a10{}, a11{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.a00 * b.a00 + a.a01 * b.a10, a.a00 * b.a01 + a.a01 * b.a11,
            a.a10 * b.a00 + a.a11 * b.a10, a.a10 * b.a01 + a.a11 * b.a11};
}

inline Mat2 dagger(const Mat2& a) {
    return {std::conj(a.a00), std::conj(a.a10), std::conj(a.a01), std::conj(a.a11)};
}

inline cplx trace(const Mat2& a) { return a.a00 + a.a11; }
inline cplx det(const Mat2& a) { return a.a00 * a.a11 - a.a01 * a.a10; }

inline Mat2 sigma_x() { return {0.0, 1.0, 1.0, 0.0}; }
inline Mat2 sigma_y() { return {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0}; }
inline Mat2 sigma_z() { return {1.0, 0.0, 0.0, -1.0}; }

// exp[-i alpha (n.sigma)/2] for unit n
inline Mat2 axis_angle_su2(double alpha, const Vec3& n) {
    const double c = std::cos(0.5 * alpha);
    const double s = std::sin(0.5 * alpha);
    const cplx i(0.0, 1.0);
    return {c - i * s * n.z, -i * s * cplx(n.x, -n.y) * 1.0,
            -i * s * cplx(n.x, n.y) * 1.0, c + i * s * n.z};
}

// exp[-i dt (h.sigma)/2] for arbitrary h (rotation by |h| dt about h-hat)
inline Mat2 hamiltonian_step(const Vec3& h, double dt) {
    const double hn = norm(h);
    if (hn == 0.0) return Mat2::identity();
    return axis_angle_su2(hn * dt, (1.0 / hn) * h);
}

// rotation through theta about the equatorial axis (cos phi, sin phi, 0)
inline Mat2 rotation_su2(double theta, double phi) {
    return axis_angle_su2(theta, {std::cos(phi), std::sin(phi), 0.0});
}

// Adjoint image: Lambda_ij = Re Tr[U^dag sigma_i U sigma_j]/2.
// For U = exp[-i theta n.sigma/2] this is the SO(3) rotation by theta about n.
inline Mat3 so3_adjoint(const Mat2& u) {
    const Mat2 ud = dagger(u);
    const std::array<Mat2, 3> sig = {sigma_x(), sigma_y(), sigma_z()};
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
        const Mat2 c = ud * sig[i] * u;
        for (int j = 0; j < 3; ++j) r(i, j) = 0.5 * std::real(trace(c * sig[j]));
    }
    return r;
}

// Frobenius distance minimized over a global phase; zero iff A = e^{ia} B.
// Aligns the phase explicitly (optimal e^{ia} = Tr(B^dag A)/|.|) so the
// result stays meaningful down to rounding level.
inline double distance_up_to_phase(const Mat2& a, const Mat2& b) {
    const cplx t = trace(dagger(b) * a);
    const double tn = std::abs(t);
    if (tn == 0.0) return 2.0;
    const cplx phase = t / tn;
    double s = 0.0;
    s += std::norm(a.a00 - phase * b.a00);
    s += std::norm(a.a01 - phase * b.a01);
    s += std::norm(a.a10 - phase * b.a10);
    s += std::norm(a.a11 - phase * b.a11);
    return std::sqrt(s);
}

// sin(u)/u with series branch near zero
inline double sinc(double u) {
    if (std::abs(u) < 1e-4) {
        const double u2 = u * u;
        return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
    }
    return std::sin(u) / u;
}

}  // namespace cpnoise
