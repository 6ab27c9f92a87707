#ifndef QOTTO_QMATH_HPP
#define QOTTO_QMATH_HPP

// 2x2 complex linear algebra with fixed phase conventions for the
// Pauli eigenbases. Everything downstream (states, propagators,
// transition probabilities) is built on these kernels.

#include <array>
#include <cmath>
#include <complex>

#include "qotto/errors.hpp"

namespace qotto {

using C64 = std::complex<double>;

inline constexpr C64 I_UNIT{0.0, 1.0};

enum class Axis { x, y, z };

struct Mat2 {
    // row-major: e[0] e[1] / e[2] e[3]
    std::array<C64, 4> e{};

    C64& operator()(int i, int j) { return e[static_cast<std::size_t>(2 * i + j)]; }
    const C64& operator()(int i, int j) const { return e[static_cast<std::size_t>(2 * i + j)]; }

    static Mat2 identity() { return Mat2{{C64{1.0}, C64{0.0}, C64{0.0}, C64{1.0}}}; }
    static Mat2 zero() { return Mat2{}; }
};

struct Ket2 {
    std::array<C64, 2> a{};
};

inline Mat2 operator+(const Mat2& A, const Mat2& B) {
    Mat2 r;
    for (std::size_t k = 0; k < 4; ++k) r.e[k] = A.e[k] + B.e[k];
    return r;
}

inline Mat2 operator-(const Mat2& A, const Mat2& B) {
    Mat2 r;
    for (std::size_t k = 0; k < 4; ++k) r.e[k] = A.e[k] - B.e[k];
    return r;
}

inline Mat2 operator*(C64 s, const Mat2& A) {
    Mat2 r;
    for (std::size_t k = 0; k < 4; ++k) r.e[k] = s * A.e[k];
    return r;
}

inline Mat2 operator*(double s, const Mat2& A) { return C64{s} * A; }

inline Mat2 matmul(const Mat2& A, const Mat2& B) {
    Mat2 r;
    r(0, 0) = A(0, 0) * B(0, 0) + A(0, 1) * B(1, 0);
    r(0, 1) = A(0, 0) * B(0, 1) + A(0, 1) * B(1, 1);
    r(1, 0) = A(1, 0) * B(0, 0) + A(1, 1) * B(1, 0);
    r(1, 1) = A(1, 0) * B(0, 1) + A(1, 1) * B(1, 1);
    return r;
}

inline Mat2 operator*(const Mat2& A, const Mat2& B) { return matmul(A, B); }

inline Mat2 adjoint(const Mat2& A) {
    Mat2 r;
    r(0, 0) = std::conj(A(0, 0));
    r(0, 1) = std::conj(A(1, 0));
    r(1, 0) = std::conj(A(0, 1));
    r(1, 1) = std::conj(A(1, 1));
    return r;
}

inline C64 trace(const Mat2& A) { return A(0, 0) + A(1, 1); }

inline Ket2 apply(const Mat2& A, const Ket2& v) {
    Ket2 r;
    r.a[0] = A(0, 0) * v.a[0] + A(0, 1) * v.a[1];
    r.a[1] = A(1, 0) * v.a[0] + A(1, 1) * v.a[1];
    return r;
}

// <u|v> with conjugation on the left argument.
inline C64 inner(const Ket2& u, const Ket2& v) {
    return std::conj(u.a[0]) * v.a[0] + std::conj(u.a[1]) * v.a[1];
}

// |u><v|
inline Mat2 outer(const Ket2& u, const Ket2& v) {
    Mat2 r;
    r(0, 0) = u.a[0] * std::conj(v.a[0]);
    r(0, 1) = u.a[0] * std::conj(v.a[1]);
    r(1, 0) = u.a[1] * std::conj(v.a[0]);
    r(1, 1) = u.a[1] * std::conj(v.a[1]);
    return r;
}

inline double max_abs_diff(const Mat2& A, const Mat2& B) {
    double m = 0.0;
    for (std::size_t k = 0; k < 4; ++k) m = std::max(m, std::abs(A.e[k] - B.e[k]));
    return m;
}

inline bool is_hermitian(const Mat2& A, double tol = 1e-12) {
    return max_abs_diff(A, adjoint(A)) <= tol;
}

inline bool is_unitary(const Mat2& U, double tol = 1e-12) {
    return max_abs_diff(adjoint(U) * U, Mat2::identity()) <= tol;
}

inline Mat2 pauli(Axis axis) {
    switch (axis) {
        case Axis::x: return Mat2{{C64{0.0}, C64{1.0}, C64{1.0}, C64{0.0}}};
        case Axis::y: return Mat2{{C64{0.0}, -I_UNIT, I_UNIT, C64{0.0}}};
        case Axis::z: return Mat2{{C64{1.0}, C64{0.0}, C64{0.0}, C64{-1.0}}};
    }
    throw ValidationError("pauli: invalid axis");
}

// Fixed z-basis phase conventions for the sigma_x / sigma_y eigenkets.
inline Ket2 ket_plus_x() {
    const double s = 1.0 / std::sqrt(2.0);
    return Ket2{{C64{s}, C64{s}}};
}
inline Ket2 ket_minus_x() {
    const double s = 1.0 / std::sqrt(2.0);
    return Ket2{{C64{s}, C64{-s}}};
}
inline Ket2 ket_plus_y() {
    const double s = 1.0 / std::sqrt(2.0);
    return Ket2{{C64{s}, C64{0.0, s}}};
}
inline Ket2 ket_minus_y() {
    const double s = 1.0 / std::sqrt(2.0);
    return Ket2{{C64{s}, C64{0.0, -s}}};
}

// Eigenket of sigma_axis with eigenvalue +1 / -1.
inline Ket2 eigenket(Axis axis, int sign) {
    if (axis == Axis::x) return sign > 0 ? ket_plus_x() : ket_minus_x();
    if (axis == Axis::y) return sign > 0 ? ket_plus_y() : ket_minus_y();
    return sign > 0 ? Ket2{{C64{1.0}, C64{0.0}}} : Ket2{{C64{0.0}, C64{1.0}}};
}

// exp(-i a (n.sigma)) = cos(a) I - i sin(a) (n.sigma), exact for unit n.
inline Mat2 expm_su2(double a, double nx, double ny, double nz) {
    const double norm = std::sqrt(nx * nx + ny * ny + nz * nz);
    if (std::abs(norm - 1.0) > 1e-12) {
        throw ValidationError("expm_su2: direction vector is not unit length");
    }
    const double c = std::cos(a);
    const C64 ms = C64{0.0, -std::sin(a)};
    Mat2 r;
    r(0, 0) = C64{c} + ms * C64{nz};
    r(0, 1) = ms * C64{nx, -ny};
    r(1, 0) = ms * C64{nx, ny};
    r(1, 1) = C64{c} - ms * C64{nz};
    return r;
}

} // namespace qotto

#endif
