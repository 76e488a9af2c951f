#pragma once

#include <cmath>

namespace solitonlab::geo {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    Vec3& operator-=(const Vec3& o) {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    Vec3& operator*=(double k) {
        x *= k;
        y *= k;
        z *= k;
        return *this;
    }
    friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
    friend Vec3 operator*(double k, Vec3 a) { return a *= k; }
    friend Vec3 operator*(Vec3 a, double k) { return a *= k; }
    friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline double det(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(cross(a, b), c); }

/// Density vector (alpha, beta, gamma) of phi(p) = alpha x + beta y + gamma z.
struct Density {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;

    Vec3 vector() const { return {alpha, beta, gamma}; }
};

}  // namespace solitonlab::geo
