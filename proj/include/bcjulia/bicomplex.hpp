#pragma once

#include <array>
#include <complex>
#include <vector>

namespace bcjulia {

using Complex = std::complex<double>;

/// Principal square root: non-negative real part, branch cut on the negative
/// real axis approached from above, so sqrt(-x) = i*sqrt(x) for x > 0.
Complex principal_sqrt(Complex z);

bool is_finite(Complex z);

/// Coefficients of e1 = (1+j)/2 and e2 = (1-j)/2.
struct IdempotentPair {
    Complex p1;
    Complex p2;

    friend bool operator==(const IdempotentPair&, const IdempotentPair&) = default;
};

/// a + b*i1 + c*i2 + d*j, stored as z1 + z2*i2 with z1 = a + b*i1, z2 = c + d*i1.
///
/// Arithmetic operators throw std::overflow_error if a result is not finite.
class Bicomplex {
public:
    constexpr Bicomplex() = default;
    constexpr Bicomplex(double a) : z1_(a, 0.0) {}
    constexpr Bicomplex(Complex z1, Complex z2 = {}) : z1_(z1), z2_(z2) {}
    constexpr Bicomplex(double a, double b, double c, double d) : z1_(a, b), z2_(c, d) {}

    static Bicomplex i1() { return {0.0, 1.0, 0.0, 0.0}; }
    static Bicomplex i2() { return {0.0, 0.0, 1.0, 0.0}; }
    static Bicomplex j() { return {0.0, 0.0, 0.0, 1.0}; }
    static Bicomplex e1() { return {0.5, 0.0, 0.0, 0.5}; }
    static Bicomplex e2() { return {0.5, 0.0, 0.0, -0.5}; }

    Complex z1() const { return z1_; }
    Complex z2() const { return z2_; }
    double a() const { return z1_.real(); }
    double b() const { return z1_.imag(); }
    double c() const { return z2_.real(); }
    double d() const { return z2_.imag(); }
    std::array<double, 4> components() const { return {a(), b(), c(), d()}; }

    bool finite() const { return is_finite(z1_) && is_finite(z2_); }

    Bicomplex& operator+=(const Bicomplex& rhs);
    Bicomplex& operator-=(const Bicomplex& rhs);
    Bicomplex& operator*=(const Bicomplex& rhs);

    friend Bicomplex operator+(Bicomplex lhs, const Bicomplex& rhs) { return lhs += rhs; }
    friend Bicomplex operator-(Bicomplex lhs, const Bicomplex& rhs) { return lhs -= rhs; }
    friend Bicomplex operator*(Bicomplex lhs, const Bicomplex& rhs) { return lhs *= rhs; }
    friend Bicomplex operator-(const Bicomplex& w) { return {-w.z1_, -w.z2_}; }

    friend bool operator==(const Bicomplex&, const Bicomplex&) = default;

private:
    Complex z1_{};
    Complex z2_{};
};

IdempotentPair to_idempotent(const Bicomplex& w);
Bicomplex from_idempotent(const IdempotentPair& p);

Bicomplex add(const Bicomplex& u, const Bicomplex& v);
Bicomplex mul(const Bicomplex& u, const Bicomplex& v);
Bicomplex pow(const Bicomplex& w, unsigned n);

/// Real (Euclidean) modulus sqrt(a^2 + b^2 + c^2 + d^2).
double norm(const Bicomplex& w);

/// All square roots of w, one per branch-index pair (s1, s2) in lexicographic
/// order, where s = 0 picks the principal complex root of that projection and
/// s = 1 its negation. Pairs that coincide because a projection is zero are
/// collapsed, so the result has 4, 2 or 1 elements.
std::vector<Bicomplex> sqrt_branches(const Bicomplex& w);

/// Square root on a single branch pair; always defined.
Bicomplex sqrt_branch(const Bicomplex& w, int s1, int s2);

/// Exact test: some idempotent projection is exactly zero.
bool is_null_cone(const Bicomplex& w);

inline constexpr double kNullConeTolerance = 1e-14;
bool is_null_cone_eps(const Bicomplex& w, double tol = kNullConeTolerance);

/// Open Euclidean ball. Throws std::invalid_argument if r <= 0.
bool ball_contains(const Bicomplex& center, double r, const Bicomplex& w);

/// Open discus D(center; r1, r2): product of two open disks in idempotent
/// coordinates.
struct Discus {
    Bicomplex center;
    double r1;
    double r2;

    /// Throws std::invalid_argument unless both radii are positive.
    Discus(Bicomplex center, double r1, double r2);
};

bool discus_contains(const Discus& d, const Bicomplex& w);

}  // namespace bcjulia
