#include "bcjulia/bicomplex.hpp"

#include <cmath>
#include <stdexcept>

namespace bcjulia {

namespace {

constexpr Complex kI1{0.0, 1.0};

Bicomplex checked(const Bicomplex& w, const char* op) {
    if (!w.finite()) {
        throw std::overflow_error(std::string("bicomplex ") + op + " produced a non-finite value");
    }
    return w;
}

}  // namespace

Complex principal_sqrt(Complex z) {
    // std::sqrt honours the sign of a zero imaginary part; fold -0 onto +0 so
    // the negative real axis maps to the positive imaginary axis.
    if (z.imag() == 0.0) {
        z = {z.real(), 0.0};
    }
    return std::sqrt(z);
}

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Bicomplex& Bicomplex::operator+=(const Bicomplex& rhs) {
    z1_ += rhs.z1_;
    z2_ += rhs.z2_;
    *this = checked(*this, "addition");
    return *this;
}

Bicomplex& Bicomplex::operator-=(const Bicomplex& rhs) {
    z1_ -= rhs.z1_;
    z2_ -= rhs.z2_;
    *this = checked(*this, "subtraction");
    return *this;
}

Bicomplex& Bicomplex::operator*=(const Bicomplex& rhs) {
    // (z1 + z2 i2)(w1 + w2 i2) = (z1 w1 - z2 w2) + (z1 w2 + z2 w1) i2
    const Complex r1 = z1_ * rhs.z1_ - z2_ * rhs.z2_;
    const Complex r2 = z1_ * rhs.z2_ + z2_ * rhs.z1_;
    z1_ = r1;
    z2_ = r2;
    *this = checked(*this, "multiplication");
    return *this;
}

IdempotentPair to_idempotent(const Bicomplex& w) {
    // z1 -/+ z2 i1 written out to avoid spurious signed zeros from complex mul.
    return {
        {w.a() + w.d(), w.b() - w.c()},
        {w.a() - w.d(), w.b() + w.c()},
    };
}

Bicomplex from_idempotent(const IdempotentPair& p) {
    const Complex sum = p.p1 + p.p2;
    const Complex diff = p.p1 - p.p2;
    // z2 = i1 (p1 - p2) / 2; 0.0 - x keeps zero components unsigned.
    return {sum * 0.5, Complex{0.0 - diff.imag(), diff.real()} * 0.5};
}

Bicomplex add(const Bicomplex& u, const Bicomplex& v) { return u + v; }

Bicomplex mul(const Bicomplex& u, const Bicomplex& v) { return u * v; }

Bicomplex pow(const Bicomplex& w, unsigned n) {
    Bicomplex result{1.0};
    Bicomplex base = w;
    while (n != 0) {
        if (n & 1U) {
            result *= base;
        }
        n >>= 1U;
        if (n != 0) {
            base *= base;
        }
    }
    return result;
}

double norm(const Bicomplex& w) {
    return std::sqrt(w.a() * w.a() + w.b() * w.b() + w.c() * w.c() + w.d() * w.d());
}

Bicomplex sqrt_branch(const Bicomplex& w, int s1, int s2) {
    const IdempotentPair p = to_idempotent(w);
    Complex r1 = principal_sqrt(p.p1);
    Complex r2 = principal_sqrt(p.p2);
    if (s1 != 0) {
        r1 = -r1;
    }
    if (s2 != 0) {
        r2 = -r2;
    }
    return from_idempotent({r1, r2});
}

std::vector<Bicomplex> sqrt_branches(const Bicomplex& w) {
    const IdempotentPair p = to_idempotent(w);
    const int n1 = p.p1 == Complex{} ? 1 : 2;
    const int n2 = p.p2 == Complex{} ? 1 : 2;
    std::vector<Bicomplex> roots;
    roots.reserve(static_cast<std::size_t>(n1 * n2));
    for (int s1 = 0; s1 < n1; ++s1) {
        for (int s2 = 0; s2 < n2; ++s2) {
            roots.push_back(sqrt_branch(w, s1, s2));
        }
    }
    return roots;
}

bool is_null_cone(const Bicomplex& w) {
    const IdempotentPair p = to_idempotent(w);
    return p.p1 == Complex{} || p.p2 == Complex{};
}

bool is_null_cone_eps(const Bicomplex& w, double tol) {
    const IdempotentPair p = to_idempotent(w);
    return std::abs(p.p1) <= tol || std::abs(p.p2) <= tol;
}

bool ball_contains(const Bicomplex& center, double r, const Bicomplex& w) {
    if (!(r > 0.0)) {
        throw std::invalid_argument("ball radius must be positive");
    }
    return norm(w - center) < r;
}

Discus::Discus(Bicomplex center_, double r1_, double r2_) : center(center_), r1(r1_), r2(r2_) {
    if (!(r1 > 0.0) || !(r2 > 0.0)) {
        throw std::invalid_argument("discus radii must be positive");
    }
}

bool discus_contains(const Discus& d, const Bicomplex& w) {
    const IdempotentPair pw = to_idempotent(w);
    const IdempotentPair pc = to_idempotent(d.center);
    return std::abs(pw.p1 - pc.p1) < d.r1 && std::abs(pw.p2 - pc.p2) < d.r2;
}

}  // namespace bcjulia
