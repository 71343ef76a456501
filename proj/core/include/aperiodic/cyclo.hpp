#pragma once

#include "aperiodic/golden.hpp"

#include <array>
#include <complex>
#include <string>

namespace aperiodic {

// Element c0 + c1 z + c2 z^2 + c3 z^3 of Q(z), z = exp(i pi / 5), with
// coefficients in Q(phi). Values are kept in the canonical form c2 = c3 = 0
// (z^2 = phi z - 1), so equality and ordering are structural.
class CycloPoint {
public:
    CycloPoint() = default;
    CycloPoint(GoldenRational c0) : c_{std::move(c0), {}, {}, {}} {}
    CycloPoint(GoldenRational c0, GoldenRational c1, GoldenRational c2 = {}, GoldenRational c3 = {});

    // z^k for any integer k.
    static CycloPoint zeta(int k);

    const GoldenRational& coeff(int i) const { return c_[i]; }
    const std::array<GoldenRational, 4>& coeffs() const { return c_; }

    bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero(); }
    CycloPoint conj() const;
    // |p|^2, always in Q(phi).
    GoldenRational norm2() const;
    // Real and imaginary parts: re is in Q(phi), im = im_coeff * sin(pi/5).
    GoldenRational re() const;
    const GoldenRational& im_coeff() const { return c_[1]; }
    CycloPoint inv() const;
    std::complex<double> embed() const;

    CycloPoint& operator+=(const CycloPoint& o);
    CycloPoint& operator-=(const CycloPoint& o);
    CycloPoint& operator*=(const CycloPoint& o);
    CycloPoint& operator*=(const GoldenRational& s);

    friend CycloPoint operator+(CycloPoint x, const CycloPoint& y) { return x += y; }
    friend CycloPoint operator-(CycloPoint x, const CycloPoint& y) { return x -= y; }
    friend CycloPoint operator*(CycloPoint x, const CycloPoint& y) { return x *= y; }
    friend CycloPoint operator*(CycloPoint x, const GoldenRational& s) { return x *= s; }
    friend CycloPoint operator*(const GoldenRational& s, CycloPoint x) { return x *= s; }
    friend CycloPoint operator/(const CycloPoint& x, const CycloPoint& y) { return x * y.inv(); }
    CycloPoint operator-() const;

    friend bool operator==(const CycloPoint& x, const CycloPoint& y) {
        return x.c_[0] == y.c_[0] && x.c_[1] == y.c_[1];
    }
    friend bool operator!=(const CycloPoint& x, const CycloPoint& y) { return !(x == y); }
    friend bool operator<(const CycloPoint& x, const CycloPoint& y);

    std::string to_string() const;

private:
    std::array<GoldenRational, 4> c_;
};

CycloPoint cyclo_mul(const CycloPoint& p, const CycloPoint& q);
std::complex<double> embed(const CycloPoint& p);

// Sign of Im(conj(u) * v): +1 when v is counter-clockwise from u.
int cross_sign(const CycloPoint& u, const CycloPoint& v);

}  // namespace aperiodic
