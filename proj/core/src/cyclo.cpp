#include "aperiodic/cyclo.hpp"

#include <stdexcept>

namespace aperiodic {

namespace {

// cos(k pi / 5), sin(k pi / 5) for k = 0..3
constexpr double kCos[4] = {1.0, 0.80901699437494742410, 0.30901699437494742410, -0.30901699437494742410};
constexpr double kSin[4] = {0.0, 0.58778525229247312917, 0.95105651629515357212, 0.95105651629515357212};

}  // namespace

CycloPoint::CycloPoint(GoldenRational c0, GoldenRational c1, GoldenRational c2, GoldenRational c3) {
    // z^2 = phi z - 1, z^3 = phi z - phi
    const GoldenRational phi = GoldenRational::phi();
    c_[0] = c0 - c2 - phi * c3;
    c_[1] = c1 + phi * c2 + phi * c3;
}

CycloPoint CycloPoint::zeta(int k) {
    k %= 10;
    if (k < 0) k += 10;
    CycloPoint r(GoldenRational(1));
    const CycloPoint z(GoldenRational(0), GoldenRational(1));
    for (int i = 0; i < k; ++i) r *= z;
    return r;
}

CycloPoint CycloPoint::conj() const {
    // conj(z) = phi - z
    return CycloPoint(c_[0] + c_[1] * GoldenRational::phi(), -c_[1]);
}

GoldenRational CycloPoint::norm2() const {
    // (c0 + c1 z)(c0 + c1 conj z) = c0^2 + c0 c1 phi + c1^2
    return c_[0] * c_[0] + c_[0] * c_[1] * GoldenRational::phi() + c_[1] * c_[1];
}

GoldenRational CycloPoint::re() const {
    // Re z = phi / 2
    return c_[0] + c_[1] * GoldenRational(mpq_class(0), mpq_class(1, 2));
}

CycloPoint CycloPoint::inv() const {
    GoldenRational n = norm2();
    if (n.is_zero()) throw std::domain_error("CycloPoint: division by zero");
    CycloPoint c = conj();
    GoldenRational ni = n.inv();
    return c * ni;
}

std::complex<double> CycloPoint::embed() const {
    double x = 0, y = 0;
    for (int k = 0; k < 4; ++k) {
        double v = c_[k].to_double();
        x += v * kCos[k];
        y += v * kSin[k];
    }
    return {x, y};
}

CycloPoint& CycloPoint::operator+=(const CycloPoint& o) {
    c_[0] += o.c_[0];
    c_[1] += o.c_[1];
    return *this;
}

CycloPoint& CycloPoint::operator-=(const CycloPoint& o) {
    c_[0] -= o.c_[0];
    c_[1] -= o.c_[1];
    return *this;
}

CycloPoint& CycloPoint::operator*=(const CycloPoint& o) {
    // Product in the power basis, then reduction of z^4..z^6 by
    // z^4 = z^3 - z^2 + z - 1 before canonicalising.
    GoldenRational d[7];
    for (int i = 0; i < 4; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; j < 4; ++j) {
            if (o.c_[j].is_zero()) continue;
            d[i + j] += c_[i] * o.c_[j];
        }
    }
    for (int k = 6; k >= 4; --k) {
        if (d[k].is_zero()) continue;
        GoldenRational t = d[k];
        d[k] = GoldenRational();
        d[k - 1] += t;
        d[k - 2] -= t;
        d[k - 3] += t;
        d[k - 4] -= t;
    }
    *this = CycloPoint(d[0], d[1], d[2], d[3]);
    return *this;
}

CycloPoint& CycloPoint::operator*=(const GoldenRational& s) {
    c_[0] *= s;
    c_[1] *= s;
    return *this;
}

CycloPoint CycloPoint::operator-() const { return CycloPoint(-c_[0], -c_[1]); }

bool operator<(const CycloPoint& x, const CycloPoint& y) {
    for (int i = 0; i < 2; ++i) {
        int c = GoldenRational::lex_compare(x.c_[i], y.c_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string CycloPoint::to_string() const {
    return "(" + c_[0].to_string() + ") + (" + c_[1].to_string() + ")*z";
}

CycloPoint cyclo_mul(const CycloPoint& p, const CycloPoint& q) { return p * q; }

std::complex<double> embed(const CycloPoint& p) { return p.embed(); }

int cross_sign(const CycloPoint& u, const CycloPoint& v) { return (u.conj() * v).im_coeff().sign(); }

}  // namespace aperiodic
