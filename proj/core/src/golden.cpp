#include "aperiodic/golden.hpp"

#include <cmath>
#include <stdexcept>

namespace aperiodic {

namespace {
constexpr double kPhi = 1.6180339887498948482;
}

GoldenRational::GoldenRational(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
}

int GoldenRational::sign() const {
    // a + b*phi = (a + b/2) + (b/2) sqrt5
    mpq_class c = a_ + b_ / 2;
    mpq_class d = b_ / 2;
    int sc = sgn(c), sd = sgn(d);
    if (sd == 0) return sc;
    if (sc == 0 || sc == sd) return sd;
    mpq_class lhs = c * c, rhs = 5 * d * d;
    int cmp_ = cmp(lhs, rhs);
    if (cmp_ == 0) return 0;
    return cmp_ > 0 ? sc : sd;
}

GoldenRational GoldenRational::conj() const { return GoldenRational(a_ + b_, -b_); }

mpq_class GoldenRational::norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

GoldenRational GoldenRational::inv() const {
    mpq_class n = norm();
    if (sgn(n) == 0) throw std::domain_error("golden_inv: division by zero");
    GoldenRational c = conj();
    return GoldenRational(c.a_ / n, c.b_ / n);
}

double GoldenRational::to_double() const { return a_.get_d() + b_.get_d() * kPhi; }

GoldenRational& GoldenRational::operator+=(const GoldenRational& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

GoldenRational& GoldenRational::operator-=(const GoldenRational& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

GoldenRational& GoldenRational::operator*=(const GoldenRational& o) {
    // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
    mpq_class bd = b_ * o.b_;
    mpq_class na = a_ * o.a_ + bd;
    mpq_class nb = a_ * o.b_ + b_ * o.a_ + bd;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

GoldenRational& GoldenRational::operator/=(const GoldenRational& o) { return *this *= o.inv(); }

int GoldenRational::lex_compare(const GoldenRational& x, const GoldenRational& y) {
    int c = cmp(x.a_, y.a_);
    if (c != 0) return c < 0 ? -1 : 1;
    c = cmp(x.b_, y.b_);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string GoldenRational::to_string() const { return a_.get_str() + " + " + b_.get_str() + "*phi"; }

GoldenRational golden_mul(const GoldenRational& x, const GoldenRational& y) { return x * y; }

GoldenRational golden_inv(const GoldenRational& x) { return x.inv(); }

}  // namespace aperiodic
