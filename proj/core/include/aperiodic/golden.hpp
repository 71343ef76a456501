#pragma once

#include <gmpxx.h>

#include <string>

namespace aperiodic {

// Element a + b*phi of Q(sqrt 5), phi = (1 + sqrt 5) / 2.
class GoldenRational {
public:
    GoldenRational() = default;
    GoldenRational(long a) : a_(a) {}
    GoldenRational(mpq_class a, mpq_class b = 0);

    static GoldenRational phi() { return GoldenRational(0, 1); }
    static GoldenRational inv_phi() { return GoldenRational(-1, 1); }

    const mpq_class& a() const { return a_; }
    const mpq_class& b() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    int sign() const;
    // Galois conjugate: phi -> 1 - phi.
    GoldenRational conj() const;
    // x * conj(x), a rational.
    mpq_class norm() const;
    GoldenRational inv() const;
    double to_double() const;

    GoldenRational& operator+=(const GoldenRational& o);
    GoldenRational& operator-=(const GoldenRational& o);
    GoldenRational& operator*=(const GoldenRational& o);
    GoldenRational& operator/=(const GoldenRational& o);

    friend GoldenRational operator+(GoldenRational x, const GoldenRational& y) { return x += y; }
    friend GoldenRational operator-(GoldenRational x, const GoldenRational& y) { return x -= y; }
    friend GoldenRational operator*(GoldenRational x, const GoldenRational& y) { return x *= y; }
    friend GoldenRational operator/(GoldenRational x, const GoldenRational& y) { return x /= y; }
    GoldenRational operator-() const { return GoldenRational(-a_, -b_); }

    friend bool operator==(const GoldenRational& x, const GoldenRational& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const GoldenRational& x, const GoldenRational& y) { return !(x == y); }
    // Order as real numbers.
    friend bool operator<(const GoldenRational& x, const GoldenRational& y) { return (x - y).sign() < 0; }
    friend bool operator>(const GoldenRational& x, const GoldenRational& y) { return y < x; }

    // Lexicographic order on (a, b); cheap total order for containers.
    static int lex_compare(const GoldenRational& x, const GoldenRational& y);

    std::string to_string() const;

private:
    mpq_class a_{0};
    mpq_class b_{0};
};

GoldenRational golden_mul(const GoldenRational& x, const GoldenRational& y);
GoldenRational golden_inv(const GoldenRational& x);

}  // namespace aperiodic
