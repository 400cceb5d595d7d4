#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "spantree/exact.hpp"

namespace spantree {

// Arbitrary-precision float on top of MPFR. Every value carries the
// process-wide default precision captured at construction time; all exact
// rationals are converted here only at the presentation boundary.
class Real {
public:
    static void set_default_precision(long bits);  // bits >= 64
    static long default_precision();

    Real();
    Real(int v);
    Real(long v);
    Real(unsigned long v);
    Real(double v);
    explicit Real(const BigInt& z);
    explicit Real(const BigRat& q);

    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    double to_double() const;
    std::string str(int significant_digits = 20) const;
    bool is_finite() const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real operator-() const;

    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real pow(const Real& base, const Real& e);
Real pow(const Real& base, long e);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real abs(const Real& x);
Real floor(const Real& x);
Real log_gamma(const Real& x);  // x > 0
Real const_pi();

inline Real log_factorial(long n) { return log_gamma(Real(n + 1)); }

// Complex values over Real, just enough for the saddle-point evaluations:
// principal log, exp, powers with real exponent.
struct CReal {
    Real re, im;

    CReal() = default;
    CReal(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit CReal(Real r) : re(std::move(r)), im(0) {}

    CReal operator-() const { return {-re, -im}; }
    friend CReal operator+(const CReal& a, const CReal& b) { return {a.re + b.re, a.im + b.im}; }
    friend CReal operator-(const CReal& a, const CReal& b) { return {a.re - b.re, a.im - b.im}; }
    friend CReal operator*(const CReal& a, const CReal& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CReal operator*(const Real& s, const CReal& a) { return {s * a.re, s * a.im}; }
    CReal conj() const { return {re, -im}; }
};

Real abs(const CReal& z);
Real arg(const CReal& z);           // principal value in (-pi, pi]
CReal log(const CReal& z);          // principal branch
CReal exp(const CReal& z);
CReal pow(const CReal& z, const Real& e);  // exp(e * log z), principal

}  // namespace spantree
