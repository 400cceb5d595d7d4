#include "spantree/real.hpp"

#include <atomic>
#include <stdexcept>
#include <vector>

namespace spantree {

namespace {
std::atomic<long> g_precision{256};
}

void Real::set_default_precision(long bits) {
    if (bits < 64) throw std::invalid_argument("Real: precision must be >= 64 bits");
    g_precision.store(bits);
}

long Real::default_precision() { return g_precision.load(); }

Real::Real() { mpfr_init2(v_, g_precision.load()); mpfr_set_zero(v_, 1); }
Real::Real(int v) : Real(static_cast<long>(v)) {}
Real::Real(long v) { mpfr_init2(v_, g_precision.load()); mpfr_set_si(v_, v, MPFR_RNDN); }
Real::Real(unsigned long v) { mpfr_init2(v_, g_precision.load()); mpfr_set_ui(v_, v, MPFR_RNDN); }
Real::Real(double v) { mpfr_init2(v_, g_precision.load()); mpfr_set_d(v_, v, MPFR_RNDN); }
Real::Real(const BigInt& z) { mpfr_init2(v_, g_precision.load()); mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
Real::Real(const BigRat& q) { mpfr_init2(v_, g_precision.load()); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }

Real::Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }

Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

double Real::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string Real::str(int significant_digits) const {
    std::vector<char> buf(static_cast<size_t>(significant_digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", significant_digits, v_);
    return std::string(buf.data());
}

bool Real::is_finite() const { return mpfr_number_p(v_) != 0; }

Real& Real::operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

Real Real::operator-() const {
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

#define SPANTREE_UNARY(name, fn)                       \
    Real name(const Real& x) {                         \
        Real r;                                        \
        fn(r.raw(), x.raw(), MPFR_RNDN);               \
        return r;                                      \
    }

SPANTREE_UNARY(sqrt, mpfr_sqrt)
SPANTREE_UNARY(log, mpfr_log)
SPANTREE_UNARY(exp, mpfr_exp)
SPANTREE_UNARY(sin, mpfr_sin)
SPANTREE_UNARY(cos, mpfr_cos)
SPANTREE_UNARY(abs, mpfr_abs)
SPANTREE_UNARY(log_gamma, mpfr_lngamma)

#undef SPANTREE_UNARY

Real floor(const Real& x) {
    Real r;
    mpfr_floor(r.raw(), x.raw());
    return r;
}

Real pow(const Real& base, const Real& e) {
    Real r;
    mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
    return r;
}

Real pow(const Real& base, long e) {
    Real r;
    mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
    return r;
}

Real atan2(const Real& y, const Real& x) {
    Real r;
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real hypot(const Real& x, const Real& y) {
    Real r;
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real const_pi() {
    Real r;
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real abs(const CReal& z) { return hypot(z.re, z.im); }
Real arg(const CReal& z) { return atan2(z.im, z.re); }

CReal log(const CReal& z) { return {log(abs(z)), arg(z)}; }

CReal exp(const CReal& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

CReal pow(const CReal& z, const Real& e) { return exp(e * log(z)); }

}  // namespace spantree
