#ifndef OPALG_SCALAR_HPP
#define OPALG_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace opalg {

using Rational = boost::multiprecision::cpp_rational;

/// Exact complex rational q_re + q_im * i.
struct GaussianRational {
    Rational re;
    Rational im;

    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
};

/// Exact scalar of the engine: a polynomial in the formal symbol hbar with
/// Gaussian-rational coefficients.  All arithmetic is exact; equality is
/// canonical (no zero terms, terms sorted by hbar power).
class Scalar {
public:
    struct Term {
        unsigned hpow;
        GaussianRational c;
    };

    Scalar() = default;

    static Scalar integer(long n) { return of({Rational(n), Rational(0)}, 0); }
    static Scalar rational(const Rational& q) { return of({q, Rational(0)}, 0); }
    static Scalar rational(long num, long den) { return of({Rational(num) / den, Rational(0)}, 0); }
    static Scalar i() { return of({Rational(0), Rational(1)}, 0); }
    static Scalar hbar(unsigned pow = 1) { return of({Rational(1), Rational(0)}, pow); }
    static Scalar i_hbar() { return of({Rational(0), Rational(1)}, 1); }
    static Scalar of(const GaussianRational& c, unsigned hpow) {
        Scalar s;
        if (!c.is_zero()) s.terms_.push_back({hpow, c});
        return s;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Numerical value with hbar substituted.
    std::complex<double> to_complex(double hbar_value) const;

    std::string to_string() const;

private:
    void insert(unsigned hpow, const GaussianRational& c);

    std::vector<Term> terms_;  // sorted by hpow, no zero coefficients
};

}  // namespace opalg

#endif
