#include "opalg/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace opalg {

void Scalar::insert(unsigned hpow, const GaussianRational& c) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), hpow,
                               [](const Term& t, unsigned p) { return t.hpow < p; });
    if (it != terms_.end() && it->hpow == hpow) {
        it->c = it->c + c;
        if (it->c.is_zero()) terms_.erase(it);
    } else if (!c.is_zero()) {
        terms_.insert(it, {hpow, c});
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r = *this;
    for (const Term& t : o.terms_) r.insert(t.hpow, t.c);
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    Scalar r = *this;
    for (const Term& t : o.terms_) r.insert(t.hpow, -t.c);
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (Term& t : r.terms_) t.c = -t.c;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r;
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) r.insert(a.hpow + b.hpow, a.c * b.c);
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t j = 0; j < terms_.size(); ++j)
        if (terms_[j].hpow != o.terms_[j].hpow || !(terms_[j].c == o.terms_[j].c)) return false;
    return true;
}

std::complex<double> Scalar::to_complex(double hbar_value) const {
    std::complex<double> v(0.0, 0.0);
    for (const Term& t : terms_) {
        double h = 1.0;
        for (unsigned j = 0; j < t.hpow; ++j) h *= hbar_value;
        v += std::complex<double>(static_cast<double>(t.c.re), static_cast<double>(t.c.im)) * h;
    }
    return v;
}

namespace {

void print_rational(std::ostream& os, const Rational& q, bool as_factor) {
    if (denominator(q) == 1) {
        os << numerator(q);
    } else if (as_factor) {
        os << "(" << numerator(q) << "/" << denominator(q) << ")";
    } else {
        os << numerator(q) << "/" << denominator(q);
    }
}

}  // namespace

std::string Scalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& q, bool imag, unsigned hpow) {
        if (q == 0) return;
        Rational a = q;
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        first = false;
        if (a < 0) a = -a;
        bool has_sym = imag || hpow > 0;
        if (!has_sym || a != 1) {
            print_rational(os, a, has_sym);
            if (has_sym) os << "*";
        }
        if (imag) os << "i" << (hpow > 0 ? "*" : "");
        if (hpow == 1) os << "hbar";
        else if (hpow > 1) os << "hbar^" << hpow;
    };
    for (const Term& t : terms_) {
        emit(t.c.re, false, t.hpow);
        emit(t.c.im, true, t.hpow);
    }
    return os.str();
}

}  // namespace opalg
