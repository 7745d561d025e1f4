#include "q5/univariate.hpp"

#include <stdexcept>

namespace q5 {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(Rational c) { return UPoly(std::vector<Rational>{std::move(c)}); }

UPoly UPoly::monomial(int degree, Rational c) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
    v[degree] = std::move(c);
    return UPoly(std::move(v));
}

UPoly UPoly::one_minus(const Rational& c, int e) { return constant(1) - monomial(e, c); }

void UPoly::trim() {
    while (!c_.empty() && q5::is_zero(c_.back())) c_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (is_zero(a.c_[i])) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
}

UPoly UPoly::scaled(const Rational& k) const {
    UPoly r = *this;
    for (auto& c : r.c_) c *= k;
    r.trim();
    return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    UPoly rem = a;
    if (a.degree() < b.degree()) return {UPoly(), rem};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const int shift = rem.degree() - b.degree();
        Rational f = rem.leading() / lead;
        for (int i = 0; i <= b.degree(); ++i) rem.c_[i + shift] -= f * b.c_[i];
        q[shift] = f;
        rem.trim();
    }
    return {UPoly(std::move(q)), rem};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rational(1) / a.leading());
}

UPoly UPoly::pow(int k) const {
    UPoly r = constant(1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::string UPoly::str(char var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (q5::is_zero(c_[i])) continue;
        Rational c = c_[i];
        if (out.empty()) {
            if (sgn(c) < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
            if (sgn(c) < 0) c = -c;
        }
        if (i == 0 || c != 1) out += to_string(c);
        if (i > 0) {
            if (c != 1) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::vector<Rational> taylor_coefficients(const UPoly& num, const UPoly& den, int n) {
    if (is_zero(den.at(0))) throw std::domain_error("denominator vanishes at 0");
    std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
    const Rational d0 = den.at(0);
    for (int i = 0; i <= n; ++i) {
        Rational acc = num.at(i);
        for (int j = 1; j <= i && j <= den.degree(); ++j) acc -= den.at(j) * out[i - j];
        out[i] = acc / d0;
    }
    return out;
}

}  // namespace q5
