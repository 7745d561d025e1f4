#include "q5/quad_ext.hpp"

namespace q5 {

QuadExt::QuadExt(Rational rat, Rational surd, long radicand)
    : rat_(std::move(rat)), surd_(std::move(surd)), radicand_(radicand) {
    if (!is_square_free(radicand))
        throw DomainError("radicand " + std::to_string(radicand) + " is not square-free");
    normalize();
}

void QuadExt::normalize() {
    if (radicand_ == 1) {
        rat_ += surd_;
        surd_ = 0;
    } else if (is_zero(surd_)) {
        radicand_ = 1;
    }
}

long QuadExt::common_radicand(const QuadExt& o) const {
    if (radicand_ == 1) return o.radicand_;
    if (o.radicand_ == 1 || o.radicand_ == radicand_) return radicand_;
    throw DomainError("mixed radicands sqrt(" + std::to_string(radicand_) + ") and sqrt(" +
                      std::to_string(o.radicand_) + ")");
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    radicand_ = common_radicand(o);
    rat_ += o.rat_;
    surd_ += o.surd_;
    normalize();
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    radicand_ = common_radicand(o);
    rat_ -= o.rat_;
    surd_ -= o.surd_;
    normalize();
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    const long n = common_radicand(o);
    Rational r = rat_ * o.rat_ + surd_ * o.surd_ * n;
    Rational s = rat_ * o.surd_ + surd_ * o.rat_;
    rat_ = std::move(r);
    surd_ = std::move(s);
    radicand_ = n;
    normalize();
    return *this;
}

QuadExt& QuadExt::operator*=(long k) {
    rat_ *= k;
    surd_ *= k;
    normalize();
    return *this;
}

std::string QuadExt::str() const {
    if (radicand_ == 1) return to_string(rat_);
    return to_string(rat_) + " + " + to_string(surd_) + "*sqrt(" + std::to_string(radicand_) + ")";
}

}  // namespace q5
