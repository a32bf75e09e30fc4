#include "crlab/rational.hpp"

#include "crlab/errors.hpp"

namespace crlab {

Caps& caps() {
    static Caps c;
    return c;
}

GaussRat::GaussRat(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw usage_error("rational with zero denominator");
    re_.canonicalize();
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    if (o.is_zero()) throw usage_error("division by zero coefficient");
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

namespace {

std::string imag_part(const mpq_class& q) {
    if (q == 1) return "i";
    if (q == -1) return "-i";
    return q.get_str() + "i";
}

}  // namespace

std::string GaussRat::str() const {
    if (im_ == 0) return re_.get_str();
    if (re_ == 0) return imag_part(im_);
    std::string s = re_.get_str();
    if (im_ > 0) s += "+";
    s += imag_part(im_);
    return s;
}

}  // namespace crlab
