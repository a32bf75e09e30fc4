#pragma once

#include <gmpxx.h>

#include <string>

namespace crlab {

/// Gaussian rational: re + im*i with arbitrary-precision rational parts.
/// mpq_class keeps both parts in lowest terms with positive denominators,
/// so equality is structural and all arithmetic is exact.
class GaussRat {
  public:
    GaussRat() : re_(0), im_(0) {}
    GaussRat(long n) : re_(n), im_(0) {}
    GaussRat(const mpq_class& re) : re_(re), im_(0) {}
    GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussRat(long num, long den);

    static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    // Total order used only for canonical serialization, not algebra.
    friend bool operator<(const GaussRat& a, const GaussRat& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    /// Exact text form: "0", "3/2", "i", "-i", "2i", "1+2i", "3/2-1/2i".
    std::string str() const;

  private:
    mpq_class re_, im_;
};

}  // namespace crlab
