#ifndef CONELAB_RATIONAL_HPP
#define CONELAB_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace conelab {

/// Exact rational number, canonical (reduced, positive denominator).
///
/// Every predicate that selects a table row or region membership runs on
/// Rational values; no floating-point comparison is allowed to feed such
/// logic. Backed by GMP, so the arithmetic never overflows.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long num) : v_(num) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "num/den" or "num". Throws on malformed input or zero denominator.
    static Rational parse(const std::string& text);

    long num_long() const { return mpz_get_si(v_.get_num_mpz_t()); }
    long den_long() const { return mpz_get_si(v_.get_den_mpz_t()); }
    const mpq_class& raw() const { return v_; }

    double to_double() const { return v_.get_d(); }
    bool is_integer() const { return v_.get_den() == 1; }
    /// Greatest integer <= value.
    long floor() const;
    /// Least integer >= value.
    long ceil() const;

    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

/// True when t lies in -N = {0, -1, -2, ...}.
inline bool is_nonpositive_integer(const Rational& t) {
    return t.is_integer() && t <= Rational(0);
}

}  // namespace conelab

#endif
