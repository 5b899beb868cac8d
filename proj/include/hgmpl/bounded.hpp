#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hgmpl {

inline constexpr long double kEps = std::numeric_limits<long double>::epsilon();

// value with a certified absolute error bound; every operation widens the
// bound by the incoming bounds plus one rounding of the result
struct Bounded {
    long double v = 0.0L;
    long double err = 0.0L;

    Bounded() = default;
    Bounded(long double value) : v(value) {}
    Bounded(long double value, long double e) : v(value), err(e) {}
};

inline long double upper_abs(const Bounded& a) { return std::fabs(a.v) + a.err; }

inline Bounded operator-(const Bounded& a) { return Bounded(-a.v, a.err); }

inline Bounded operator+(const Bounded& a, const Bounded& b) {
    Bounded r(a.v + b.v, a.err + b.err);
    r.err += kEps * std::fabs(r.v);
    return r;
}

inline Bounded operator-(const Bounded& a, const Bounded& b) { return a + (-b); }

inline Bounded operator*(const Bounded& a, const Bounded& b) {
    Bounded r(a.v * b.v,
              a.err * std::fabs(b.v) + b.err * std::fabs(a.v) + a.err * b.err);
    r.err += kEps * std::fabs(r.v);
    return r;
}

inline Bounded operator/(const Bounded& a, const Bounded& b) {
    if (std::fabs(b.v) <= 2.0L * b.err)
        throw std::domain_error("division by a value indistinguishable from zero");
    Bounded r(a.v / b.v);
    r.err = (a.err + std::fabs(r.v) * b.err) / (std::fabs(b.v) - b.err);
    r.err += kEps * std::fabs(r.v);
    return r;
}

inline Bounded& operator+=(Bounded& a, const Bounded& b) { return a = a + b; }
inline Bounded& operator-=(Bounded& a, const Bounded& b) { return a = a - b; }
inline Bounded& operator*=(Bounded& a, const Bounded& b) { return a = a * b; }

} // namespace hgmpl
