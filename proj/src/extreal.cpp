#include "persistdist/extreal.hpp"

namespace persistdist {

std::string ExtendedScalar::str() const {
    if (is_pos_inf()) return "inf";
    if (is_neg_inf()) return "-inf";
    return value_.get_str();
}

ExtendedScalar ext_add(const ExtendedScalar& a, const Rational& d) {
    if (!a.is_finite()) return a;
    return ExtendedScalar(Rational(a.value() + d));
}

ExtendedScalar ext_sub(const ExtendedScalar& a, const ExtendedScalar& b) {
    if (a.is_finite() && b.is_finite()) return ExtendedScalar(Rational(a.value() - b.value()));
    // Opposite-signed operands keep the sign of `a`; same-signed pairs are
    // indeterminate and must not reach here.
    assert(!(a.is_pos_inf() && b.is_pos_inf()) && !(a.is_neg_inf() && b.is_neg_inf()));
    if (!a.is_finite()) return a;
    return -b;
}

ExtendedScalar ext_abs_diff(const ExtendedScalar& a, const ExtendedScalar& b) {
    if (a.is_finite() && b.is_finite()) {
        Rational d = a.value() - b.value();
        if (d < 0) d = -d;
        return ExtendedScalar(std::move(d));
    }
    if (a == b) return ExtendedScalar(0);
    return ExtendedScalar::pos_inf();
}

ExtendedScalar ext_half(const ExtendedScalar& a) {
    if (!a.is_finite()) return a;
    return ExtendedScalar(Rational(a.value() / 2));
}

bool lex_less(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

ExtendedScalar dist_inf(const Point& p, const Point& q) {
    return ext_max(ext_abs_diff(p.x, q.x), ext_abs_diff(p.y, q.y));
}

bool same_line(const DiagonalLine& a, const DiagonalLine& b) {
    const Point& p = a.anchor;
    const Point& q = b.anchor;
    const int pinf = static_cast<int>(p.x.is_infinite()) + static_cast<int>(p.y.is_infinite());
    const int qinf = static_cast<int>(q.x.is_infinite()) + static_cast<int>(q.y.is_infinite());
    if (pinf != qinf) return false;
    switch (pinf) {
    case 0:
        // same x - y intercept
        return Rational(p.y.value() - p.x.value()) == Rational(q.y.value() - q.x.value());
    case 1:
        // the line is an entire boundary edge; identified by which coordinate
        // is infinite and its sign
        if (p.x.is_infinite()) return p.x == q.x;
        return p.y == q.y;
    default:
        return p == q;
    }
}

}  // namespace persistdist
