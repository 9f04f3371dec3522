#pragma once

// Exact extended-real scalars and points of the extended plane.
//
// Every coordinate and every distance in this library is either an exact
// rational (GMP mpq, always canonical) or one of the symbolic values
// +inf / -inf, totally ordered as  -inf < q < +inf  for every rational q.

#include <gmpxx.h>

#include <cassert>
#include <optional>
#include <string>
#include <utility>

namespace persistdist {

using Rational = mpq_class;

class ExtendedScalar {
public:
    ExtendedScalar() : kind_(Kind::Finite), value_(0) {}
    ExtendedScalar(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {}
    ExtendedScalar(long v) : kind_(Kind::Finite), value_(v) {}
    ExtendedScalar(int v) : kind_(Kind::Finite), value_(v) {}

    static ExtendedScalar pos_inf() { return ExtendedScalar(Kind::PosInf); }
    static ExtendedScalar neg_inf() { return ExtendedScalar(Kind::NegInf); }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_infinite() const { return kind_ != Kind::Finite; }

    // Only valid on finite values.
    const Rational& value() const {
        assert(is_finite());
        return value_;
    }

    bool operator==(const ExtendedScalar& o) const {
        if (kind_ != o.kind_) return false;
        return kind_ != Kind::Finite || value_ == o.value_;
    }
    bool operator!=(const ExtendedScalar& o) const { return !(*this == o); }
    bool operator<(const ExtendedScalar& o) const {
        if (kind_ != o.kind_) return rank() < o.rank();
        return kind_ == Kind::Finite && value_ < o.value_;
    }
    bool operator>(const ExtendedScalar& o) const { return o < *this; }
    bool operator<=(const ExtendedScalar& o) const { return !(o < *this); }
    bool operator>=(const ExtendedScalar& o) const { return !(*this < o); }

    ExtendedScalar operator-() const {
        switch (kind_) {
        case Kind::PosInf: return neg_inf();
        case Kind::NegInf: return pos_inf();
        default: return ExtendedScalar(Rational(-value_));
        }
    }

    std::string str() const;

private:
    enum class Kind { NegInf, Finite, PosInf };
    explicit ExtendedScalar(Kind k) : kind_(k), value_(0) {}
    int rank() const { return kind_ == Kind::NegInf ? -1 : (kind_ == Kind::Finite ? 0 : 1); }

    Kind kind_;
    Rational value_;
};

// a + d for finite rational d; infinities absorb.
ExtendedScalar ext_add(const ExtendedScalar& a, const Rational& d);

// a - b where equal infinities cancel to 0 is NOT defined here; this is the
// plain extended subtraction used for slice offsets (a, b never opposite
// infinite in any call site; asserted).
ExtendedScalar ext_sub(const ExtendedScalar& a, const ExtendedScalar& b);

// |a - b| under the boundary-at-infinity convention: equal infinities
// differ by 0, any other mix involving an infinity differs by +inf.
ExtendedScalar ext_abs_diff(const ExtendedScalar& a, const ExtendedScalar& b);

ExtendedScalar ext_half(const ExtendedScalar& a);

inline const ExtendedScalar& ext_min(const ExtendedScalar& a, const ExtendedScalar& b) {
    return b < a ? b : a;
}
inline const ExtendedScalar& ext_max(const ExtendedScalar& a, const ExtendedScalar& b) {
    return a < b ? b : a;
}

struct Point {
    ExtendedScalar x;
    ExtendedScalar y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    bool is_finite() const { return x.is_finite() && y.is_finite(); }
    std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

// Lexicographic order, used for canonical component ordering.
bool lex_less(const Point& a, const Point& b);

// p <= q in the product order.
inline bool point_leq(const Point& p, const Point& q) { return p.x <= q.x && p.y <= q.y; }

// max(|p.x-q.x|, |p.y-q.y|) with the infinity convention of ext_abs_diff.
ExtendedScalar dist_inf(const Point& p, const Point& q);

// The slope-1 line through `anchor`.  With a finite anchor this is an
// ordinary diagonal; with exactly one infinite coordinate it degenerates to
// the corresponding edge of the extended plane's boundary; with two it is
// the single point `anchor`.
struct DiagonalLine {
    Point anchor;
};

// Two diagonal lines coincide iff they contain the same points.
bool same_line(const DiagonalLine& a, const DiagonalLine& b);

}  // namespace persistdist
