// Exact rational scalars and the extended line [0, inf].
//
// All measure values, weights and distances in this library are exact
// rationals so that metric identities can be asserted with operator==.
// Backed by boost::multiprecision (arbitrary precision, always in lowest
// terms with positive denominator).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace triwass {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Signals a broken internal invariant (a bug), never bad user input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Rational rat_pow(const Rational& base, unsigned exp) {
    Rational acc = 1;
    for (unsigned i = 0; i < exp; ++i) acc *= base;
    return acc;
}

// Canonical "p/q" form, e.g. "3/1", "-5/2".
inline std::string rat_to_string(const Rational& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Strict base-10 integer; cpp_int's own parser would read a leading zero
// as an octal prefix.
inline BigInt parse_bigint_decimal(const std::string& s) {
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
    if (i >= s.size()) throw input_error("invalid integer literal: '" + s + "'");
    BigInt v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw input_error("invalid integer literal: '" + s + "'");
        v = v * 10 + (s[i] - '0');
    }
    return negative ? BigInt(-v) : v;
}

// Accepts "p/q", "p", and a leading sign; rejects zero denominators.
inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_bigint_decimal(s));
    BigInt num = parse_bigint_decimal(s.substr(0, slash));
    BigInt den = parse_bigint_decimal(s.substr(slash + 1));
    if (den == 0) throw input_error("invalid rational literal: '" + s + "'");
    return Rational(num, den);
}

// Largest d with (d/10^digits)^p <= r, as a decimal string with `digits`
// fractional digits. Exact integer binary search; presentation only.
inline std::string rat_root_decimal(const Rational& r, unsigned p, unsigned digits = 12) {
    if (r < 0) throw internal_error("rat_root_decimal: negative radicand");
    if (p == 0) throw internal_error("rat_root_decimal: zeroth root");
    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    // want d = floor(scale * r^(1/p)):  d^p * den <= num * scale^p
    BigInt num = rat_num(r), den = rat_den(r);
    BigInt rhs = num;
    for (unsigned i = 0; i < p; ++i) rhs *= scale;
    BigInt lo = 0, hi = 1;
    auto fits = [&](const BigInt& d) {
        BigInt lhs = 1;
        for (unsigned i = 0; i < p; ++i) lhs *= d;
        return lhs * den <= rhs;
    };
    while (fits(hi)) hi <<= 1;
    while (lo < hi - 1) {
        BigInt mid = (lo + hi) / 2;
        if (fits(mid)) lo = mid; else hi = mid;
    }
    BigInt ip = lo / scale, fp = lo % scale;
    std::string frac = fp.str();
    frac.insert(frac.begin(), digits - frac.size(), '0');
    return ip.str() + "." + frac;
}

// A rational extended with a single point at +infinity.
class ExtRational {
public:
    ExtRational() : inf_(false), v_(0) {}
    ExtRational(Rational v) : inf_(false), v_(std::move(v)) {}
    ExtRational(int v) : inf_(false), v_(v) {}
    static ExtRational infinity() {
        ExtRational e;
        e.inf_ = true;
        return e;
    }

    bool is_infinite() const { return inf_; }
    const Rational& finite() const {
        if (inf_) throw internal_error("ExtRational: finite() on infinity");
        return v_;
    }

    friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
        if (a.inf_ || b.inf_) return infinity();
        return ExtRational(a.v_ + b.v_);
    }
    ExtRational& operator+=(const ExtRational& o) { return *this = *this + o; }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.inf_ != b.inf_) return false;
        return a.inf_ || a.v_ == b.v_;
    }
    friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
    friend bool operator<(const ExtRational& a, const ExtRational& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const ExtRational& a, const ExtRational& b) { return a < b || a == b; }
    friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
    friend bool operator>=(const ExtRational& a, const ExtRational& b) { return b <= a; }

    std::string str() const { return inf_ ? "inf" : rat_to_string(v_); }

private:
    bool inf_;
    Rational v_;
};

inline ExtRational parse_ext_rational(const std::string& s) {
    if (s == "inf") return ExtRational::infinity();
    return ExtRational(parse_rational(s));
}

}  // namespace triwass
