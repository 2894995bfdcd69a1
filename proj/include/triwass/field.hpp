// Scalars of the prime field GF(q).
//
// Matrices store raw residues with one modulus per matrix (see matrix.hpp);
// Fp is the scalar-level view used by the public API and the algebra tests.
#pragma once

#include <cstdint>
#include <string>

#include "triwass/rational.hpp"

namespace triwass {

inline constexpr std::uint32_t kDefaultPrime = 32003;

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint32_t checked_prime(std::uint32_t q) {
    if (!is_prime_u32(q)) throw input_error("field modulus " + std::to_string(q) + " is not prime");
    return q;
}

namespace fp_detail {

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
    std::uint64_t s = std::uint64_t(a) + b;
    return std::uint32_t(s >= q ? s - q : s);
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
    return a >= b ? a - b : std::uint32_t(std::uint64_t(a) + q - b);
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
    return std::uint32_t(std::uint64_t(a) * b % q);
}

inline std::uint32_t neg_mod(std::uint32_t a, std::uint32_t q) { return a == 0 ? 0 : q - a; }

// Inverse by extended Euclid; q prime, a != 0.
inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t q) {
    if (a == 0) throw internal_error("GF(q): inverse of zero");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = q, new_r = a;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += q;
    return std::uint32_t(t);
}

// Reduce an arbitrary signed integer into [0, q).
inline std::uint32_t reduce(std::int64_t v, std::uint32_t q) {
    std::int64_t m = v % std::int64_t(q);
    if (m < 0) m += q;
    return std::uint32_t(m);
}

}  // namespace fp_detail

class Fp {
public:
    Fp() : v_(0), q_(kDefaultPrime) {}
    Fp(std::int64_t value, std::uint32_t q) : v_(fp_detail::reduce(value, q)), q_(q) {}

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return q_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(Fp a, Fp b) { return raw(fp_detail::add_mod(a.v_, b.check(a), a.q_), a.q_); }
    friend Fp operator-(Fp a, Fp b) { return raw(fp_detail::sub_mod(a.v_, b.check(a), a.q_), a.q_); }
    friend Fp operator*(Fp a, Fp b) { return raw(fp_detail::mul_mod(a.v_, b.check(a), a.q_), a.q_); }
    friend Fp operator/(Fp a, Fp b) {
        return raw(fp_detail::mul_mod(a.v_, fp_detail::inv_mod(b.check(a), a.q_), a.q_), a.q_);
    }
    Fp operator-() const { return raw(fp_detail::neg_mod(v_, q_), q_); }
    Fp inverse() const { return raw(fp_detail::inv_mod(v_, q_), q_); }

    friend bool operator==(Fp a, Fp b) { return a.q_ == b.q_ && a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }

private:
    static Fp raw(std::uint32_t v, std::uint32_t q) {
        Fp r;
        r.v_ = v;
        r.q_ = q;
        return r;
    }
    std::uint32_t check(Fp other) const {
        if (q_ != other.q_) throw internal_error("GF(q): mixed moduli");
        return v_;
    }

    std::uint32_t v_;
    std::uint32_t q_;
};

}  // namespace triwass
