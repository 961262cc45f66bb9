#ifndef VALTREE_RATIONAL_HPP
#define VALTREE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "valtree/errors.hpp"

namespace valtree {

// Exact arithmetic everywhere; no floating point in the library.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "n", "-n", "n/d". Canonicalizes sign and gcd.
inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw invalid_input("cannot parse rational '" + s + "'");
    if (q.get_den() == 0)
        throw invalid_input("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Exponent of p in n. Pre: n != 0, p >= 2.
inline long int_valuation(Int n, const Int& p) {
    long v = 0;
    Int q, r;
    for (;;) {
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) return v;
        n = q;
        ++v;
    }
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int mod_pos(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Inverse of a mod m; pre: gcd(a, m) = 1.
inline Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw invalid_input("element not invertible mod m");
    return r;
}

}  // namespace valtree

#endif
