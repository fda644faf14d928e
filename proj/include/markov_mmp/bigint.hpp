#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mm {

using Int = mpz_class;
using Rat = mpq_class;

// Least nonnegative residue.
inline Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Throws std::domain_error if a is not invertible mod m.
Int inv_mod(const Int& a, const Int& m);

inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_square(const Int& a, Int* root = nullptr) {
    if (a < 0) return false;
    Int r = isqrt(a);
    if (root) *root = r;
    return r * r == a;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline std::string str(const Int& a) { return a.get_str(); }

Int parse_int(const std::string& s);

}  // namespace mm
