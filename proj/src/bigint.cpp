#include "markov_mmp/bigint.hpp"

#include <stdexcept>

namespace mm {

Int inv_mod(const Int& a, const Int& m) {
    if (m == 1) return 0;
    Int r;
    Int am = mod(a, m);
    if (mpz_invert(r.get_mpz_t(), am.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("not invertible: " + a.get_str() + " mod " + m.get_str());
    return r;
}

Int parse_int(const std::string& s) {
    Int r;
    if (s.empty() || r.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: " + s);
    return r;
}

}  // namespace mm
