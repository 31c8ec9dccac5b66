#pragma once

// Small uniform vocabulary so generic containers (series, matrices,
// weighted algebras) can build constants of the right characteristic from
// an existing element.

#include <cstdint>

#include "itconn/fp.hpp"
#include "itconn/mpoly.hpp"
#include "itconn/qpoly.hpp"
#include "itconn/ratfunc.hpp"

namespace itconn {

inline RatFunc from_int_like(const RatFunc& x, int64_t n) { return RatFunc::constant(x.prime(), n); }
inline MPoly from_int_like(const MPoly& x, int64_t n) {
    return MPoly::constant(x.prime(), x.nvars(), n);
}
inline QPoly from_int_like(const QPoly&, int64_t n) { return QPoly::constant(mpq_class(n)); }

template <class T>
T zero_like(const T& x) {
    return from_int_like(x, 0);
}
template <class T>
T one_like(const T& x) {
    return from_int_like(x, 1);
}

// Binomial coefficient C(n, k) as a ring element.
inline RatFunc binom_like(const RatFunc& x, uint64_t n, uint64_t k) {
    return RatFunc::constant(x.prime(), binomial_mod_p(n, k, x.prime()));
}
inline MPoly binom_like(const MPoly& x, uint64_t n, uint64_t k) {
    return MPoly::constant(x.prime(), x.nvars(), binomial_mod_p(n, k, x.prime()));
}
inline QPoly binom_like(const QPoly&, uint64_t n, uint64_t k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return QPoly::constant(mpq_class(b));
}

}  // namespace itconn
