#pragma once

// Straight-line big-integer versions of the constant recurrences, written without BoundExpr.

#include <gmpxx.h>

#include <algorithm>
#include <vector>

namespace reference {

inline mpz_class two_pow(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

struct Tick {
  mpz_class m, c, d2, d1, d0;
};

inline Tick gettick(unsigned j, unsigned long k, unsigned long m, unsigned long c, unsigned long kappa) {
  mpz_class mj = 1, cj = 1, d2 = 0, d1 = 0, d0 = 0;
  for (unsigned level = 1; level <= j; ++level) {
    mpz_class m_prev = mj, c_prev = cj;
    mj = 2 * k * m * m_prev;
    mpz_class p = two_pow(mj.get_ui());
    d2 = mj * p * c_prev + p * c;
    d1 = d2 + mj * kappa;
    d0 = k * p * d1;
    cj = d0 + k * kappa;
  }
  return {mj, cj, d2, d1, d0};
}

inline mpz_class phi1(const mpz_class& x, unsigned long ell, unsigned long kappa) {
  return 2 * mpz_class(ell - 3) * (kappa + x) + 1;
}

// sigma[0..t] with phi = phi_1(ell, kappa_phi).
inline std::vector<mpz_class> sigma(unsigned long t, unsigned long c, unsigned long tau, unsigned long kappa,
                                    unsigned long h, unsigned long ell, unsigned long kappa_phi) {
  std::vector<mpz_class> s(t + 1);
  mpz_class floor = tau + mpz_class(h) * kappa;
  s[t] = std::max(mpz_class(c), floor);
  for (unsigned long i = t; i-- > 0;) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), h + 1, i);
    mpz_class v = two_pow(i) * phi1(scale * s[i + 1], ell, kappa_phi);
    s[i] = std::max(v, floor);
  }
  return s;
}

}  // namespace reference
