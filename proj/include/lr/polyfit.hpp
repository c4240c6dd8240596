#pragma once

#include "lr/polynomial.hpp"
#include "lr/stretch.hpp"

namespace lr {

struct Triple {
    Partition lam, mu, nu;
    bool operator==(const Triple&) const = default;
};

// Fits f(n) = c(n*lam; n*mu, n*nu) on n = 0..n_max; f is a polynomial for all
// n >= 0.  The last verify_extra samples are held out as a consistency check.
RationalPolynomial stretched_poly(const Partition& lam, const Partition& mu, const Partition& nu,
                                  long n_max, unsigned verify_extra = 2, unsigned threads = 1);

// Fits the tail polynomial g with P(n) = g(n) for n >= n_start, from samples
// at n_start..n_start+n_count-1.  Throws non_polynomial_window when the
// window starts before the polynomial regime.
RationalPolynomial generalized_poly(const Partition& lam, const Partition& mu,
                                    const Partition& nu, const Partition& lamp,
                                    const Partition& mup, const Partition& nup, long n_start,
                                    long n_count, unsigned verify_extra = 2,
                                    unsigned threads = 1);

// (lam,mu,nu) is larger than (lamp,mup,nup) when the componentwise difference
// is a triple of partitions with positive LR coefficient.
bool larger_than(const Triple& t, const Triple& tp);

// Looks for k <= k_max with k*(lam,mu,nu) larger than the primed triple; when
// found, checks that the tail polynomial of P has the same degree as the
// polynomial of f and throws logic_error otherwise.  Returns whether such a k
// exists.
bool degree_transfer_check(const Partition& lam, const Partition& mu, const Partition& nu,
                           const Partition& lamp, const Partition& mup, const Partition& nup,
                           long k_max);

// Consistency probe of saturation: f(n) != 0 for some n <= n_max implies
// f(1) != 0.
bool saturation_check(const Partition& lam, const Partition& mu, const Partition& nu,
                      long n_max);

}  // namespace lr
