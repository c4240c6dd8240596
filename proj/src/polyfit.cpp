#include "lr/polyfit.hpp"

#include "lr/errors.hpp"
#include "lr/parallel.hpp"

namespace lr {

namespace {

std::vector<std::pair<Int, Int>> sample_f(const Partition& lam, const Partition& mu,
                                          const Partition& nu, long n_first, long n_last,
                                          unsigned threads) {
    auto values = indexed_parallel<Int>(n_first, n_last, threads, [&](long n) {
        return lr_coefficient(scale(n, lam), scale(n, mu), scale(n, nu));
    });
    std::vector<std::pair<Int, Int>> points;
    for (long n = n_first; n <= n_last; ++n) points.emplace_back(n, values[n - n_first]);
    return points;
}

std::vector<std::pair<Int, Int>> sample_p(const Partition& lam, const Partition& mu,
                                          const Partition& nu, const Partition& lamp,
                                          const Partition& mup, const Partition& nup,
                                          long n_first, long n_last, unsigned threads) {
    auto values = indexed_parallel<Int>(n_first, n_last, threads, [&](long n) {
        return p_value(lam, mu, nu, lamp, mup, nup, n);
    });
    std::vector<std::pair<Int, Int>> points;
    for (long n = n_first; n <= n_last; ++n) points.emplace_back(n, values[n - n_first]);
    return points;
}

}  // namespace

RationalPolynomial stretched_poly(const Partition& lam, const Partition& mu, const Partition& nu,
                                  long n_max, unsigned verify_extra, unsigned threads) {
    if (lam.sum() != mu.sum() + nu.sum())
        throw invalid_shape("stretched_poly needs |lam| = |mu| + |nu|");
    return fit(sample_f(lam, mu, nu, 0, n_max, threads), verify_extra);
}

RationalPolynomial generalized_poly(const Partition& lam, const Partition& mu,
                                    const Partition& nu, const Partition& lamp,
                                    const Partition& mup, const Partition& nup, long n_start,
                                    long n_count, unsigned verify_extra, unsigned threads) {
    if (n_count < 2) throw std::invalid_argument("generalized_poly needs at least two samples");
    return fit(sample_p(lam, mu, nu, lamp, mup, nup, n_start, n_start + n_count - 1, threads),
               verify_extra);
}

bool larger_than(const Triple& t, const Triple& tp) {
    auto dl = subtract(t.lam, tp.lam);
    auto dm = subtract(t.mu, tp.mu);
    auto dn = subtract(t.nu, tp.nu);
    if (!dl || !dm || !dn) return false;
    return lr_coefficient(*dl, *dm, *dn) > 0;
}

bool degree_transfer_check(const Partition& lam, const Partition& mu, const Partition& nu,
                           const Partition& lamp, const Partition& mup, const Partition& nup,
                           long k_max) {
    long k_found = 0;
    for (long k = 1; k <= k_max; ++k) {
        Triple scaled{scale(k, lam), scale(k, mu), scale(k, nu)};
        if (larger_than(scaled, Triple{lamp, mup, nup})) {
            k_found = k;
            break;
        }
    }
    if (k_found == 0) return false;

    // Degree of f, from a window grown until the fit verifies.
    RationalPolynomial f;
    bool have_f = false;
    for (long n_max = 4; n_max <= 24 && !have_f; n_max += 4) {
        try {
            f = stretched_poly(lam, mu, nu, n_max);
            have_f = true;
        } catch (const non_polynomial_window&) {
        }
    }
    if (!have_f) throw non_polynomial_window("degree of the stretched polynomial not confirmed");

    // Tail polynomial of P, from a window slid past the regime change.
    long width = f.degree() + 4;
    for (long start = 0; start <= 10; ++start) {
        try {
            RationalPolynomial g =
                generalized_poly(lam, mu, nu, lamp, mup, nup, start, width);
            if (g.degree() != f.degree())
                throw std::logic_error("tail polynomial degree differs from stretched degree");
            return true;
        } catch (const non_polynomial_window&) {
        }
    }
    throw non_polynomial_window("no polynomial tail window found for P");
}

bool saturation_check(const Partition& lam, const Partition& mu, const Partition& nu,
                      long n_max) {
    if (lam.sum() != mu.sum() + nu.sum()) return true;  // every f(n>=1) is 0
    bool any = false;
    for (long n = 1; n <= n_max; ++n)
        if (lr_coefficient(scale(n, lam), scale(n, mu), scale(n, nu)) != 0) {
            any = true;
            break;
        }
    if (!any) return true;
    return lr_coefficient(lam, mu, nu) != 0;
}

}  // namespace lr
