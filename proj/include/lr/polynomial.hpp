#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "lr/partition.hpp"

namespace lr {

using Rat = mpq_class;

// Polynomial with exact rational coefficients, ascending degree order.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rat> coeffs);

    const std::vector<Rat>& coefficients() const { return coeffs_; }
    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    Rat operator()(const Rat& x) const;  // Horner, exact
    Rat operator()(const Int& x) const { return (*this)(Rat(x)); }

    bool operator==(const RationalPolynomial&) const = default;

    RationalPolynomial operator+(const RationalPolynomial& rhs) const;
    RationalPolynomial operator*(const RationalPolynomial& rhs) const;
    RationalPolynomial operator*(const Rat& s) const;

    std::string to_string() const;  // human form, descending powers of n

private:
    std::vector<Rat> coeffs_;
};

// g(0), g(1), ... as numerator(z) / (1-z)^denom_power with integer numerator
// coefficients (ascending powers of z).
struct GeneratingFunction {
    std::vector<Int> numerator;
    long denom_power = 1;

    // Taylor coefficients of numerator / (1-z)^denom_power at 0..n_max.
    std::vector<Int> expand(long n_max) const;

    bool operator==(const GeneratingFunction&) const = default;
};

// Newton interpolation through the given points (distinct abscissae).  The
// last verify_extra points are held out: the polynomial through the rest must
// already match them, otherwise the sample window does not look polynomial
// and non_polynomial_window is thrown.
RationalPolynomial fit(const std::vector<std::pair<Int, Int>>& points,
                       unsigned verify_extra = 2);

Rat evaluate(const RationalPolynomial& p, const Int& n);

// Requires p integer-valued on 0..degree (throws non_integer_sequence).
GeneratingFunction generating_function(const RationalPolynomial& p);

}  // namespace lr
