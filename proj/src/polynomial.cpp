#include "lr/polynomial.hpp"

#include <sstream>

#include "lr/errors.hpp"

namespace lr {

namespace {
void trim(std::vector<Rat>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

RationalPolynomial::RationalPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim(coeffs_);
}

Rat RationalPolynomial::operator()(const Rat& x) const {
    Rat acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& rhs) const {
    std::vector<Rat> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& rhs) const {
    if (coeffs_.empty() || rhs.coeffs_.empty()) return {};
    std::vector<Rat> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator*(const Rat& s) const {
    std::vector<Rat> out = coeffs_;
    for (auto& c : out) c *= s;
    return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        Rat c = coeffs_[i];
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        first = false;
        Rat a = abs(c);
        if (a != 1 || i == 0) out << a.get_str();
        if (i > 0) {
            if (a != 1) out << "*";
            out << "n";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

std::vector<Int> GeneratingFunction::expand(long n_max) const {
    // 1/(1-z)^d has coefficients C(n+d-1, d-1); accumulate shifted copies.
    std::vector<Int> out(std::max(n_max + 1, 0L), 0);
    std::vector<Int> base(out.size(), 0);
    for (long n = 0; n <= n_max; ++n) {
        mpz_bin_uiui(base[n].get_mpz_t(), n + denom_power - 1, denom_power - 1);
    }
    for (std::size_t j = 0; j < numerator.size(); ++j)
        for (long n = static_cast<long>(j); n <= n_max; ++n)
            out[n] += numerator[j] * base[n - j];
    return out;
}

RationalPolynomial fit(const std::vector<std::pair<Int, Int>>& points, unsigned verify_extra) {
    if (points.size() < 2) throw std::invalid_argument("fit needs at least two points");
    if (verify_extra >= points.size())
        throw std::invalid_argument("verify_extra leaves no points to fit");
    std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("fit points must have distinct abscissae");

    // Newton divided differences over all points; with unit-spaced abscissae
    // these are the forward differences scaled by factorials.
    std::vector<Rat> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = Rat(points[i].second);
    for (std::size_t order = 1; order < n; ++order)
        for (std::size_t i = n - 1; i >= order; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rat(points[i].first - points[i - order].first);
            dd[i].canonicalize();
        }

    std::size_t detected = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (dd[i] != 0) detected = i;

    // The top verify_extra difference orders must vanish: equivalently, the
    // polynomial through the untouched prefix already matches the held-out
    // tail of the window.
    if (verify_extra > 0 && detected > n - 1 - verify_extra)
        throw non_polynomial_window(
            "window of " + std::to_string(n) + " samples does not determine a polynomial of degree <= " +
            std::to_string(n - 1 - verify_extra));

    RationalPolynomial acc;
    RationalPolynomial basis(std::vector<Rat>{Rat(1)});
    for (std::size_t i = 0; i <= detected; ++i) {
        acc = acc + basis * dd[i];
        basis = basis * RationalPolynomial(std::vector<Rat>{Rat(-points[i].first), Rat(1)});
    }
    return acc;
}

Rat evaluate(const RationalPolynomial& p, const Int& n) { return p(Rat(n)); }

GeneratingFunction generating_function(const RationalPolynomial& p) {
    GeneratingFunction g;
    long d = std::max(p.degree(), 0L);
    g.denom_power = d + 1;
    g.numerator.assign(d + 1, 0);
    std::vector<Int> values(d + 1);
    for (long i = 0; i <= d; ++i) {
        Rat v = p(Rat(Int(i)));
        if (v.get_den() != 1)
            throw non_integer_sequence("polynomial is not integer-valued at n = " +
                                       std::to_string(i));
        values[i] = v.get_num();
    }
    // numerator = (1-z)^{d+1} * sum p(i) z^i, truncated at degree d.
    for (long j = 0; j <= d; ++j) {
        Int acc = 0;
        for (long i = 0; i <= j; ++i) {
            Int binom;
            mpz_bin_uiui(binom.get_mpz_t(), d + 1, j - i);
            if ((j - i) % 2)
                acc -= binom * values[i];
            else
                acc += binom * values[i];
        }
        g.numerator[j] = acc;
    }
    while (!g.numerator.empty() && g.numerator.back() == 0) g.numerator.pop_back();

    // Round-trip: the expansion must reproduce p on 0..2d+2.
    auto back = g.expand(2 * d + 2);
    for (long i = 0; i <= 2 * d + 2; ++i)
        if (Rat(back[i]) != p(Rat(Int(i))))
            throw std::logic_error("generating function round-trip failed");
    return g;
}

}  // namespace lr
