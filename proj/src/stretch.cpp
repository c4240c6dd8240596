#include "lr/stretch.hpp"

#include <algorithm>

#include "lr/errors.hpp"
#include "lr/parallel.hpp"

namespace lr {

SkewDiagram stretched_diagram(const Partition& lam, const Partition& mu, const Partition& lamp,
                              const Partition& mup, const Int& n) {
    return SkewDiagram(add(scale(n, lam), lamp), add(scale(n, mu), mup));
}

Int q_value(const Partition& lam, const Partition& mu, const Partition& lamp,
            const Partition& mup, const Int& n) {
    return count_all(stretched_diagram(lam, mu, lamp, mup, n));
}

Int p_value(const Partition& lam, const Partition& mu, const Partition& nu,
            const Partition& lamp, const Partition& mup, const Partition& nup, const Int& n) {
    // Shapes are validated even when the coefficient is zero.
    stretched_diagram(lam, mu, lamp, mup, n);
    return lr_coefficient(add(scale(n, lam), lamp), add(scale(n, mu), mup),
                          add(scale(n, nu), nup));
}

std::vector<Int> q_sequence(const Partition& lam, const Partition& mu, const Partition& lamp,
                            const Partition& mup, long n_max, unsigned threads) {
    return indexed_parallel<Int>(0, n_max, threads,
                                 [&](long n) { return q_value(lam, mu, lamp, mup, n); });
}

std::vector<Int> p_sequence(const Partition& lam, const Partition& mu, const Partition& nu,
                            const Partition& lamp, const Partition& mup, const Partition& nup,
                            long n_max, unsigned threads) {
    return indexed_parallel<Int>(
        0, n_max, threads, [&](long n) { return p_value(lam, mu, nu, lamp, mup, nup, n); });
}

namespace {

// The affine family as four aligned rows of values.
struct Family {
    std::vector<Int> lam, mu, lamp, mup;

    std::size_t rows() const { return lam.size(); }

    static Family of(const Partition& lam, const Partition& mu, const Partition& lamp,
                     const Partition& mup) {
        std::size_t rows = std::max(std::max(lam.length(), mu.length()),
                                    std::max(lamp.length(), mup.length()));
        Family f;
        f.lam.resize(rows);
        f.mu.resize(rows);
        f.lamp.resize(rows);
        f.mup.resize(rows);
        for (std::size_t i = 0; i < rows; ++i) {
            f.lam[i] = lam.at(i);
            f.mu[i] = mu.at(i);
            f.lamp[i] = lamp.at(i);
            f.mup[i] = mup.at(i);
        }
        return f;
    }

    // 180-degree rotation of A(n) for every n at once: the unprimed pair is
    // complemented in width lam_1, the primed pair in width lamp_1.
    Family rotated() const {
        Family f;
        std::size_t R = rows();
        f.lam.resize(R);
        f.mu.resize(R);
        f.lamp.resize(R);
        f.mup.resize(R);
        Int w = R ? lam[0] : Int(0);
        Int wp = R ? lamp[0] : Int(0);
        for (std::size_t i = 0; i < R; ++i) {
            f.lam[i] = w - mu[R - 1 - i];
            f.mu[i] = w - lam[R - 1 - i];
            f.lamp[i] = wp - mup[R - 1 - i];
            f.mup[i] = wp - lamp[R - 1 - i];
        }
        return f;
    }

    void erase_row(std::size_t i) {
        lam.erase(lam.begin() + i);
        mu.erase(mu.begin() + i);
        lamp.erase(lamp.begin() + i);
        mup.erase(mup.begin() + i);
    }
};

Int ceil_div(const Int& num, const Int& den) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace

CanonicalStretchForm canonical_form(const Partition& lam, const Partition& mu,
                                    const Partition& lamp, const Partition& mup) {
    SkewDiagram base(lam, mu);
    static_cast<void>(SkewDiagram(lamp, mup));  // validates the primed containment
    SkewClass cls = classify(base);
    if (cls == SkewClass::Proper)
        throw not_partition_shape("lam/mu = " + base.to_string() +
                                  " is neither a partition nor a rotated partition");

    Family f = Family::of(lam, mu, lamp, mup);
    if (cls == SkewClass::RotatedPartition) f = f.rotated();

    // Rows empty at every n change nothing and would misalign the reduction.
    for (std::size_t i = f.rows(); i-- > 0;)
        if (f.lam[i] == f.mu[i] && f.lamp[i] == f.mup[i]) f.erase_row(i);

    std::size_t R = f.rows();
    auto lam_at = [&](std::size_t i) { return i < R ? f.lam[i] : Int(0); };

    // Separating boundaries: wherever the inner offset outgrows the outer arm
    // below (mu_i > lam_{i+1}, covering empty rows wider than the next row
    // and the common-indent case), the diagram splits for all n past a
    // threshold.
    std::vector<std::size_t> cuts;
    Int n0 = 0;
    for (std::size_t i = 0; i < R; ++i) {
        if (f.mu[i] <= lam_at(i + 1)) continue;
        cuts.push_back(i);
        Int num = (i + 1 < R ? f.lamp[i + 1] : Int(0)) - f.mup[i];
        Int den = f.mu[i] - lam_at(i + 1);
        n0 = std::max(n0, ceil_div(num, den));
    }
    if (n0 < 0) n0 = 0;

    std::vector<Int> big_outer(R), big_inner(R);
    for (std::size_t i = 0; i < R; ++i) {
        big_outer[i] = n0 * f.lam[i] + f.lamp[i];
        big_inner[i] = n0 * f.mu[i] + f.mup[i];
    }

    // Split into blocks at the cuts and restack them tightly: each block is
    // shifted to the left margin of the space left by the blocks below it, in
    // the unprimed and primed pairs independently.  Block interiors are
    // untouched and blocks stay column-disjoint for every n, so the family of
    // counts is preserved.
    std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [first, last]
    {
        std::size_t start = 0;
        for (std::size_t cut : cuts) {
            blocks.emplace_back(start, cut);
            start = cut + 1;
        }
        if (start < R) blocks.emplace_back(start, R - 1);
    }
    std::vector<Int> new_lam(R), new_mu(R), new_outer(R), new_inner(R);
    Int off_u = 0, off_p = 0;
    for (std::size_t b = blocks.size(); b-- > 0;) {
        auto [s, e] = blocks[b];
        Int cu = f.mu[e], cp = big_inner[e];  // minima: partitions decrease
        for (std::size_t i = s; i <= e; ++i) {
            new_lam[i] = f.lam[i] - cu + off_u;
            new_mu[i] = f.mu[i] - cu + off_u;
            new_outer[i] = big_outer[i] - cp + off_p;
            new_inner[i] = big_inner[i] - cp + off_p;
        }
        off_u += f.lam[s] - cu;
        off_p += big_outer[s] - cp;
    }

    CanonicalStretchForm form;
    form.offset_n0 = n0;
    form.lamP = Partition(std::move(new_outer));
    form.muP = Partition(std::move(new_inner));
    Partition red_lam{std::vector<Int>(new_lam)};
    Partition red_mu{std::vector<Int>(new_mu)};

    // Extract (alpha_1^{a1}, alpha_2, ..., alpha_k) / (alpha_1^{a1-1}).
    std::size_t lead = 0;
    while (lead < red_lam.length() && red_lam.at(lead) == red_mu.at(lead)) ++lead;
    form.a1 = lead + 1;
    if (red_mu.length() != lead)
        throw std::logic_error("canonical reduction left a non-canonical inner shape");
    for (std::size_t i = 0; i < lead; ++i)
        if (red_mu.at(i) != red_lam.at(0))
            throw std::logic_error("canonical reduction left ragged leading rows");
    if (red_lam.length() > lead && lead > 0 && red_lam.at(lead) != red_lam.at(0))
        throw std::logic_error("canonical reduction misaligned the first box row");
    for (std::size_t i = lead; i < red_lam.length(); ++i)
        form.alphas.push_back(red_lam.at(i));
    return form;
}

std::vector<mpq_class> bound_m_candidates(const CanonicalStretchForm& f) {
    std::vector<mpq_class> out;
    const Partition& lp = f.lamP;
    const Partition& mp = f.muP;
    auto alpha = [&](std::size_t j) { return j <= f.k() ? f.alphas[j - 1] : Int(0); };
    // mu'_{a1-1}, with mu'_0 read as lam'_1.
    Int mup_top = f.a1 == 1 ? lp.at(0) : mp.at(f.a1 - 2);
    for (std::size_t j = 1; j <= f.k(); ++j) {
        if (alpha(j) <= alpha(j + 1)) continue;
        std::size_t aj = f.a(j);  // 1-based row index
        Int num = lp.at(0) - lp.at(aj - 1) + lp.at(aj) + mp.at(f.a1 - 1) - mup_top;
        mpq_class cand(num, alpha(j) - alpha(j + 1));
        cand.canonicalize();
        out.push_back(cand);
    }
    return out;
}

Int bound_m_canonical(const CanonicalStretchForm& f) {
    auto cands = bound_m_candidates(f);
    if (cands.empty()) return 0;
    mpq_class best = *std::max_element(cands.begin(), cands.end());
    Int m = ceil_div(best.get_num(), best.get_den());
    return m < 0 ? Int(0) : m;
}

Int bound_m_general(const Partition& lam, const Partition& mu, const Partition& lamp,
                    const Partition& mup) {
    CanonicalStretchForm form = canonical_form(lam, mu, lamp, mup);
    return form.offset_n0 + bound_m_canonical(form);
}

StabilizationReport empirical_m(const Partition& lam, const Partition& mu, const Partition& lamp,
                                const Partition& mup, long window, long budget) {
    if (classify(SkewDiagram(lam, mu)) == SkewClass::Proper)
        throw unbounded_sequence("Q grows without bound: lam/mu is a proper skew diagram");
    window = std::max(window, 2L);
    StabilizationReport report;
    report.m_formula = bound_m_general(lam, mu, lamp, mup);
    if (budget < 0) {
        if (!report.m_formula.fits_slong_p()) throw budget_exceeded("formula bound too large");
        budget = report.m_formula.get_si() + window + 2;
    }

    long run = 1;  // length of the current constant tail
    for (long n = 0; n <= budget + window; ++n) {
        Int q = q_value(lam, mu, lamp, mup, n);
        if (n > 0) {
            const Int& prev = report.q_values.back().second;
            if (q == prev)
                ++run;
            else if (q > prev)
                run = 1;
            else
                throw std::logic_error("Q decreased; stabilization theory violated");
        }
        report.q_values.emplace_back(n, q);
        if (run >= window) {
            long m = n - (run - 1);
            report.m_empirical = m;
            report.strictly_increasing_prefix = true;
            for (long t = 1; t < m; ++t)
                if (report.q_values[t].second <= report.q_values[t - 1].second)
                    report.strictly_increasing_prefix = false;
            return report;
        }
    }
    throw budget_exceeded("no Q plateau within n <= " + std::to_string(budget + window));
}

bool is_q_bounded(const Partition& lam, const Partition& mu) {
    return classify(SkewDiagram(lam, mu)) != SkewClass::Proper;
}

Int distinct_constituents(const Partition& lam, const Partition& mu, const Partition& lamp,
                          const Partition& mup, const Int& n) {
    return Int(static_cast<unsigned long>(
        skew_character(stretched_diagram(lam, mu, lamp, mup, n)).distinct()));
}

bool p_stabilizes_hypothesis(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (lr_coefficient(lam, mu, nu) != 1) return false;
    if (classify(SkewDiagram(lam, mu)) != SkewClass::Proper) return true;
    if (classify(SkewDiagram(lam, nu)) != SkewClass::Proper) return true;
    // Rotated complement of mu in the bounding rectangle of lam, over nu.
    std::size_t rows = lam.length();
    std::vector<Int> bar(rows);
    for (std::size_t i = 0; i < rows; ++i) bar[i] = lam.at(0) - mu.at(rows - 1 - i);
    Partition mu_bar{std::move(bar)};
    if (!mu_bar.contains(nu)) return false;
    return classify(SkewDiagram(mu_bar, nu)) != SkewClass::Proper;
}

}  // namespace lr
