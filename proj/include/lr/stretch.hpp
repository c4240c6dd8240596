#pragma once

#include <vector>

#include "lr/tableau.hpp"

namespace lr {

// The affine family A(n) = (n*lam + lamp) / (n*mu + mup) and its canonical
// reduction.  After reduction lam = (alpha_1^{a1}, alpha_2, ..., alpha_k) and
// mu = (alpha_1^{a1-1}), with the reduced primed pair aligned row by row.
struct CanonicalStretchForm {
    std::size_t a1 = 1;            // index (1-based) of the first non-empty row
    std::vector<Int> alphas;       // alpha_1 >= ... >= alpha_k > 0
    Partition lamP, muP;           // reduced primed pair
    Int offset_n0 = 0;             // stretch amount absorbed during reduction

    std::size_t k() const { return alphas.size(); }
    // a_j = a1 - 1 + j (1-based j).
    std::size_t a(std::size_t j) const { return a1 - 1 + j; }
};

struct StabilizationReport {
    Int m_formula = 0;
    Int m_empirical = 0;
    std::vector<std::pair<Int, Int>> q_values;  // (n, Q(n))
    bool strictly_increasing_prefix = false;
};

SkewDiagram stretched_diagram(const Partition& lam, const Partition& mu, const Partition& lamp,
                              const Partition& mup, const Int& n);

Int q_value(const Partition& lam, const Partition& mu, const Partition& lamp,
            const Partition& mup, const Int& n);
std::vector<Int> q_sequence(const Partition& lam, const Partition& mu, const Partition& lamp,
                            const Partition& mup, long n_max, unsigned threads = 1);

Int p_value(const Partition& lam, const Partition& mu, const Partition& nu,
            const Partition& lamp, const Partition& mup, const Partition& nup, const Int& n);
std::vector<Int> p_sequence(const Partition& lam, const Partition& mu, const Partition& nu,
                            const Partition& lamp, const Partition& mup, const Partition& nup,
                            long n_max, unsigned threads = 1);

// Reduces the family to canonical position: rotates if lam/mu is a rotated
// partition, absorbs enough stretch that the diagram decays at every
// separating row, and reassembles the blocks tightly.  Throws
// not_partition_shape when lam/mu is proper.
CanonicalStretchForm canonical_form(const Partition& lam, const Partition& mu,
                                    const Partition& lamp, const Partition& mup);

// The closed-form stabilization bound for a canonical family, and the value
// of each candidate term (one per j with alpha_j > alpha_{j+1}).
Int bound_m_canonical(const CanonicalStretchForm& f);
std::vector<mpq_class> bound_m_candidates(const CanonicalStretchForm& f);

// offset_n0 + bound_m_canonical of the canonical form.
Int bound_m_general(const Partition& lam, const Partition& mu, const Partition& lamp,
                    const Partition& mup);

// Observes the plateau of Q directly: computes Q(0), Q(1), ... until `window`
// consecutive equal values appear.  Throws unbounded_sequence for proper
// lam/mu and budget_exceeded when no plateau shows up within the budget
// (default bound_m_general + window + 2).
StabilizationReport empirical_m(const Partition& lam, const Partition& mu, const Partition& lamp,
                                const Partition& mup, long window = 3, long budget = -1);

bool is_q_bounded(const Partition& lam, const Partition& mu);

// Number of distinct contents nu with c(n*lam+lamp; n*mu+mup, nu) != 0.
Int distinct_constituents(const Partition& lam, const Partition& mu, const Partition& lamp,
                          const Partition& mup, const Int& n);

// True when c(lam;mu,nu) = 1 and one of lam/mu, lam/nu or the rotated
// complement of mu in the bounding rectangle over nu is not proper; then
// P(n) provably reaches a plateau.
bool p_stabilizes_hypothesis(const Partition& lam, const Partition& mu, const Partition& nu);

}  // namespace lr
