#include "lr/properties.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "lr/errors.hpp"
#include "lr/polyfit.hpp"
#include "lr/polynomial.hpp"
#include "lr/stretch.hpp"
#include "lr/tableau.hpp"

namespace lr {

namespace {

struct Gen {
    std::mt19937_64 rng;

    long uniform(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    }

    Partition partition(int max_len, int max_part, bool allow_empty = true) {
        int len = static_cast<int>(uniform(allow_empty ? 0 : 1, max_len));
        std::vector<Int> parts;
        for (int i = 0; i < len; ++i) parts.emplace_back(uniform(allow_empty ? 0 : 1, max_part));
        std::sort(parts.begin(), parts.end(), [](const Int& a, const Int& b) { return a > b; });
        return Partition(std::move(parts));
    }

    SkewDiagram skew(int max_len, int max_part) {
        Partition outer = partition(max_len, max_part);
        std::vector<Int> inner;
        for (std::size_t i = 0; i < outer.length(); ++i) {
            long cap = outer.at(i).get_si();
            long above = i ? inner[i - 1].get_si() : cap;
            inner.emplace_back(uniform(0, std::min(cap, above)));
        }
        // enforce weak decrease (uniform picks already respect it)
        return SkewDiagram(outer, Partition(std::move(inner)));
    }

    // Random triple with c(lam;mu,nu) >= 1: pick a content of a random shape.
    Triple lr_triple(int max_len, int max_part) {
        for (;;) {
            SkewDiagram d = skew(max_len, max_part);
            auto expansion = skew_character(d);
            if (expansion.terms().empty()) continue;
            long pick = uniform(0, expansion.terms().size() - 1);
            auto it = expansion.terms().begin();
            std::advance(it, pick);
            return Triple{d.outer(), d.inner(), it->first};
        }
    }

    // Proper skew diagram (neither partition nor rotated partition).
    SkewDiagram proper(int max_len, int max_part) {
        for (;;) {
            SkewDiagram d = skew(max_len, max_part);
            if (classify(d) == SkewClass::Proper) return d;
        }
    }

    // A partition-shape pair built as: t full-width empty rows, a block of
    // rows indented by c, then b trailing empty rows of width c.
    std::pair<Partition, Partition> partition_shape_pair(int max_len, int max_part) {
        Partition sigma = partition(max_len, max_part, false);
        if (sigma.empty()) sigma = Partition{1};
        long c = uniform(0, 2), t = uniform(0, 2), b = uniform(0, 2);
        std::vector<Int> lam, mu;
        Int width = sigma.at(0) + c;
        for (long i = 0; i < t; ++i) {
            lam.push_back(width);
            mu.push_back(width);
        }
        for (std::size_t i = 0; i < sigma.length(); ++i) {
            lam.push_back(sigma.at(i) + c);
            mu.push_back(c);
        }
        for (long i = 0; i < b && c > 0; ++i) {
            lam.push_back(c);
            mu.push_back(c);
        }
        return {Partition(std::move(lam)), Partition(std::move(mu))};
    }

    // Rotates a pair as a plain diagram (no basic normalization).
    static std::pair<Partition, Partition> rotate_pair(const Partition& lam,
                                                       const Partition& mu) {
        std::size_t rows = std::max(lam.length(), mu.length());
        if (rows == 0) return {lam, mu};
        std::vector<Int> out(rows), in(rows);
        for (std::size_t i = 0; i < rows; ++i) {
            out[i] = lam.at(0) - mu.at(rows - 1 - i);
            in[i] = lam.at(0) - lam.at(rows - 1 - i);
        }
        return {Partition(std::move(out)), Partition(std::move(in))};
    }

    std::pair<Partition, Partition> non_proper_pair(int max_len, int max_part) {
        auto pair = partition_shape_pair(max_len, max_part);
        if (uniform(0, 1)) pair = rotate_pair(pair.first, pair.second);
        return pair;
    }

    // Basic primed pair with the given maximum number of rows.
    std::pair<Partition, Partition> basic_pair(int max_rows, int max_len) {
        int rows = static_cast<int>(uniform(1, max_rows));
        std::vector<long> len(rows);
        for (auto& l : len) l = uniform(1, max_len);
        std::vector<Int> outer(rows), inner(rows);
        for (int i = rows - 1; i >= 0; --i) {
            long next_outer = i + 1 < rows ? outer[i + 1].get_si() : 0;
            long next_inner = i + 1 < rows ? inner[i + 1].get_si() : 0;
            long lo = std::max(next_inner, next_outer - len[i]);
            long hi = next_outer;
            inner[i] = i + 1 < rows ? uniform(lo, hi) : 0;
            outer[i] = inner[i] + len[i];
        }
        return {Partition(std::move(outer)), Partition(std::move(inner))};
    }

    RationalPolynomial int_polynomial(int max_degree, long max_coeff) {
        int deg = static_cast<int>(uniform(0, max_degree));
        std::vector<Rat> coeffs;
        for (int i = 0; i <= deg; ++i) coeffs.emplace_back(uniform(-max_coeff, max_coeff));
        if (coeffs.back() == 0) coeffs.back() = 1;
        return RationalPolynomial(std::move(coeffs));
    }
};

using Check = std::function<std::string(Gen&, int)>;  // empty string = pass

std::string check_core_identities(Gen& g, int cases) {
    for (int it = 0; it < cases; ++it) {
        Partition p = g.partition(6, 20), q = g.partition(6, 20);
        if (conjugate(conjugate(p)) != p) return "conjugate not an involution on " + p.to_string();
        if (conjugate(add(p, q)) != union_of(conjugate(p), conjugate(q)))
            return "(p+q)^c != p^c u q^c for " + p.to_string() + " and " + q.to_string();
        SkewDiagram d = g.skew(5, 5);
        SkewDiagram basic = make_basic(d);
        if (make_basic(basic) != basic) return "make_basic not idempotent on " + d.to_string();
        if (rotate180(rotate180(d)) != basic)
            return "rotate180^2 != make_basic on " + d.to_string();
        if (is_partition_shape(rotate180(d)) != is_rotated_partition(d) &&
            !is_partition_shape(d))
            return "rotation does not swap the classification of " + d.to_string();
        if (classify(d) == SkewClass::Proper && classify(rotate180(d)) != SkewClass::Proper)
            return "rotation changed properness of " + d.to_string();
        auto components = connected_components(d);
        if (components.size() == 1 && components[0] != basic)
            return "single component differs from basic form of " + d.to_string();
        // Translating decayed components relative to one another does not
        // change the fillings: restack the components tightly and recount.
        if (!components.empty()) {
            std::vector<Int> outer, inner;
            Int offset = 0;
            for (std::size_t t = components.size(); t-- > 0;) {
                const SkewDiagram& comp = components[t];
                std::vector<Int> o, in;
                for (std::size_t i = 0; i < comp.row_count(); ++i) {
                    o.push_back(comp.outer().at(i) + offset);
                    in.push_back(comp.inner().at(i) + offset);
                }
                outer.insert(outer.begin(), o.begin(), o.end());
                inner.insert(inner.begin(), in.begin(), in.end());
                offset += comp.outer().at(0);
            }
            SkewDiagram restacked(Partition(std::move(outer)), Partition(std::move(inner)));
            if (count_all(restacked) != count_all(d))
                return "component translation changed the count of " + d.to_string();
        }
    }
    return {};
}

std::string check_sum_embedding(Gen& g, int cases) {
    for (int it = 0; it < cases; ++it) {
        Triple t = g.lr_triple(4, 4), tp = g.lr_triple(4, 4);
        Int base = lr_coefficient(t.lam, t.mu, t.nu);
        Int sum = lr_coefficient(add(t.lam, tp.lam), add(t.mu, tp.mu), add(t.nu, tp.nu));
        if (sum < base) return "sum inequality failed";
        Int uni = lr_coefficient(union_of(t.lam, tp.lam), union_of(t.mu, tp.mu),
                                 union_of(t.nu, tp.nu));
        if (uni < base) return "union inequality failed";
        // Adding one column to shape and contents never drops the count.
        long a = g.uniform(0, 3), b = g.uniform(0, 3);
        std::vector<Int> col_ab(a + b, 1), col_a(a, 1), col_b(b, 1);
        Int strip = lr_coefficient(add(t.lam, Partition(std::move(col_ab))),
                                   add(t.mu, Partition(std::move(col_a))),
                                   add(t.nu, Partition(std::move(col_b))));
        if (strip < base) return "single-column inequality failed";

        // tableau_sum: fixing a tableau of the primed triple embeds the
        // tableaux of the base triple injectively.
        auto primed_tabs = enumerate_all(SkewDiagram(tp.lam, tp.mu), tp.nu);
        if (primed_tabs.empty()) return "missing tableau for a positive coefficient";
        const LRTableau& fixed = primed_tabs.front();
        auto base_tabs = enumerate_all(SkewDiagram(t.lam, t.mu), t.nu);
        if (Int(static_cast<long>(base_tabs.size())) != base)
            return "enumeration disagrees with coefficient";
        std::vector<LRTableau> images;
        for (const auto& c : base_tabs) {
            LRTableau d = tableau_sum(fixed, c);  // validity asserted inside
            if (d.content() != add(t.nu, tp.nu)) return "tableau_sum content wrong";
            images.push_back(std::move(d));
        }
        for (std::size_t i = 0; i < images.size(); ++i)
            for (std::size_t j = i + 1; j < images.size(); ++j)
                if (images[i] == images[j]) return "tableau_sum not injective";
    }
    return {};
}

std::string check_symmetries(Gen& g, int cases) {
    for (int it = 0; it < cases; ++it) {
        Triple t = g.lr_triple(4, 4);
        Int c = lr_coefficient(t.lam, t.mu, t.nu);
        if (lr_coefficient(t.lam, t.nu, t.mu) != c) return "mu <-> nu symmetry failed";
        if (lr_coefficient(conjugate(t.lam), conjugate(t.mu), conjugate(t.nu)) != c)
            return "conjugation symmetry failed";
        SkewDiagram d = g.skew(4, 4);
        auto expansion = skew_character(d);
        if (skew_character(make_basic(d)) != expansion)
            return "expansion not invariant under make_basic on " + d.to_string();
        if (skew_character(rotate180(d)) != expansion)
            return "expansion not invariant under rotation on " + d.to_string();
        if (expansion.total() != count_all(d)) return "expansion total != count_all";
        for (const auto& [nu, mult] : expansion.terms())
            if (nu.sum() != d.box_count()) return "expansion key of wrong size";
    }
    return {};
}

std::string check_semigroup(Gen& g, int cases) {
    for (int it = 0; it < cases; ++it) {
        Triple t = g.lr_triple(4, 4), tp = g.lr_triple(4, 4);
        if (lr_coefficient(add(t.lam, tp.lam), add(t.mu, tp.mu), add(t.nu, tp.nu)) == 0)
            return "semigroup property failed";
        SkewDiagram d = g.skew(4, 4), dp = g.skew(4, 4);
        Int lhs = count_all(SkewDiagram(add(d.outer(), dp.outer()), add(d.inner(), dp.inner())));
        if (lhs < count_all(d)) return "total-count inequality failed";
    }
    return {};
}

std::string check_monotone(Gen& g, int cases) {
    for (int it = 0; it < cases; ++it) {
        SkewDiagram base = g.skew(3, 3), primed = g.skew(3, 3);
        auto q = q_sequence(base.outer(), base.inner(), primed.outer(), primed.inner(), 3);
        for (std::size_t n = 1; n < q.size(); ++n)
            if (q[n] < q[n - 1]) return "Q decreased on " + base.to_string();
        Triple t = g.lr_triple(3, 3), tp = g.lr_triple(3, 3);
        auto p = p_sequence(t.lam, t.mu, t.nu, tp.lam, tp.mu, tp.nu, 3);
        for (std::size_t n = 1; n < p.size(); ++n)
            if (p[n] < p[n - 1]) return "P decreased";
    }
    return {};
}

std::string check_proper_growth(Gen& g, int cases) {
    for (int it = 0; it < cases; ++it) {
        SkewDiagram d = g.proper(4, 4);
        Partition lamp = g.partition(3, 3);
        Partition mup;
        {
            std::vector<Int> in;
            for (std::size_t i = 0; i < lamp.length(); ++i) {
                long cap = lamp.at(i).get_si();
                long above = i ? in[i - 1].get_si() : cap;
                in.emplace_back(g.uniform(0, std::min(cap, above)));
            }
            mup = Partition(std::move(in));
        }
        if (is_q_bounded(d.outer(), d.inner())) return "proper shape reported bounded";
        Int prev = -1;
        for (long n = 0; n <= 6; ++n) {
            Int q = q_value(d.outer(), d.inner(), lamp, mup, n);
            if (q <= prev) return "Q not strictly increasing on proper " + d.to_string();
            prev = q;
            Int distinct = distinct_constituents(d.outer(), d.inner(), lamp, mup, n);
            if (distinct < n + 1) return "too few constituents on proper " + d.to_string();
        }
    }
    return {};
}

std::string check_saturation(Gen& g, int cases) {
    for (int it = 0; it < cases; ++it) {
        Partition lam = g.partition(4, 4), mu = g.partition(4, 4), nu = g.partition(4, 4);
        if (!saturation_check(lam, mu, nu, 4))
            return "saturation violated for " + lam.to_string() + ";" + mu.to_string() + "," +
                   nu.to_string();
    }
    return {};
}

std::string check_count_vs_enumerate(Gen& g, int cases) {
    for (int it = 0; it < cases; ++it) {
        SkewDiagram d = g.skew(4, 4);
        if (d.box_count() > 12) {
            --it;  // only small shapes; resample
            continue;
        }
        long streamed = 0;
        enumerate(d, std::nullopt, [&](const LRTableau& t) {
            if (!t.is_valid()) throw std::logic_error("enumerated invalid tableau");
            ++streamed;
            return true;
        });
        if (count_all(d) != streamed) return "count_all != stream length on " + d.to_string();
        auto expansion = skew_character(d);
        for (const auto& [nu, mult] : expansion.terms()) {
            if (lr_coefficient(d.outer(), d.inner(), nu) != mult)
                return "coefficient != expansion multiplicity on " + d.to_string();
            auto fixed = enumerate_all(d, nu);
            if (Int(static_cast<long>(fixed.size())) != mult)
                return "fixed-content stream length wrong on " + d.to_string();
        }
    }
    return {};
}

std::string check_stabilization(Gen& g, int cases) {
    for (int it = 0; it < cases; ++it) {
        // Canonical instance: the bound is the exact plateau point.
        long a1 = g.uniform(1, 3), k = g.uniform(1, 2);
        std::vector<Int> alphas;
        for (long j = 0; j < k; ++j) alphas.emplace_back(g.uniform(1, 3));
        std::sort(alphas.begin(), alphas.end(), [](const Int& a, const Int& b) { return a > b; });
        std::vector<Int> lam(a1 - 1, alphas[0]), mu(a1 - 1, alphas[0]);
        lam.push_back(alphas[0]);
        for (long j = 1; j < k; ++j) lam.push_back(alphas[j]);
        auto [lamp, mup] = g.basic_pair(static_cast<int>(a1 + k), 3);
        Partition L{std::move(lam)}, M{std::move(mu)};
        StabilizationReport rep = empirical_m(L, M, lamp, mup, 3);
        if (rep.m_empirical != rep.m_formula)
            return "canonical bound not tight for " + L.to_string() + "/" + M.to_string() + " , " +
                   lamp.to_string() + "/" + mup.to_string();
        if (!rep.strictly_increasing_prefix)
            return "Q not strictly increasing below the plateau (canonical)";

        // General non-proper instance: the bound is valid, maybe not tight.
        auto [gl, gm] = g.non_proper_pair(3, 3);
        SkewDiagram primed = g.skew(3, 3);
        StabilizationReport grep = empirical_m(gl, gm, primed.outer(), primed.inner(), 3);
        if (grep.m_empirical > grep.m_formula)
            return "formula bound below the plateau for " + gl.to_string() + "/" + gm.to_string();
        if (!grep.strictly_increasing_prefix)
            return "Q not strictly increasing below the plateau (general)";
        Int qm = q_value(gl, gm, primed.outer(), primed.inner(), grep.m_formula);
        if (q_value(gl, gm, primed.outer(), primed.inner(), grep.m_formula + 1) != qm ||
            q_value(gl, gm, primed.outer(), primed.inner(), grep.m_formula + 2) != qm)
            return "Q not constant at the formula bound";

        // The canonical reduction preserves the whole family of counts.
        CanonicalStretchForm form = canonical_form(gl, gm, primed.outer(), primed.inner());
        std::vector<Int> red_lam(form.a1 - 1, form.alphas.empty() ? Int(0) : form.alphas[0]),
            red_mu(red_lam);
        for (const Int& al : form.alphas) red_lam.push_back(al);
        Partition RL{std::move(red_lam)}, RM{std::move(red_mu)};
        for (long shift = 0; shift <= 2; ++shift)
            if (q_value(RL, RM, form.lamP, form.muP, shift) !=
                q_value(gl, gm, primed.outer(), primed.inner(), form.offset_n0 + Int(shift)))
                return "canonical reduction changed the counts of " + gl.to_string() + "/" +
                       gm.to_string();
    }
    return {};
}

std::string check_fit(Gen& g, int cases) {
    for (int it = 0; it < cases; ++it) {
        RationalPolynomial p = g.int_polynomial(6, 100);
        std::vector<std::pair<Int, Int>> points;
        long n0 = g.uniform(0, 3);
        for (long n = n0; n < n0 + p.degree() + 4; ++n) {
            Rat v = p(Rat(Int(n)));
            points.emplace_back(n, v.get_num());
        }
        RationalPolynomial back = fit(points, 2);
        if (back != p) return "fit did not recover " + p.to_string();
        GeneratingFunction gf = generating_function(p);
        auto series = gf.expand(2 * p.degree() + 2);
        for (long n = 0; n < static_cast<long>(series.size()); ++n)
            if (Rat(series[n]) != p(Rat(Int(n)))) return "generating function round-trip failed";
        if (gf.denom_power != p.degree() + 1) return "wrong denominator power";
    }
    return {};
}

std::string check_constant_iff_multiplicity_one(Gen& g, int cases) {
    for (int it = 0; it < cases; ++it) {
        Triple t = g.lr_triple(3, 3);
        Int c = lr_coefficient(t.lam, t.mu, t.nu);
        RationalPolynomial f = stretched_poly(t.lam, t.mu, t.nu, 5);
        if (c == 1 && (f.degree() != 0 || f(Rat(0)) != 1))
            return "stretched polynomial of a multiplicity-one triple is not constant 1";
        // Converse on this window: f(0) = 1 < c = f(1) already forces growth.
        if (c > 1 && f.degree() < 1)
            return "stretched polynomial constant despite multiplicity > 1";
    }
    return {};
}

}  // namespace

PropertyResult run_property_suites(const PropertyOptions& options) {
    std::vector<std::pair<std::string, Check>> suites = {
        {"core-identities", check_core_identities},
        {"sum-embedding", check_sum_embedding},
        {"lr-symmetries", check_symmetries},
        {"semigroup-and-totals", check_semigroup},
        {"sequence-monotonicity", check_monotone},
        {"proper-growth", check_proper_growth},
        {"saturation", check_saturation},
        {"count-vs-enumerate", check_count_vs_enumerate},
        {"stabilization-bounds", check_stabilization},
        {"polynomial-fit", check_fit},
        {"constant-iff-unit", check_constant_iff_multiplicity_one},
    };
    PropertyResult result;
    for (std::size_t idx = 0; idx < suites.size(); ++idx) {
        Gen gen{std::mt19937_64(options.seed + idx)};
        std::string failure;
        try {
            failure = suites[idx].second(gen, options.cases);
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        result.suites_run.push_back(suites[idx].first);
        if (!failure.empty())
            result.failures.push_back(suites[idx].first + ": " + failure);
        if (options.log)
            *options.log << (failure.empty() ? "ok   " : "FAIL ") << suites[idx].first
                         << (failure.empty() ? "" : "  (" + failure + ")") << "\n";
    }
    return result;
}

}  // namespace lr
