#include "lr/tableau.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "lr/errors.hpp"

namespace lr {

LRTableau::LRTableau(SkewDiagram shape, std::vector<std::vector<long>> row_mult)
    : shape_(std::move(shape)), row_mult_(std::move(row_mult)) {
    row_mult_.resize(shape_.row_count());
    for (auto& row : row_mult_)
        while (!row.empty() && row.back() == 0) row.pop_back();
}

long LRTableau::mult(std::size_t row, std::size_t entry) const {
    if (row >= row_mult_.size() || entry == 0 || entry > row_mult_[row].size()) return 0;
    return row_mult_[row][entry - 1];
}

Partition LRTableau::content() const {
    std::size_t alpha = 0;
    for (const auto& row : row_mult_) alpha = std::max(alpha, row.size());
    std::vector<Int> totals(alpha, 0);
    for (const auto& row : row_mult_)
        for (std::size_t e = 0; e < row.size(); ++e) totals[e] += row[e];
    return Partition(std::move(totals));
}

bool LRTableau::is_valid() const {
    std::size_t rows = shape_.row_count();
    std::size_t alpha = 0;
    for (const auto& row : row_mult_) alpha = std::max(alpha, row.size());
    for (std::size_t i = 0; i < rows; ++i) {
        Int row_sum = 0;
        if (i < row_mult_.size())
            for (long m : row_mult_[i]) {
                if (m < 0) return false;
                row_sum += m;
            }
        if (row_sum != shape_.row_length(i)) return false;
    }
    // Column strictness, with inner boxes counted as entries 0: entries <= k
    // in row i may not outnumber entries < k in row i-1.
    for (std::size_t i = 1; i < rows; ++i) {
        Int below = shape_.inner().at(i);
        Int above = shape_.inner().at(i - 1);
        for (std::size_t k = 1; k <= alpha; ++k) {
            below += mult(i, k);
            if (below > above) return false;
            above += mult(i - 1, k);
        }
    }
    // Lattice: e's through row i may not outnumber (e-1)'s through row i-1.
    std::vector<long> seen(alpha + 1, 0);  // seen[x] = count of entry x+1
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t e = alpha; e >= 2; --e) {
            if (seen[e - 1] + mult(i, e) > seen[e - 2]) return false;
            seen[e - 1] += mult(i, e);
        }
        seen[0] += mult(i, 1);
    }
    return true;
}

CharacterExpansion::CharacterExpansion(Terms terms) : terms_(std::move(terms)) {
    for (const auto& [nu, m] : terms_)
        if (m <= 0) throw std::logic_error("non-positive multiplicity in expansion");
}

Int CharacterExpansion::total() const {
    Int t = 0;
    for (const auto& [nu, m] : terms_) t += m;
    return t;
}

Int CharacterExpansion::multiplicity(const Partition& nu) const {
    auto it = terms_.find(nu);
    return it == terms_.end() ? Int(0) : it->second;
}

namespace {

// Shape data for the row engine.  Only row lengths and the steps between
// consecutive inner offsets matter; both must fit machine integers (a row
// that does not cannot be processed anyway).
struct CompactShape {
    std::size_t rows = 0;
    std::vector<long> len;
    std::vector<long> delta;  // delta[i] = inner[i-1] - inner[i], delta[0] = 0
    long boxes = 0;
};

long to_long(const Int& v, const char* what) {
    if (!v.fits_slong_p()) throw std::length_error(std::string(what) + " too large");
    return v.get_si();
}

CompactShape compact(const SkewDiagram& d) {
    CompactShape s;
    s.rows = d.row_count();
    s.len.resize(s.rows);
    s.delta.assign(s.rows, 0);
    s.boxes = to_long(d.box_count(), "box count");
    for (std::size_t i = 0; i < s.rows; ++i) {
        s.len[i] = to_long(d.row_length(i), "row length");
        if (i) {
            Int step = d.inner().at(i - 1) - d.inner().at(i);
            Int cap = Int(s.boxes) + 1;
            // Beyond any row length the exact step no longer matters.
            s.delta[i] = to_long(step > cap ? cap : step, "inner step");
        }
    }
    return s;
}

// Per-row state shared by the counting DP and the enumerator.
//
//   B[k]   bound on the prefix sum r[1]+..+r[k] of the current row's content
//          (column strictness against the previous row, clamped to the row
//          length)
//   st[e]  cumulative content below the current row (counting mode), or the
//          content still owed (fixed-content mode)
//
// The lattice condition bounds r[e] by st-differences, so both conditions are
// prefix-monotone and candidates can be cut off early.
struct RowContext {
    const CompactShape& s;
    std::size_t A;
    bool fixed;
    std::vector<long> target;  // fixed mode only; target[e-1] = nu_e
    std::vector<long> suffix;  // suffix[i] = boxes in rows >= i

    RowContext(const CompactShape& shape, std::size_t alphabet, bool fixed_mode,
               std::vector<long> nu)
        : s(shape), A(alphabet), fixed(fixed_mode), target(std::move(nu)) {
        suffix.assign(s.rows + 1, 0);
        for (std::size_t i = s.rows; i-- > 0;) suffix[i] = suffix[i + 1] + s.len[i];
    }

    // Upper bounds for each entry value in row i given st; false when the row
    // cannot be filled at all.
    bool entry_bounds(std::size_t i, const std::vector<long>& st,
                      std::vector<long>& ub, std::vector<long>& tail) const {
        long L = s.len[i];
        for (std::size_t e = 1; e <= A; ++e) {
            long avail;
            if (e == 1)
                avail = L;
            else if (fixed)
                avail = (target[e - 2] - st[e - 2]) - (target[e - 1] - st[e - 1]);
            else
                avail = st[e - 2] - st[e - 1];
            if (fixed) avail = std::min(avail, st[e - 1]);
            ub[e] = std::min(avail, L);
        }
        tail[A + 1] = 0;
        for (std::size_t e = A; e >= 1; --e) tail[e] = tail[e + 1] + ub[e];
        return tail[1] >= L;
    }

    // Applies row r to st, giving the state entering row i+1; false when the
    // successor state is dead.
    bool advance(std::size_t i, const std::vector<long>& r,
                 const std::vector<long>& ps, const std::vector<long>& st,
                 std::vector<long>& newB, std::vector<long>& newst) const {
        if (i + 1 < s.rows) {
            long nextL = s.len[i + 1];
            for (std::size_t k = 1; k <= A; ++k)
                newB[k] = std::clamp(s.delta[i + 1] + ps[k - 1], 0L, nextL);
            if (newB[A] < nextL) return false;
        }
        for (std::size_t e = 0; e < A; ++e) {
            newst[e] = fixed ? st[e] - r[e + 1] : st[e] + r[e + 1];
            if (fixed) {
                // Entry e+1 cannot appear above row e+1 (1-based).
                std::size_t first = std::max(i + 1, e);
                if (newst[e] > (first <= s.rows ? suffix[first] : 0)) return false;
            }
        }
        return true;
    }
};

using Layer = std::unordered_map<std::string, Int>;

// Memoized counting pass: states entering each row are merged by (B, st) and
// their counts added, so equal sub-searches are evaluated once.
void run_dp(const CompactShape& s, std::size_t A, bool fixed, std::vector<long> nu,
            const std::function<void(const std::vector<long>&, const Int&)>& on_final) {
    RowContext ctx(s, A, fixed, std::move(nu));
    long maxval = std::max<long>(s.boxes, 1);
    int width = maxval < 256 ? 1 : maxval < 65536 ? 2 : maxval < (1L << 32) ? 4 : 8;

    auto put = [&](std::string& key, std::size_t slot, long v) {
        unsigned char* p = reinterpret_cast<unsigned char*>(key.data()) + slot * width;
        for (int b = 0; b < width; ++b) {
            p[b] = static_cast<unsigned char>(v & 0xff);
            v >>= 8;
        }
    };
    auto get = [&](const std::string& key, std::size_t slot) {
        const unsigned char* p = reinterpret_cast<const unsigned char*>(key.data()) + slot * width;
        long v = 0;
        for (int b = width; b-- > 0;) v = (v << 8) | p[b];
        return v;
    };

    if (s.rows == 0) {
        on_final(std::vector<long>(A, 0), 1);
        return;
    }
    Layer cur;
    {
        // First row: no column constraint from above.
        std::string key(2 * A * width, '\0');
        for (std::size_t k = 1; k <= A; ++k) put(key, k - 1, s.len[0]);
        for (std::size_t e = 0; e < A; ++e) put(key, A + e, fixed ? ctx.target[e] : 0);
        cur.emplace(std::move(key), 1);
    }

    std::vector<long> B(A + 1), st(A), r(A + 1), ps(A + 1), ub(A + 1), tail(A + 2),
        newB(A + 1), newst(A);
    for (std::size_t i = 0; i < s.rows; ++i) {
        Layer nxt;
        bool last = i + 1 == s.rows;
        long L = s.len[i];
        for (const auto& [key, cnt] : cur) {
            for (std::size_t k = 1; k <= A; ++k) B[k] = get(key, k - 1);
            for (std::size_t e = 0; e < A; ++e) st[e] = get(key, A + e);
            if (!ctx.entry_bounds(i, st, ub, tail)) continue;

            ps[0] = 0;
            auto rec = [&](auto&& self, std::size_t e, long got) -> void {
                if (e > A) {
                    if (last) {
                        for (std::size_t t = 0; t < A; ++t)
                            newst[t] = fixed ? ctx.target[t] - (st[t] - r[t + 1])
                                             : st[t] + r[t + 1];
                        on_final(newst, cnt);
                        return;
                    }
                    if (!ctx.advance(i, r, ps, st, newB, newst)) return;
                    std::string key2(2 * A * width, '\0');
                    for (std::size_t k = 1; k <= A; ++k) put(key2, k - 1, newB[k]);
                    for (std::size_t t = 0; t < A; ++t) put(key2, A + t, newst[t]);
                    nxt[std::move(key2)] += cnt;
                    return;
                }
                long lo = std::max(0L, L - got - tail[e + 1]);
                long hi = std::min(ub[e], B[e] - got);
                for (long v = lo; v <= hi; ++v) {
                    r[e] = v;
                    ps[e] = got + v;
                    self(self, e + 1, got + v);
                }
            };
            rec(rec, 1, 0);
        }
        cur = std::move(nxt);
    }
}

}  // namespace

Int lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (!lam.contains(mu)) return 0;
    if (lam.sum() != mu.sum() + nu.sum()) return 0;
    SkewDiagram shape(lam, mu);
    if (nu.length() > shape.row_count()) return 0;
    CompactShape cs = compact(shape);
    std::vector<long> target(nu.length());
    for (std::size_t e = 0; e < nu.length(); ++e) target[e] = to_long(nu.at(e), "content part");
    Int total = 0;
    run_dp(cs, nu.length(), true, std::move(target),
           [&](const std::vector<long>&, const Int& cnt) { total += cnt; });
    return total;
}

Int count_all(const SkewDiagram& shape) {
    CompactShape cs = compact(shape);
    Int total = 0;
    run_dp(cs, cs.rows, false, {},
           [&](const std::vector<long>&, const Int& cnt) { total += cnt; });
    return total;
}

CharacterExpansion skew_character(const SkewDiagram& shape) {
    CompactShape cs = compact(shape);
    CharacterExpansion::Terms terms;
    run_dp(cs, cs.rows, false, {},
           [&](const std::vector<long>& content, const Int& cnt) {
               std::vector<Int> parts(content.begin(), content.end());
               terms[Partition(std::move(parts))] += cnt;
           });
    return CharacterExpansion(std::move(terms));
}

void enumerate(const SkewDiagram& shape, const std::optional<Partition>& content,
               const std::function<bool(const LRTableau&)>& visit) {
    CompactShape cs = compact(shape);
    bool fixed = content.has_value();
    std::size_t A = fixed ? content->length() : cs.rows;
    std::vector<long> target;
    if (fixed) {
        if (content->sum() != shape.box_count()) return;
        if (content->length() > cs.rows) return;
        for (std::size_t e = 0; e < A; ++e) target.push_back(to_long(content->at(e), "content part"));
    }
    RowContext ctx(cs, A, fixed, std::move(target));

    std::vector<std::vector<long>> rows(cs.rows, std::vector<long>(A, 0));
    bool keep_going = true;

    // DFS over rows; candidate row contents are generated in ascending
    // lexicographic order, so the stream order is row-major lexicographic.
    auto go = [&](auto&& self, std::size_t i, const std::vector<long>& B,
                  const std::vector<long>& st) -> void {
        if (!keep_going) return;
        if (i == cs.rows) {
            keep_going = visit(LRTableau(shape, rows));
            return;
        }
        long L = cs.len[i];
        std::vector<long> ub(A + 1), tail(A + 2);
        if (!ctx.entry_bounds(i, st, ub, tail)) return;
        std::vector<long> r(A + 1, 0), ps(A + 1, 0), newB(A + 1, 0), newst(A, 0);
        auto pick = [&](auto&& inner_self, std::size_t e, long got) -> void {
            if (!keep_going) return;
            if (e > A) {
                if (ctx.advance(i, r, ps, st, newB, newst)) {
                    for (std::size_t t = 0; t < A; ++t) rows[i][t] = r[t + 1];
                    self(self, i + 1, newB, newst);
                }
                return;
            }
            long lo = std::max(0L, L - got - tail[e + 1]);
            long hi = std::min(ub[e], B[e] - got);
            for (long v = lo; v <= hi && keep_going; ++v) {
                r[e] = v;
                ps[e] = got + v;
                inner_self(inner_self, e + 1, got + v);
            }
        };
        pick(pick, 1, 0);
    };

    std::vector<long> B0(A + 1, cs.rows ? cs.len[0] : 0);
    std::vector<long> st0(A, 0);
    if (fixed) st0 = ctx.target;
    go(go, 0, B0, st0);
}

std::vector<LRTableau> enumerate_all(const SkewDiagram& shape,
                                     const std::optional<Partition>& content) {
    std::vector<LRTableau> out;
    enumerate(shape, content, [&](const LRTableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

LRTableau tableau_sum(const LRTableau& a, const LRTableau& c) {
    SkewDiagram shape(add(a.shape().outer(), c.shape().outer()),
                      add(a.shape().inner(), c.shape().inner()));
    std::size_t rows = shape.row_count();
    std::size_t alpha = 0;
    for (const auto& row : a.rows()) alpha = std::max(alpha, row.size());
    for (const auto& row : c.rows()) alpha = std::max(alpha, row.size());
    std::vector<std::vector<long>> mult(rows, std::vector<long>(alpha, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t e = 1; e <= alpha; ++e) mult[i][e - 1] = a.mult(i, e) + c.mult(i, e);
    LRTableau result(std::move(shape), std::move(mult));
    if (!result.is_valid()) throw std::logic_error("tableau_sum produced an invalid tableau");
    if (result.content() != add(a.content(), c.content()))
        throw std::logic_error("tableau_sum content mismatch");
    return result;
}

}  // namespace lr
