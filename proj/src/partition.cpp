#include "lr/partition.hpp"

#include <algorithm>
#include <sstream>

#include "lr/errors.hpp"

namespace lr {

namespace {
const Int kZero = 0;

void strip_zeros(std::vector<Int>& parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}
}  // namespace

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    strip_zeros(parts_);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw parse_error("partition part is negative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw parse_error("partition parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<long> parts) {
    std::vector<Int> v;
    v.reserve(parts.size());
    for (long x : parts) v.emplace_back(x);
    *this = Partition(std::move(v));
}

const Int& Partition::at(std::size_t i) const {
    return i < parts_.size() ? parts_[i] : kZero;
}

Int Partition::sum() const {
    Int s = 0;
    for (const Int& x : parts_) s += x;
    return s;
}

bool Partition::contains(const Partition& q) const {
    if (q.length() > length()) return false;
    for (std::size_t i = 0; i < q.length(); ++i)
        if (parts_[i] < q.parts_[i]) return false;
    return true;
}

std::strong_ordering Partition::operator<=>(const Partition& rhs) const {
    std::size_t n = std::min(parts_.size(), rhs.parts_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = cmp(parts_[i], rhs.parts_[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return parts_.size() <=> rhs.parts_.size();
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    return out.str();
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    // result[j] = #{i : p[i] >= j+1}; p[0] bounds the result length.
    if (!p.parts()[0].fits_ulong_p())
        throw std::length_error("conjugate: leading part too large to materialize");
    std::size_t cols = p.parts()[0].get_ui();
    std::vector<Int> out(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        std::size_t count = 0;
        for (const Int& x : p.parts())
            if (x >= static_cast<long>(j + 1)) ++count;
        out[j] = static_cast<long>(count);
    }
    return Partition(std::move(out));
}

Partition add(const Partition& p, const Partition& q) {
    std::size_t n = std::max(p.length(), q.length());
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = p.at(i) + q.at(i);
    return Partition(std::move(out));
}

Partition union_of(const Partition& p, const Partition& q) {
    std::vector<Int> out;
    out.reserve(p.length() + q.length());
    out.insert(out.end(), p.parts().begin(), p.parts().end());
    out.insert(out.end(), q.parts().begin(), q.parts().end());
    std::sort(out.begin(), out.end(), [](const Int& a, const Int& b) { return a > b; });
    return Partition(std::move(out));
}

Partition scale(const Int& n, const Partition& p) {
    if (n < 0) throw parse_error("scale factor must be non-negative");
    std::vector<Int> out;
    out.reserve(p.length());
    for (const Int& x : p.parts()) out.push_back(x * n);
    return Partition(std::move(out));
}

std::optional<Partition> subtract(const Partition& p, const Partition& q) {
    std::size_t n = std::max(p.length(), q.length());
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = p.at(i) - q.at(i);
        if (out[i] < 0) return std::nullopt;
        if (i > 0 && out[i] > out[i - 1]) return std::nullopt;
    }
    return Partition(std::move(out));
}

Partition parse_partition(const std::string& text) {
    std::vector<Int> parts;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) throw parse_error("empty entry in partition '" + text + "'");
        auto caret = tok.find('^');
        std::string base = tok.substr(0, caret);
        for (char c : base)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw parse_error("bad partition entry '" + tok + "'");
        Int value(base);
        long reps = 1;
        if (caret != std::string::npos) {
            std::string exp = tok.substr(caret + 1);
            if (exp.empty()) throw parse_error("bad exponent in '" + tok + "'");
            for (char c : exp)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw parse_error("bad exponent in '" + tok + "'");
            reps = std::stol(exp);
        }
        for (long r = 0; r < reps; ++r) parts.push_back(value);
        tok.clear();
    };
    std::string stripped;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
    if (stripped.empty() || stripped == "0") return {};
    for (char c : stripped) {
        if (c == ',')
            flush();
        else
            tok += c;
    }
    flush();
    return Partition(std::move(parts));
}

}  // namespace lr
