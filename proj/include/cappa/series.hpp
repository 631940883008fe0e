#pragma once

// Exact truncated formal power series in q whose coefficients are integer
// polynomials in a, b, d, with an optional bounded Laurent variable z.
// Truncation is tracked inside the value: every series carries its own
// bounds and silently drops anything beyond them on insertion, so two
// series may only be combined when their bounds are compatible.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace cappa {

using Int = boost::multiprecision::cpp_int;

// T(m) = m(m+1)/2, the weight of the staircase (m, m-1, ..., 1).
constexpr long long tri(long long m) { return m * (m + 1) / 2; }

struct SeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BoundsError : SeriesError {
    using SeriesError::SeriesError;
};

// Exponent vector of q^q a^a b^b d^d z^z.  Comparison order (q, a, b, d, z)
// is the canonical monomial order used everywhere (term maps, first-difference
// reports, serialization).
struct Monomial {
    int q = 0;
    int a = 0;
    int b = 0;
    int d = 0;
    int z = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

inline std::string to_string(const Monomial& m) {
    std::ostringstream os;
    os << "q^" << m.q;
    if (m.a) os << " a^" << m.a;
    if (m.b) os << " b^" << m.b;
    if (m.d) os << " d^" << m.d;
    if (m.z) os << " z^" << m.z;
    return os.str();
}

// Laurent window.  `z0_prune` enables the constant-term prune: a term with
// surplus z^m (m > 0) can only return to z^0 through (-q/z)_inf at q-cost
// >= T(m), so anything with q + T(max(z,0)) > q_bound is dead weight for a
// z^0 extraction.  Negative z-powers always carry q-cost >= T(-z) by
// construction and are cancellable at zero cost, so they are never pruned
// beyond the plain q_bound.  Products computed under the prune are exact
// only in their z^0 part; windowed unpruned mode is exact everywhere.
struct ZWindow {
    int lo = 0;
    int hi = 0;
    bool z0_prune = true;

    friend bool operator==(const ZWindow&, const ZWindow&) = default;
};

struct Bounds {
    int q_bound = 0;
    std::optional<int> d_bound;      // nullopt: unbounded in d
    std::optional<ZWindow> z_window; // nullopt: standard (z-free) series

    static Bounds q(int n) { return Bounds{n, std::nullopt, std::nullopt}; }
    static Bounds qd(int n, int k) { return Bounds{n, k, std::nullopt}; }

    // Window for z^0 extraction: |z| <= M with T(M) <= q_bound, prune on.
    static Bounds laurent_z0(int n) {
        int m = 0;
        while (tri(m + 1) <= n) ++m;
        return Bounds{n, std::nullopt, ZWindow{-m, m, true}};
    }

    // Window wide enough that plain q-truncation subsumes the clamp:
    // z^{+m} costs at least T(m-1) (the cheapest source is (-z)_inf) and
    // z^{-m} costs at least T(m).  Exact on every cell with q <= q_bound.
    static Bounds laurent_exact(int n) {
        int hi = 1;
        while (tri(hi) <= n) ++hi;      // largest m with T(m-1) <= n
        int lo = 0;
        while (tri(lo + 1) <= n) ++lo;  // largest m with T(m) <= n
        return Bounds{n, std::nullopt, ZWindow{-lo, hi, false}};
    }

    friend bool operator==(const Bounds&, const Bounds&) = default;
};

inline Bounds combine(const Bounds& x, const Bounds& y) {
    Bounds r;
    r.q_bound = std::min(x.q_bound, y.q_bound);
    if (x.d_bound && y.d_bound)
        r.d_bound = std::min(*x.d_bound, *y.d_bound);
    else
        r.d_bound = x.d_bound ? x.d_bound : y.d_bound;
    if (x.z_window && y.z_window) {
        if (!(*x.z_window == *y.z_window))
            throw BoundsError("incompatible Laurent windows");
        r.z_window = x.z_window;
    } else {
        r.z_window = x.z_window ? x.z_window : y.z_window;
    }
    return r;
}

// Polynomial in a, b, d: the full coefficient of one q-power.
struct AbdPoly {
    std::map<std::array<int, 3>, Int> terms; // key (i, j, k)

    void add(int i, int j, int k, const Int& c) {
        if (c == 0) return;
        auto key = std::array<int, 3>{i, j, k};
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    friend bool operator==(const AbdPoly&, const AbdPoly&) = default;

    std::string str() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [key, c] : terms) {
            if (!first) os << " + ";
            first = false;
            os << c.str();
            if (key[0]) os << "*a^" << key[0];
            if (key[1]) os << "*b^" << key[1];
            if (key[2]) os << "*d^" << key[2];
        }
        return os.str();
    }
};

// Result of an exact comparison of two series up to shared bounds.
struct Comparison {
    bool equal = true;
    Monomial at;  // lexicographically smallest differing monomial
    Int lhs;
    Int rhs;
};

struct DilationError : SeriesError {
    Monomial offending;
    explicit DilationError(const Monomial& m, const std::string& what)
        : SeriesError(what + " at " + to_string(m)), offending(m) {}
};

// Integer-linear exponent remap q^n -> q^{cq*n + ca*i + cb*j + cd*k}.
struct DilationRule {
    int cq = 1, ca = 0, cb = 0, cd = 0;
    long long apply(const Monomial& m) const {
        return (long long)cq * m.q + (long long)ca * m.a + (long long)cb * m.b +
               (long long)cd * m.d;
    }
};

class TruncatedSeries {
  public:
    explicit TruncatedSeries(Bounds b) : bounds_(b) {}

    static TruncatedSeries zero(Bounds b) { return TruncatedSeries(b); }

    static TruncatedSeries one(Bounds b) {
        TruncatedSeries s(b);
        s.add_term(Monomial{}, 1);
        return s;
    }

    static TruncatedSeries monomial(Bounds b, const Monomial& m, Int c = 1) {
        TruncatedSeries s(b);
        s.add_term(m, std::move(c));
        return s;
    }

    const Bounds& bounds() const { return bounds_; }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // Truncation predicate; the exponents of a, b, d are invariantly >= 0.
    bool keeps(const Monomial& m) const {
        if (m.q < 0 || m.q > bounds_.q_bound) return false;
        if (m.a < 0 || m.b < 0 || m.d < 0)
            throw SeriesError("negative a/b/d exponent: " + to_string(m));
        if (bounds_.d_bound && m.d > *bounds_.d_bound) return false;
        if (bounds_.z_window) {
            const ZWindow& w = *bounds_.z_window;
            if (m.z < w.lo || m.z > w.hi) return false;
            if (w.z0_prune && m.q + tri(std::max(m.z, 0)) > bounds_.q_bound)
                return false;
        } else if (m.z != 0) {
            throw SeriesError("z power in standard series: " + to_string(m));
        }
        return true;
    }

    void add_term(const Monomial& m, Int c) {
        if (c == 0 || !keeps(m)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y) {
        TruncatedSeries r(combine(x.bounds_, y.bounds_));
        for (const auto& [m, c] : x.terms_) r.add_term(m, c);
        for (const auto& [m, c] : y.terms_) r.add_term(m, c);
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
        TruncatedSeries r(combine(x.bounds_, y.bounds_));
        const TruncatedSeries& big = x.size() >= y.size() ? x : y;
        const TruncatedSeries& small = x.size() >= y.size() ? y : x;
        for (const auto& [m2, c2] : small.terms_) {
            for (const auto& [m1, c1] : big.terms_) {
                Monomial m{m1.q + m2.q, m1.a + m2.a, m1.b + m2.b, m1.d + m2.d,
                           m1.z + m2.z};
                if (r.keeps(m)) r.add_term(m, c1 * c2);
            }
        }
        return r;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& y) { return *this = *this + y; }
    TruncatedSeries& operator*=(const TruncatedSeries& y) { return *this = *this * y; }

    // Multiply by a single monomial term c * m.
    TruncatedSeries shifted(const Monomial& m, const Int& c = 1) const {
        TruncatedSeries r(bounds_);
        for (const auto& [m1, c1] : terms_) {
            Monomial k{m1.q + m.q, m1.a + m.a, m1.b + m.b, m1.d + m.d, m1.z + m.z};
            r.add_term(k, c1 * c);
        }
        return r;
    }

    // Full a,b,d-polynomial multiplying q^n (z-exponent 0 in Laurent mode).
    AbdPoly coefficient(int n) const {
        if (n > bounds_.q_bound)
            throw BoundsError("coefficient index beyond q_bound");
        AbdPoly p;
        for (const auto& [m, c] : terms_)
            if (m.q == n && m.z == 0) p.add(m.a, m.b, m.d, c);
        return p;
    }

    // z^0 slice as a standard series.
    TruncatedSeries z0() const {
        TruncatedSeries r(Bounds{bounds_.q_bound, bounds_.d_bound, std::nullopt});
        for (const auto& [m, c] : terms_)
            if (m.z == 0) r.add_term(Monomial{m.q, m.a, m.b, m.d, 0}, c);
        return r;
    }

    // d -> 0 (drop k>0) or d -> 1 (collapse k).  The d=1 collapse is only
    // meaningful when the series is d-complete; callers are responsible for
    // having enumerated/built with a sufficient d range.
    TruncatedSeries specialize_d(int value) const {
        if (value != 0 && value != 1)
            throw SeriesError("specialize_d supports d=0 and d=1 only");
        TruncatedSeries r(Bounds{bounds_.q_bound, std::nullopt, bounds_.z_window});
        for (const auto& [m, c] : terms_) {
            if (value == 0 && m.d != 0) continue;
            r.add_term(Monomial{m.q, m.a, m.b, 0, m.z}, c);
        }
        return r;
    }

    // Exponent remap.  Fails loudly if any stored term maps to a negative
    // q-power (the dilation does not produce a bona fide partition series)
    // or maps below its source power (which would invalidate keeping the
    // input q_bound as the completeness horizon: every family this is used
    // on dilates each part to a value >= the original, so n' >= n termwise).
    TruncatedSeries dilate(const DilationRule& rule) const {
        if (bounds_.z_window) throw SeriesError("dilate: Laurent mode unsupported");
        TruncatedSeries r(Bounds{bounds_.q_bound, bounds_.d_bound, std::nullopt});
        for (const auto& [m, c] : terms_) {
            long long n2 = rule.apply(m);
            if (n2 < 0) throw DilationError(m, "negative exponent under dilation");
            if (n2 < m.q) throw DilationError(m, "dilation decreases q-weight");
            if (n2 <= bounds_.q_bound)
                r.add_term(Monomial{(int)n2, m.a, m.b, m.d, m.z}, c);
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries& x, const TruncatedSeries& y) {
        return x.bounds_ == y.bounds_ && x.terms_ == y.terms_;
    }

  private:
    Bounds bounds_;
    std::map<Monomial, Int> terms_;
};

// Exact comparison of all terms with q <= n and d <= k (everything if k is
// nullopt).  Requires both series to be valid at least that far.
inline Comparison equal_up_to(const TruncatedSeries& x, const TruncatedSeries& y,
                              int n, std::optional<int> k = std::nullopt) {
    auto covered = [&](const Bounds& b) {
        if (b.q_bound < n) return false;
        if (b.d_bound && (!k || *b.d_bound < *k)) return false;
        return true;
    };
    if (!covered(x.bounds()) || !covered(y.bounds()))
        throw BoundsError("equal_up_to: insufficient bounds");
    auto in_range = [&](const Monomial& m) {
        return m.q <= n && (!k || m.d <= *k);
    };
    auto ix = x.terms().begin(), ex = x.terms().end();
    auto iy = y.terms().begin(), ey = y.terms().end();
    while (ix != ex || iy != ey) {
        while (ix != ex && !in_range(ix->first)) ++ix;
        while (iy != ey && !in_range(iy->first)) ++iy;
        if (ix == ex && iy == ey) break;
        if (iy == ey || (ix != ex && ix->first < iy->first)) {
            return Comparison{false, ix->first, ix->second, 0};
        }
        if (ix == ex || iy->first < ix->first) {
            return Comparison{false, iy->first, 0, iy->second};
        }
        if (ix->second != iy->second) {
            return Comparison{false, ix->first, ix->second, iy->second};
        }
        ++ix;
        ++iy;
    }
    return Comparison{};
}

}  // namespace cappa
