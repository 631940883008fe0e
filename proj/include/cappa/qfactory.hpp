#pragma once

// Builders for the closed-form side of every identity: q-Pochhammer products
// and their inverses, the Jacobi triple product, the infinite products and
// multi-sums on the right-hand sides, the quadruple sums of the constant-term
// derivation, and the supporting q-series lemma suite.

#include <optional>
#include <string>
#include <vector>

#include "cappa/series.hpp"

namespace cappa {

// (c; q^step)_length with c = sign * q^m.q a^m.a b^m.b d^m.d z^m.z, i.e. the
// product of binomials (1 - c q^{step*k}).  sign is +1 or -1; length nullopt
// means infinite (only factors whose q-exponent fits the bound materialize).
struct PochSpec {
    Monomial prefactor;
    int sign = 1;
    int step = 1;
    std::optional<int> length;  // nullopt: infinite
};

inline TruncatedSeries poch(const PochSpec& sp, const Bounds& b) {
    TruncatedSeries r = TruncatedSeries::one(b);
    for (int k = 0; !sp.length || k < *sp.length; ++k) {
        long long qe = sp.prefactor.q + (long long)sp.step * k;
        if (!sp.length && qe > b.q_bound) break;  // factor is 1 within bounds
        TruncatedSeries f(b);
        f.add_term(Monomial{}, 1);
        f.add_term(Monomial{(int)qe, sp.prefactor.a, sp.prefactor.b, sp.prefactor.d,
                            sp.prefactor.z},
                   -sp.sign);
        r = r * f;
    }
    return r;
}

// (1 - c)^{-1} = sum_m c^m, truncated; every power of c must eventually leave
// the bounds or the prefactor is a unit and the series is not invertible.
inline TruncatedSeries inv_binomial(const Monomial& c, int sign, const Bounds& b) {
    TruncatedSeries r(b);
    constexpr int cap = 100000;
    for (int m = 0;; ++m) {
        Monomial p{c.q * m, c.a * m, c.b * m, c.d * m, c.z * m};
        if (!r.keeps(p)) break;
        Int coeff = (sign > 0 || m % 2 == 0) ? Int(1) : Int(-1);
        r.add_term(p, coeff);
        if (m > cap)
            throw SeriesError("inv_poch: non-unit constant term (geometric series does not truncate)");
    }
    return r;
}

inline TruncatedSeries inv_poch(const PochSpec& sp, const Bounds& b) {
    TruncatedSeries r = TruncatedSeries::one(b);
    for (int k = 0; !sp.length || k < *sp.length; ++k) {
        long long qe = sp.prefactor.q + (long long)sp.step * k;
        if (!sp.length && qe > b.q_bound) break;
        Monomial c{(int)qe, sp.prefactor.a, sp.prefactor.b, sp.prefactor.d,
                   sp.prefactor.z};
        r = r * inv_binomial(c, sp.sign, b);
    }
    return r;
}

// Common specs.
inline PochSpec spec_minus_q() { return {Monomial{1, 0, 0, 0, 0}, -1, 1, std::nullopt}; }
inline PochSpec spec_q() { return {Monomial{1, 0, 0, 0, 0}, +1, 1, std::nullopt}; }
inline PochSpec spec_qq_n(int n) { return {Monomial{1, 0, 0, 0, 0}, +1, 1, n}; }
inline PochSpec spec_q2q2_n(int n) { return {Monomial{2, 0, 0, 0, 0}, +1, 2, n}; }

// d^m (-q/d)_m = prod_{k=1}^{m} (d + q^k); the only d-form the builders need.
inline TruncatedSeries d_staircase_poly(int m, const Bounds& b) {
    TruncatedSeries r = TruncatedSeries::one(b);
    for (int k = 1; k <= m; ++k) {
        TruncatedSeries f(b);
        f.add_term(Monomial{0, 0, 0, 1, 0}, 1);
        f.add_term(Monomial{k, 0, 0, 0, 0}, 1);
        r = r * f;
    }
    return r;
}

// sum_{n in Z} z^{-n} q^{T(n)}; bounds must be Laurent.
inline TruncatedSeries jtp(const Bounds& b) {
    if (!b.z_window) throw BoundsError("jtp requires Laurent bounds");
    TruncatedSeries s(b);
    for (int n = 0; tri(n) <= b.q_bound; ++n)
        s.add_term(Monomial{(int)tri(n), 0, 0, 0, -n}, 1);
    for (int m = 1;; ++m) {  // n = -m contributes z^{+m} q^{T(m-1)}
        Monomial key{(int)tri(m - 1), 0, 0, 0, m};
        if (!s.keeps(key)) break;
        s.add_term(key, 1);
    }
    return s;
}

enum class ProductId { aag, thm18, thm19, thm110 };

inline TruncatedSeries product_rhs(ProductId id, int N) {
    Bounds b = Bounds::q(N);
    switch (id) {
        case ProductId::aag:
            // (-q)_inf (-aq^2;q^2)_inf (-bq^2;q^2)_inf
            return poch(spec_minus_q(), b) *
                   poch({Monomial{2, 1, 0, 0, 0}, -1, 2, std::nullopt}, b) *
                   poch({Monomial{2, 0, 1, 0, 0}, -1, 2, std::nullopt}, b);
        case ProductId::thm18:
            // (-q)_inf (-aq)_inf (-bq)_inf / ((q)_inf (abq;q^2)_inf)
            return poch(spec_minus_q(), b) *
                   poch({Monomial{1, 1, 0, 0, 0}, -1, 1, std::nullopt}, b) *
                   poch({Monomial{1, 0, 1, 0, 0}, -1, 1, std::nullopt}, b) *
                   inv_poch(spec_q(), b) *
                   inv_poch({Monomial{1, 1, 1, 0, 0}, +1, 2, std::nullopt}, b);
        case ProductId::thm19:
            return poch(spec_minus_q(), b) *
                   poch({Monomial{1, 1, 0, 0, 0}, -1, 1, std::nullopt}, b) *
                   poch({Monomial{2, 0, 1, 0, 0}, -1, 2, std::nullopt}, b);
        case ProductId::thm110:
            return poch(spec_minus_q(), b) *
                   poch({Monomial{1, 1, 0, 0, 0}, -1, 1, std::nullopt}, b) *
                   poch({Monomial{1, 0, 1, 0, 0}, -1, 1, std::nullopt}, b) *
                   inv_poch({Monomial{1, 1, 1, 0, 0}, +1, 2, std::nullopt}, b);
    }
    throw SeriesError("unknown product id");
}

enum class SumId { thm15, thm16, thm17, eq51, eq52 };

// The double sum of thm15/thm17/eq52:
//   sum_{r,s} q^{r^2+r+s^2+s-T(r+s)} a^r b^s d^{r+s} (-q/d)_{r+s}
//             / ((q^2;q^2)_r (q^2;q^2)_s).
// Cutoff: the minimal q-exponent of the (r,s) summand is
//   e(r,s) = r^2+r+s^2+s-T(r+s) = ((r-s)^2 + r + s)/2,
// which is minimized at s = r with value r, so the r loop runs while r <= N
// and the s loop skips until past the diagonal and stops once e > N there.
inline TruncatedSeries double_sum_core(const Bounds& b) {
    TruncatedSeries acc(b);
    const int N = b.q_bound;
    for (int r = 0; r <= N; ++r) {
        for (int s = 0;; ++s) {
            long long e = (long long)r * r + r + (long long)s * s + s - tri(r + s);
            if (e > N) {
                if (s > r) break;
                continue;
            }
            TruncatedSeries term =
                TruncatedSeries::monomial(b, Monomial{(int)e, r, s, 0, 0});
            term = term * d_staircase_poly(r + s, b);
            term = term * inv_poch(spec_q2q2_n(r), b) * inv_poch(spec_q2q2_n(s), b);
            acc = acc + term;
        }
    }
    return acc;
}

// The single sum of thm16/eq51: sum_r q^{T(r)} (ad)^r (-q/d)_r / (q^2;q^2)_r.
// Cutoff: minimal exponent is T(r).
inline TruncatedSeries single_sum_core(const Bounds& b) {
    TruncatedSeries acc(b);
    for (int r = 0; tri(r) <= b.q_bound; ++r) {
        TruncatedSeries term =
            TruncatedSeries::monomial(b, Monomial{(int)tri(r), r, 0, 0, 0});
        term = term * d_staircase_poly(r, b);
        term = term * inv_poch(spec_q2q2_n(r), b);
        acc = acc + term;
    }
    return acc;
}

inline TruncatedSeries sum_rhs(SumId id, int N, int K) {
    Bounds b = Bounds::qd(N, K);
    switch (id) {
        case SumId::eq52:
            return double_sum_core(b);
        case SumId::thm15:
            return poch(spec_minus_q(), b) *
                   inv_poch({Monomial{1, 0, 0, 1, 0}, +1, 1, std::nullopt}, b) *
                   double_sum_core(b);
        case SumId::thm17:
            return poch(spec_minus_q(), b) * double_sum_core(b);
        case SumId::eq51:
            return single_sum_core(b);
        case SumId::thm16:
            return poch(spec_minus_q(), b) *
                   poch({Monomial{2, 0, 1, 0, 0}, -1, 2, std::nullopt}, b) *
                   single_sum_core(b);
    }
    throw SeriesError("unknown sum id");
}

enum class QuadId { contributions, c1, c2, c3 };

// Quadruple sums over r, s, t, v with denominators (q)_r (q)_s (q)_t (q^2;q^2)_v
// and a^{r+v} b^{s+v}; m = r+s+t+2v.  The staircase factor per id:
//   contributions: q^{T(m)}
//   c1:            q^t d^m (-q/d)_m (1 + q^{r+s+2v+1})
//   c2:            q^{T(m)-T(r+v)}      d^{r+v}      (-q/d)_{r+v}
//   c3:            q^{T(m)-T(r+s+2v)}   d^{r+s+2v}   (-q/d)_{r+s+2v}
// Cutoffs: every id's minimal exponent includes T(r)+T(s)+v and is strictly
// increasing in t (by q^t for c1, by the forced-staircase tail m+1 otherwise),
// so each loop terminates once the minimal exponent exceeds the bound.
inline TruncatedSeries quad_sum(QuadId id, int N, std::optional<int> K = std::nullopt) {
    Bounds b{N, K, std::nullopt};
    TruncatedSeries acc(b);
    auto dcost = [&](int m) {  // min q-cost of d^m(-q/d)_m under the d bound
        if (!K || m <= *K) return 0LL;
        return tri(m - *K);
    };
    for (int r = 0; tri(r) <= N; ++r) {
        for (int s = 0; tri(r) + tri(s) <= N; ++s) {
            for (int v = 0; tri(r) + tri(s) + v <= N; ++v) {
                for (int t = 0;; ++t) {
                    const int m = r + s + t + 2 * v;
                    const long long base = tri(r) + tri(s) + v;
                    long long e;
                    switch (id) {
                        case QuadId::contributions: e = base + tri(m); break;
                        case QuadId::c1: e = base + t + dcost(m); break;
                        case QuadId::c2:
                            e = base + tri(m) - tri(r + v) + dcost(r + v);
                            break;
                        case QuadId::c3:
                            e = base + tri(m) - tri(r + s + 2 * v) + dcost(r + s + 2 * v);
                            break;
                    }
                    if (e > N) break;
                    TruncatedSeries term = TruncatedSeries::monomial(
                        b, Monomial{(int)base, r + v, s + v, 0, 0});
                    switch (id) {
                        case QuadId::contributions:
                            term = term.shifted(Monomial{(int)tri(m), 0, 0, 0, 0});
                            break;
                        case QuadId::c1: {
                            TruncatedSeries two(b);
                            two.add_term(Monomial{}, 1);
                            two.add_term(Monomial{r + s + 2 * v + 1, 0, 0, 0, 0}, 1);
                            term = term.shifted(Monomial{t, 0, 0, 0, 0}) *
                                   d_staircase_poly(m, b) * two;
                            break;
                        }
                        case QuadId::c2:
                            term = term.shifted(
                                       Monomial{(int)(tri(m) - tri(r + v)), 0, 0, 0, 0}) *
                                   d_staircase_poly(r + v, b);
                            break;
                        case QuadId::c3:
                            term = term.shifted(Monomial{
                                       (int)(tri(m) - tri(r + s + 2 * v)), 0, 0, 0, 0}) *
                                   d_staircase_poly(r + s + 2 * v, b);
                            break;
                    }
                    term = term * inv_poch(spec_qq_n(r), b) * inv_poch(spec_qq_n(s), b) *
                           inv_poch(spec_qq_n(t), b) *
                           inv_poch({Monomial{2, 0, 0, 0, 0}, +1, 2, v}, b);
                    acc = acc + term;
                }
            }
        }
    }
    return acc;
}

// The z-nonnegative factor of the constant-term identity:
//   F(z) = (-azq)_inf (-bzq)_inf / ((z)_inf (abz^2 q; q^2)_inf).
inline TruncatedSeries ct_z_factor(const Bounds& b) {
    return poch({Monomial{1, 1, 0, 0, 1}, -1, 1, std::nullopt}, b) *
           poch({Monomial{1, 0, 1, 0, 1}, -1, 1, std::nullopt}, b) *
           inv_poch({Monomial{0, 0, 0, 0, 1}, +1, 1, std::nullopt}, b) *
           inv_poch({Monomial{1, 1, 1, 0, 2}, +1, 2, std::nullopt}, b);
}

enum class CtRoute { taylor, laurent };

// [z^0] (-q/z)_inf (-z)_inf (q)_inf * F(z).  The default route reads the JTP
// factor as its sum form and picks [z^n] F at q-cost T(n); the Laurent route
// multiplies everything out under the z^0 prune as an independent check.
inline TruncatedSeries constant_term_lhs(int N, CtRoute route = CtRoute::taylor) {
    Bounds lb = Bounds::laurent_z0(N);
    TruncatedSeries F = ct_z_factor(lb);
    if (route == CtRoute::taylor) {
        TruncatedSeries out(Bounds::q(N));
        for (const auto& [m, c] : F.terms()) {
            if (m.z < 0) continue;
            long long n2 = m.q + tri(m.z);
            if (n2 <= N) out.add_term(Monomial{(int)n2, m.a, m.b, m.d, 0}, c);
        }
        return out;
    }
    return (jtp(lb) * F).z0();
}

// ------------------------------ lemma suite ------------------------------

struct LemmaResult {
    std::string id;
    bool pass = true;
    std::string detail;
};

struct LemmaSuiteReport {
    std::vector<LemmaResult> results;
    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

namespace detail {

// prod_{j=0}^{k-1} (q^{n-j} - 1), the cleared form of (q^{-n})_k:
// (q^{-n})_k * q^{nk - binom(k,2)} = prod (q^{n-j} - 1).
inline TruncatedSeries cleared_qninv(int n, int k, const Bounds& b) {
    TruncatedSeries r = TruncatedSeries::one(b);
    for (int j = 0; j < k; ++j) {
        TruncatedSeries f(b);
        f.add_term(Monomial{n - j, 0, 0, 0, 0}, 1);
        f.add_term(Monomial{}, -1);
        r = r * f;
    }
    return r;
}

}  // namespace detail

struct LemmaBounds {
    int qnk_max_n = 12;   // (q)_{n-k} identity range
    int chu_max_n = 8;    // q-Chu grid
    int qbin_q_bound = 30;
    int jtp_q_bound = 40;
};

inline LemmaSuiteReport lemma_suite(const LemmaBounds& lb = {}) {
    LemmaSuiteReport rep;

    // (q)_{n-k} = (q)_n / (q^{-n})_k * (-1)^k q^{binom(k,2)-nk}, cleared to the
    // polynomial identity prod_{j<k}(q^{n-j}-1) * (q)_{n-k} = (-1)^k (q)_n.
    {
        LemmaResult r{"qnk", true, ""};
        const int N = tri(lb.qnk_max_n) + 1;
        Bounds b = Bounds::q((int)N);
        for (int n = 0; n <= lb.qnk_max_n && r.pass; ++n) {
            for (int k = 0; k <= n && r.pass; ++k) {
                TruncatedSeries lhs =
                    detail::cleared_qninv(n, k, b) * poch(spec_qq_n(n - k), b);
                TruncatedSeries rhs = poch(spec_qq_n(n), b);
                if (k % 2 == 1) rhs = rhs.shifted(Monomial{}, -1);
                auto cmp = equal_up_to(lhs, rhs, b.q_bound);
                if (!cmp.equal) {
                    r.pass = false;
                    r.detail = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
            }
        }
        rep.results.push_back(r);
    }

    // q-Chu: sum_k (a)_k (q^{-n})_k q^k / ((q)_k (c)_k) = (c/a)_n a^n / (c)_n
    // on the monomial grid a = sigma q^alpha, c = q^gamma.  Both sides are
    // multiplied by q^{n^2} and the (q^{-n})_k factor replaced by its cleared
    // form, so that everything lives in the polynomial ring:
    //   LHS' = sum_k (a)_k prod_{j<k}(q^{n-j}-1) q^{n^2-nk+binom(k,2)+k}
    //          / ((q)_k (c)_k)
    //   RHS' = q^{n^2} prod_{j<n} (a - c q^j) / (c)_n.
    {
        LemmaResult r{"qchu", true, ""};
        for (int n = 0; n <= lb.chu_max_n && r.pass; ++n) {
            Bounds b = Bounds::q(n * n + 20);
            for (int sigma : {+1, -1}) {
                for (int alpha = 1; alpha <= 4 && r.pass; ++alpha) {
                    for (int gamma = 1; gamma <= 4 && r.pass; ++gamma) {
                        TruncatedSeries lhs(b);
                        for (int k = 0; k <= n; ++k) {
                            long long e = (long long)n * n - (long long)n * k +
                                          tri(k - 1) + k;
                            TruncatedSeries term = TruncatedSeries::monomial(
                                b, Monomial{(int)e, 0, 0, 0, 0});
                            term = term *
                                   poch({Monomial{alpha, 0, 0, 0, 0}, sigma, 1, k}, b);
                            term = term * detail::cleared_qninv(n, k, b);
                            term = term * inv_poch(spec_qq_n(k), b) *
                                   inv_poch({Monomial{gamma, 0, 0, 0, 0}, +1, 1, k}, b);
                            lhs = lhs + term;
                        }
                        TruncatedSeries rhs = TruncatedSeries::monomial(
                            b, Monomial{n * n, 0, 0, 0, 0});
                        for (int j = 0; j < n; ++j) {
                            TruncatedSeries f(b);
                            f.add_term(Monomial{alpha, 0, 0, 0, 0}, sigma);
                            f.add_term(Monomial{gamma + j, 0, 0, 0, 0}, -1);
                            rhs = rhs * f;
                        }
                        rhs = rhs * inv_poch({Monomial{gamma, 0, 0, 0, 0}, +1, 1, n}, b);
                        auto cmp = equal_up_to(lhs, rhs, b.q_bound);
                        if (!cmp.equal) {
                            r.pass = false;
                            r.detail = "n=" + std::to_string(n) +
                                       " sigma=" + std::to_string(sigma) +
                                       " alpha=" + std::to_string(alpha) +
                                       " gamma=" + std::to_string(gamma);
                        }
                    }
                }
            }
        }
        rep.results.push_back(r);
    }

    // qbin2: sum_m z^m (-x)_m / (q)_m = (-xz)_inf / (z)_inf
    // with z = d q^{b1}, x = q^{b2} for b1, b2 in 1..3.
    {
        LemmaResult r{"qbin2", true, ""};
        const int N = lb.qbin_q_bound, K = 10;
        Bounds b = Bounds::qd(N, K);
        for (int b1 = 1; b1 <= 3 && r.pass; ++b1) {
            for (int b2 = 1; b2 <= 3 && r.pass; ++b2) {
                TruncatedSeries lhs(b);
                for (int m = 0; m * b1 <= N && m <= K; ++m) {
                    TruncatedSeries term = TruncatedSeries::monomial(
                        b, Monomial{m * b1, 0, 0, m, 0});
                    term = term * poch({Monomial{b2, 0, 0, 0, 0}, -1, 1, m}, b);
                    term = term * inv_poch(spec_qq_n(m), b);
                    lhs = lhs + term;
                }
                TruncatedSeries rhs =
                    poch({Monomial{b1 + b2, 0, 0, 1, 0}, -1, 1, std::nullopt}, b) *
                    inv_poch({Monomial{b1, 0, 0, 1, 0}, +1, 1, std::nullopt}, b);
                auto cmp = equal_up_to(lhs, rhs, N, K);
                if (!cmp.equal) {
                    r.pass = false;
                    r.detail = "b1=" + std::to_string(b1) + " b2=" + std::to_string(b2);
                }
            }
        }
        rep.results.push_back(r);
    }

    // qbin1: sum_m z^m q^{T(m)} / (q)_m = (-zq)_inf with z = d q^beta.
    {
        LemmaResult r{"qbin1", true, ""};
        const int N = lb.qbin_q_bound, K = 10;
        Bounds b = Bounds::qd(N, K);
        for (int beta = 1; beta <= 3 && r.pass; ++beta) {
            TruncatedSeries lhs(b);
            for (int m = 0; (long long)m * beta + tri(m) <= N; ++m) {
                TruncatedSeries term = TruncatedSeries::monomial(
                    b, Monomial{(int)(m * beta + tri(m)), 0, 0, m, 0});
                term = term * inv_poch(spec_qq_n(m), b);
                lhs = lhs + term;
            }
            TruncatedSeries rhs =
                poch({Monomial{beta + 1, 0, 0, 1, 0}, -1, 1, std::nullopt}, b);
            auto cmp = equal_up_to(lhs, rhs, N, K);
            if (!cmp.equal) {
                r.pass = false;
                r.detail = "beta=" + std::to_string(beta);
            }
        }
        rep.results.push_back(r);
    }

    // JTP: sum form vs product form, exact Laurent mode (every cell checked).
    {
        LemmaResult r{"jtp", true, ""};
        Bounds b = Bounds::laurent_exact(lb.jtp_q_bound);
        TruncatedSeries sum = jtp(b);
        TruncatedSeries prod =
            poch({Monomial{1, 0, 0, 0, -1}, -1, 1, std::nullopt}, b) *
            poch({Monomial{0, 0, 0, 0, 1}, -1, 1, std::nullopt}, b) *
            poch(spec_q(), b);
        auto cmp = equal_up_to(sum, prod, lb.jtp_q_bound);
        if (!cmp.equal) {
            r.pass = false;
            r.detail = "first difference at " + to_string(cmp.at);
        }
        rep.results.push_back(r);
    }

    return rep;
}

}  // namespace cappa
