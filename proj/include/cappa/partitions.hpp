#pragma once

// Colored jagged overpartitions: the data model, the difference matrices,
// validity checking for every counted family, exhaustive enumerators, and
// the residue-class counters for the product sides.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cappa/series.hpp"

namespace cappa {

enum class Color : std::uint8_t { a = 0, b = 1, u = 2 };

inline char color_letter(Color c) { return c == Color::a ? 'a' : c == Color::b ? 'b' : 'u'; }

struct ColoredPart {
    int value = 0;
    Color color = Color::u;
    bool overlined = false;

    friend auto operator<=>(const ColoredPart&, const ColoredPart&) = default;
};

// Parts are written left to right, largest level first; successive
// differences may be negative (jagged).
using Jagged = std::vector<ColoredPart>;

inline int weight(const Jagged& seq) {
    int w = 0;
    for (const auto& p : seq) w += p.value;
    return w;
}

struct Stats {
    int k = 0;  // non-overlined parts
    int i = 0;  // a-like parts
    int j = 0;  // b-like parts
    friend auto operator<=>(const Stats&, const Stats&) = default;
};

// ----------------------------- difference matrices -----------------------------

// Row/column class order follows the paper: a-bar, b-bar, u-bar, a, b, u.
inline int class_index(Color c, bool overlined) {
    return (overlined ? 0 : 3) + static_cast<int>(c);
}

struct DifferenceMatrix {
    std::array<std::array<int, 6>, 6> gaps{};
};

// Matrix C-bar (jagged overpartitions, all families except the companions).
inline const DifferenceMatrix& cbar_matrix() {
    static const DifferenceMatrix m{{{
        //            a-bar b-bar u-bar  a    b    u
        /* a-bar */ {{2, 0, 2, 2, 0, 2}},
        /* b-bar */ {{2, 2, 3, 2, 2, 3}},
        /* u-bar */ {{1, 0, 1, 1, 0, 1}},
        /* a     */ {{1, -1, 1, 1, -1, 1}},
        /* b     */ {{1, 1, 2, 1, 1, 2}},
        /* u     */ {{0, -1, 0, 0, -1, 0}},
    }}};
    return m;
}

// Matrix C (overline-free: the colored partitions of the base identity).
// Identical to the overlined-by-overlined block of C-bar.
inline const DifferenceMatrix& c_matrix() {
    static const DifferenceMatrix m = [] {
        DifferenceMatrix r{};
        for (int x = 0; x < 6; ++x)
            for (int y = 0; y < 6; ++y) r.gaps[x][y] = cbar_matrix().gaps[x % 3][y % 3];
        return r;
    }();
    return m;
}

// Matrix C* (companion: u-parts moved to the front of each level).
inline const DifferenceMatrix& cstar_matrix() {
    static const DifferenceMatrix m = [] {
        constexpr int base[3][3] = {{2, 0, 3}, {2, 2, 3}, {0, 0, 1}};
        DifferenceMatrix r{};
        for (int x = 0; x < 6; ++x)
            for (int y = 0; y < 6; ++y) r.gaps[x][y] = base[x % 3][y % 3];
        return r;
    }();
    return m;
}

inline int min_gap(const DifferenceMatrix& m, const ColoredPart& left,
                   const ColoredPart& right) {
    return m.gaps[class_index(left.color, left.overlined)]
                 [class_index(right.color, right.overlined)];
}

// ----------------------------- family specs -----------------------------

enum class FamilyId {
    cbar,        // base jagged overpartition family, no extra condition
    aag,         // C(n;i,j): the k = 0 slice of cbar (all parts overlined)
    c1,          // smallest-u detection condition
    c2,          // final #b+#u parts overlined
    c3,          // final #u parts overlined
    c4,          // no u-parts, parity alternation with phantom zero
    cstar_w,     // overline-free companion under C*, with the (u,a,b) triple rule
    a_family,    // distinct parts, parity-change statistic
    cor1,        // mod-3 dilation of c2
    cor2,        // mod-4 dilation of c1 (d = 1)
    cor3,        // mod-4 dilation of c3 (d = 1)
    capparelli,  // mod-3 dilation of aag, prose form
    cstar,       // mod-3 dilation of cstar_w, prose form
};

enum class PairRule { cbar, cstar, cor1, cor23, capparelli, cstar_dilated, distinct };
enum class ExtraRule { none, all_overlined, c1, c2, c3, c4, cstar_triple, cor1_tail,
                       cor2_detect, cor3_tail };
enum class StatsRule { weighted, weighted_k0, mod3, mod3_k0, mod4, parity_changes };

struct FamilySpec {
    FamilyId id;
    std::string name;
    bool colored = true;          // colored weighted words vs plain integer parts
    bool overlines = true;        // may parts be overlined at all
    bool requires_k_budget = false;  // weighted-word families need k_max
    PairRule pair_rule = PairRule::cbar;
    ExtraRule extra = ExtraRule::none;
    StatsRule stats_rule = StatsRule::weighted;
    // part domain
    int min_value = 0;
    std::function<bool(const ColoredPart&)> domain;  // nullptr: no extra restriction
    std::vector<ColoredPart> final_exclusions;
};

inline bool pair_ok(PairRule rule, const ColoredPart& l, const ColoredPart& r) {
    const int d = l.value - r.value;
    switch (rule) {
        case PairRule::cbar:
            return d >= min_gap(cbar_matrix(), l, r);
        case PairRule::cstar:
            return d >= min_gap(cstar_matrix(), l, r);
        case PairRule::cor1:
            return d >= ((l.value + r.value) % 3 == 0 ? -1 : 1) + (l.overlined ? 3 : 0);
        case PairRule::cor23:
            return d >= ((l.value % 4 == 0 || (l.value + r.value) % 4 == 3) ? -2 : 4) +
                            (l.overlined ? 4 : 0);
        case PairRule::capparelli:
            return d >= ((l.value + r.value) % 3 == 0 ? 2 : 4);
        case PairRule::cstar_dilated:
            return d >= ((l.value % 3 == 0 || (l.value + r.value) % 3 == 0) ? 2 : 5);
        case PairRule::distinct:
            return d >= 1;
    }
    return false;
}

namespace detail {

// "If the smallest u-part x_u equals the number of overlined parts at or
// after it, the final part must be overlined."  Ties on the minimal value
// resolve to the last occurrence (the reading under which the family equals
// the image of the two staircase cases).  `unit` is 1 in the weighted world
// and 4 after the mod-4 dilation where the condition reads "equal to 4 times
// the number of overlined parts".
template <typename IsU>
bool smallest_u_detection(const Jagged& seq, IsU is_u, int unit) {
    int pos = -1;
    for (int p = 0; p < (int)seq.size(); ++p) {
        if (is_u(seq[p]) && (pos < 0 || seq[p].value <= seq[pos].value)) pos = p;
    }
    if (pos < 0) return true;
    int cnt = 0;
    for (int p = pos; p < (int)seq.size(); ++p)
        if (seq[p].overlined) ++cnt;
    if (seq[pos].value == unit * cnt) return seq.back().overlined;
    return true;
}

inline bool final_parts_overlined(const Jagged& seq, int t) {
    for (int p = (int)seq.size() - t; p < (int)seq.size(); ++p)
        if (!seq[p].overlined) return false;
    return true;
}

}  // namespace detail

inline bool extra_ok(ExtraRule rule, const Jagged& seq) {
    switch (rule) {
        case ExtraRule::none:
            return true;
        case ExtraRule::all_overlined:
            return std::all_of(seq.begin(), seq.end(),
                               [](const ColoredPart& p) { return p.overlined; });
        case ExtraRule::c1:
            return detail::smallest_u_detection(
                seq, [](const ColoredPart& p) { return p.color == Color::u; }, 1);
        case ExtraRule::c2: {
            int ell = 0;
            for (const auto& p : seq)
                if (p.color != Color::a) ++ell;
            return detail::final_parts_overlined(seq, ell);
        }
        case ExtraRule::c3: {
            int t = 0;
            for (const auto& p : seq)
                if (p.color == Color::u) ++t;
            return detail::final_parts_overlined(seq, t);
        }
        case ExtraRule::c4: {
            // no u-parts; parity alternates (with a phantom 0 at the end)
            // exactly at the pairs whose left part is non-overlined
            for (const auto& p : seq)
                if (p.color == Color::u) return false;
            for (std::size_t x = 0; x < seq.size(); ++x) {
                int next = x + 1 < seq.size() ? seq[x + 1].value : 0;
                bool differs = ((seq[x].value - next) % 2 + 2) % 2 == 1;
                if (differs != !seq[x].overlined) return false;
            }
            return true;
        }
        case ExtraRule::cstar_triple:
            // no triple of parts with colors (u, a, b) at the minimal
            // differences (0, 0), i.e. three equal values colored u, a, b
            for (std::size_t x = 0; x + 2 < seq.size(); ++x) {
                if (seq[x].color == Color::u && seq[x + 1].color == Color::a &&
                    seq[x + 2].color == Color::b &&
                    seq[x].value == seq[x + 1].value &&
                    seq[x + 1].value == seq[x + 2].value)
                    return false;
            }
            return true;
        case ExtraRule::cor1_tail: {
            int t = 0;
            for (const auto& p : seq)
                if (p.value % 3 == 0 || p.value % 3 == 2) ++t;
            return detail::final_parts_overlined(seq, t);
        }
        case ExtraRule::cor2_detect:
            return detail::smallest_u_detection(
                seq, [](const ColoredPart& p) { return p.value % 4 == 0; }, 4);
        case ExtraRule::cor3_tail: {
            int t = 0;
            for (const auto& p : seq)
                if (p.value % 4 == 0) ++t;
            return detail::final_parts_overlined(seq, t);
        }
    }
    return false;
}

inline Stats stats_of(StatsRule rule, const Jagged& seq) {
    Stats s;
    switch (rule) {
        case StatsRule::weighted:
        case StatsRule::weighted_k0:
            for (const auto& p : seq) {
                if (!p.overlined) ++s.k;
                if (p.color == Color::a) ++s.i;
                if (p.color == Color::b) ++s.j;
            }
            if (rule == StatsRule::weighted_k0) s.k = 0;
            break;
        case StatsRule::mod3:
        case StatsRule::mod3_k0:
            for (const auto& p : seq) {
                if (!p.overlined) ++s.k;
                if (p.value % 3 == 1) ++s.i;
                if (p.value % 3 == 2) ++s.j;
            }
            if (rule == StatsRule::mod3_k0) s.k = 0;
            break;
        case StatsRule::mod4:
            for (const auto& p : seq) {
                if (p.value % 4 == 1) ++s.i;
                if (p.value % 4 == 2) ++s.j;
            }
            break;
        case StatsRule::parity_changes:
            // i = number of parts, k = parity changes including the phantom 0
            s.i = (int)seq.size();
            for (std::size_t x = 0; x < seq.size(); ++x) {
                int next = x + 1 < seq.size() ? seq[x + 1].value : 0;
                if (((seq[x].value - next) % 2 + 2) % 2 == 1) ++s.k;
            }
            break;
    }
    return s;
}

inline const FamilySpec& family(FamilyId id) {
    static const std::map<FamilyId, FamilySpec> reg = [] {
        std::map<FamilyId, FamilySpec> m;
        auto put = [&](FamilySpec f) { m.emplace(f.id, std::move(f)); };

        const std::vector<ColoredPart> cbar_excl = {
            {0, Color::a, false}, {0, Color::b, false},
            {1, Color::a, true},  {1, Color::b, true}};

        FamilySpec cbar{FamilyId::cbar, "cbar", true, true, true,
                        PairRule::cbar, ExtraRule::none, StatsRule::weighted,
                        0, nullptr, cbar_excl};
        put(cbar);

        FamilySpec aag = cbar;
        aag.id = FamilyId::aag;
        aag.name = "aag";
        aag.extra = ExtraRule::all_overlined;
        aag.stats_rule = StatsRule::weighted_k0;
        aag.requires_k_budget = false;  // all parts overlined => finite
        put(aag);

        for (auto [id, name, extra] :
             {std::tuple{FamilyId::c1, "c1", ExtraRule::c1},
              std::tuple{FamilyId::c2, "c2", ExtraRule::c2},
              std::tuple{FamilyId::c3, "c3", ExtraRule::c3},
              std::tuple{FamilyId::c4, "c4", ExtraRule::c4}}) {
            FamilySpec f = cbar;
            f.id = id;
            f.name = name;
            f.extra = extra;
            put(f);
        }

        FamilySpec cw{FamilyId::cstar_w, "cstar-w", true, false, false,
                      PairRule::cstar, ExtraRule::cstar_triple, StatsRule::weighted_k0,
                      1,
                      [](const ColoredPart& p) {
                          return !(p.value == 1 && p.color != Color::u);
                      },
                      {}};
        put(cw);

        FamilySpec af{FamilyId::a_family, "a", false, false, false,
                      PairRule::distinct, ExtraRule::none, StatsRule::parity_changes,
                      1, nullptr, {}};
        put(af);

        FamilySpec c1d{FamilyId::cor1, "cor1", false, true, false,
                       PairRule::cor1, ExtraRule::cor1_tail, StatsRule::mod3,
                       1, nullptr, {{1, Color::u, true}}};
        put(c1d);

        const std::vector<ColoredPart> cor23_excl = {{1, Color::u, true},
                                                     {1, Color::u, false},
                                                     {2, Color::u, true},
                                                     {5, Color::u, true}};
        FamilySpec c2d{FamilyId::cor2, "cor2", false, true, false,
                       PairRule::cor23, ExtraRule::cor2_detect, StatsRule::mod4,
                       1,
                       [](const ColoredPart& p) { return p.value % 4 != 3; },
                       cor23_excl};
        put(c2d);

        FamilySpec c3d = c2d;
        c3d.id = FamilyId::cor3;
        c3d.name = "cor3";
        c3d.extra = ExtraRule::cor3_tail;
        put(c3d);

        FamilySpec cap{FamilyId::capparelli, "capparelli", false, false, false,
                       PairRule::capparelli, ExtraRule::none, StatsRule::mod3_k0,
                       2, nullptr, {}};
        put(cap);

        FamilySpec cs{FamilyId::cstar, "cstar", false, false, false,
                      PairRule::cstar_dilated, ExtraRule::none, StatsRule::mod3_k0,
                      2, nullptr, {}};
        put(cs);
        return m;
    }();
    return reg.at(id);
}

inline std::optional<FamilyId> family_by_name(const std::string& name) {
    for (FamilyId id : {FamilyId::cbar, FamilyId::aag, FamilyId::c1, FamilyId::c2,
                        FamilyId::c3, FamilyId::c4, FamilyId::cstar_w,
                        FamilyId::a_family, FamilyId::cor1, FamilyId::cor2,
                        FamilyId::cor3, FamilyId::capparelli, FamilyId::cstar}) {
        if (family(id).name == name) return id;
    }
    return std::nullopt;
}

inline bool part_in_domain(const FamilySpec& f, const ColoredPart& p) {
    if (p.value < f.min_value) return false;
    if (p.overlined && (!f.overlines || p.value < 1)) return false;
    if (!f.colored && p.color != Color::u) return false;  // plain parts carry u
    if (f.domain && !f.domain(p)) return false;
    return true;
}

// Full validity of a candidate object against a family: part domain, the
// pairwise difference rule, the final-part exclusions, the extra condition.
// The "no three successive parts differ by 2" reading of the dilated
// companion is a pair rule plus nothing extra: the only consecutive
// differences of exactly 2 its matrix admits are (u,a) and (a,b), so the
// forbidden (2,2) triple is checked explicitly below.
inline bool is_valid(const FamilySpec& f, const Jagged& seq) {
    for (const auto& p : seq)
        if (!part_in_domain(f, p)) return false;
    for (std::size_t x = 0; x + 1 < seq.size(); ++x)
        if (!pair_ok(f.pair_rule, seq[x], seq[x + 1])) return false;
    if (!seq.empty()) {
        for (const auto& e : f.final_exclusions)
            if (seq.back() == e) return false;
    }
    if (f.id == FamilyId::cstar) {
        for (std::size_t x = 0; x + 2 < seq.size(); ++x)
            if (seq[x].value - seq[x + 1].value == 2 &&
                seq[x + 1].value - seq[x + 2].value == 2)
                return false;
    }
    return extra_ok(f.extra, seq);
}

inline bool is_valid(FamilyId id, const Jagged& seq) { return is_valid(family(id), seq); }

// ----------------------------- enumeration -----------------------------

inline constexpr int kNoBudget = std::numeric_limits<int>::max();

// The complete, duplicate-free list of valid objects of weight n with at
// most k_max non-overlined parts, in lexicographic order of the generated
// sequence (parts compare as (value, color, overlined)).  Parts are
// generated left to right; candidates for the next position are the parts
// in the family domain that satisfy the pairwise rule against the previous
// part, with values capped by the remaining weight; zero-valued parts are
// only reachable while the non-overline budget lasts, which bounds the
// recursion depth by n + k_max.
inline std::vector<Jagged> enumerate_family(const FamilySpec& f, int n, int k_max) {
    std::vector<Jagged> out;
    if (n == 0) {
        out.push_back({});
        if (n == 0 && k_max >= 0) {
            // the empty sequence is valid for every family
        }
    }
    Jagged cur;
    auto rec = [&](auto&& self, int rem, int budget) -> void {
        if (rem == 0 && !cur.empty() && is_valid(f, cur)) out.push_back(cur);
        const ColoredPart* prev = cur.empty() ? nullptr : &cur.back();
        for (int v = 0; v <= rem; ++v) {
            for (Color c : {Color::a, Color::b, Color::u}) {
                if (!f.colored && c != Color::u) continue;
                for (bool o : {false, true}) {
                    if (o && !f.overlines) continue;
                    ColoredPart p{v, c, o};
                    if (!part_in_domain(f, p)) continue;
                    if (prev && !pair_ok(f.pair_rule, *prev, p)) continue;
                    int nb = budget;
                    if (!o) {
                        if (nb != kNoBudget) {
                            if (nb == 0) continue;
                            --nb;
                        }
                    }
                    cur.push_back(p);
                    self(self, rem - v, nb);
                    cur.pop_back();
                }
            }
        }
    };
    if (n > 0) rec(rec, n, k_max);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Jagged> enumerate_family(FamilyId id, int n, int k_max) {
    return enumerate_family(family(id), n, k_max);
}

inline AbdPoly gen_poly(const FamilySpec& f, int n, int k_max) {
    AbdPoly p;
    for (const auto& seq : enumerate_family(f, n, k_max)) {
        Stats s = stats_of(f.stats_rule, seq);
        p.add(s.i, s.j, s.k, 1);
    }
    return p;
}

inline TruncatedSeries series_of_family(const FamilySpec& f, int N, int K) {
    TruncatedSeries s(Bounds::qd(N, K));
    for (int n = 0; n <= N; ++n) {
        for (const auto& seq : enumerate_family(f, n, K)) {
            Stats st = stats_of(f.stats_rule, seq);
            s.add_term(Monomial{n, st.i, st.j, st.k, 0}, 1);
        }
    }
    return s;
}

inline TruncatedSeries series_of_family(FamilyId id, int N, int K) {
    return series_of_family(family(id), N, K);
}

// ----------------------------- dilation of parts -----------------------------

enum class PartDilation { mod3, mod4 };

// mod3: v_a -> 3v-2, v_b -> 3v-4, v_u -> 3v  (q -> q^3, a -> aq^-2, b -> bq^-4)
// mod4: v_a -> 4v+1, v_b -> 4v-2, v_u -> 4v  (q -> q^4, a -> aq,    b -> bq^-2)
inline ColoredPart dilate_part(const ColoredPart& p, PartDilation rule) {
    int v = 0;
    if (rule == PartDilation::mod3) {
        switch (p.color) {
            case Color::a: v = 3 * p.value - 2; break;
            case Color::b: v = 3 * p.value - 4; break;
            case Color::u: v = 3 * p.value; break;
        }
    } else {
        switch (p.color) {
            case Color::a: v = 4 * p.value + 1; break;
            case Color::b: v = 4 * p.value - 2; break;
            case Color::u: v = 4 * p.value; break;
        }
    }
    if (v < 1)
        throw DilationError(Monomial{p.value, 0, 0, 0, 0},
                            "part dilates below 1 (family/dilation mismatch)");
    return ColoredPart{v, Color::u, p.overlined};
}

// ----------------------------- product sides -----------------------------

enum class ProductFamily { D, DBAR, DPRIME, DDPRIME, A };

inline std::optional<ProductFamily> product_family_by_name(const std::string& s) {
    if (s == "d") return ProductFamily::D;
    if (s == "dbar") return ProductFamily::DBAR;
    if (s == "dprime") return ProductFamily::DPRIME;
    if (s == "ddprime") return ProductFamily::DDPRIME;
    if (s == "a") return ProductFamily::A;
    return std::nullopt;
}

// Partitions of n into distinct parts with an allowed-value predicate,
// weakly decreasing, no overlines.
template <typename Allowed>
std::vector<Jagged> partitions_distinct(int n, Allowed allowed) {
    std::vector<Jagged> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    Jagged cur;
    auto rec = [&](auto&& self, int rem, int maxv) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = std::min(rem, maxv); v >= 1; --v) {
            if (!allowed(v)) continue;
            cur.push_back(ColoredPart{v, Color::u, false});
            self(self, rem - v, v - 1);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// Overpartitions of n: weakly decreasing positive parts, at most the final
// occurrence of each value overlined, with per-value predicates for the
// overlined and non-overlined roles.
template <typename OlAllowed, typename NolAllowed>
std::vector<Jagged> overpartitions(int n, OlAllowed ol_ok, NolAllowed nol_ok) {
    std::vector<Jagged> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    Jagged cur;
    auto rec = [&](auto&& self, int rem, int maxv) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = std::min(rem, maxv); v >= 1; --v) {
            if (!cur.empty() && cur.back().value == v && cur.back().overlined)
                continue;  // an overlined occurrence must be the final one
            for (bool o : {false, true}) {
                if (o ? !ol_ok(v) : !nol_ok(v)) continue;
                cur.push_back(ColoredPart{v, Color::u, o});
                self(self, rem - v, v);
                cur.pop_back();
            }
        }
    };
    rec(rec, n, n);
    return out;
}

inline std::vector<Jagged> enumerate_product_side(ProductFamily id, int n) {
    switch (id) {
        case ProductFamily::D:
            return partitions_distinct(n, [](int v) { return v % 6 != 1 && v % 6 != 5; });
        case ProductFamily::DBAR:
            return partitions_distinct(n, [](int v) { return v % 6 != 5; });
        case ProductFamily::DPRIME:
            return overpartitions(
                n, [](int v) { return v % 4 != 3 && v != 1; },
                [](int v) { return v % 8 == 0 || v % 8 == 3 || v % 8 == 4; });
        case ProductFamily::DDPRIME:
            return overpartitions(n, [](int v) { return v % 4 != 3 && v != 1; },
                                  [](int v) { return v % 8 == 3; });
        case ProductFamily::A:
            return partitions_distinct(n, [](int) { return true; });
    }
    throw SeriesError("unknown product family");
}

inline Stats product_side_stats(ProductFamily id, const Jagged& seq) {
    Stats s;
    switch (id) {
        case ProductFamily::D:
            for (const auto& p : seq) {
                if (p.value % 3 == 1) ++s.i;
                if (p.value % 3 == 2) ++s.j;
            }
            break;
        case ProductFamily::DBAR: {
            // k counts indices with a difference of 3 mod 6 along the
            // subpartition of parts == 1 mod 3, with sentinel -2 appended
            std::vector<int> sub;
            for (const auto& p : seq) {
                if (p.value % 3 == 1) {
                    ++s.i;
                    sub.push_back(p.value);
                }
                if (p.value % 3 == 2) ++s.j;
            }
            sub.push_back(-2);
            for (std::size_t x = 0; x + 1 < sub.size(); ++x)
                if (((sub[x] - sub[x + 1]) % 6 + 6) % 6 == 3) ++s.k;
            break;
        }
        case ProductFamily::DPRIME:
        case ProductFamily::DDPRIME:
            // a part == 3 mod 8 increments both i and j
            for (const auto& p : seq) {
                if (p.value % 4 == 1 || p.value % 8 == 3) ++s.i;
                if (p.value % 4 == 2 || p.value % 8 == 3) ++s.j;
            }
            break;
        case ProductFamily::A:
            s.i = (int)seq.size();
            for (std::size_t x = 0; x < seq.size(); ++x) {
                int next = x + 1 < seq.size() ? seq[x + 1].value : 0;  // phantom 0
                if (((seq[x].value - next) % 2 + 2) % 2 == 1) ++s.k;
            }
            break;
    }
    return s;
}

using CountTable = std::map<Stats, long long>;

inline CountTable count_product_side(ProductFamily id, int n) {
    CountTable t;
    for (const auto& seq : enumerate_product_side(id, n))
        ++t[product_side_stats(id, seq)];
    return t;
}

inline CountTable count_family(const FamilySpec& f, int n, int k_max) {
    CountTable t;
    for (const auto& seq : enumerate_family(f, n, k_max))
        ++t[stats_of(f.stats_rule, seq)];
    return t;
}

}  // namespace cappa
