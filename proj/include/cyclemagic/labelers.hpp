#pragma once

#include <string>
#include <vector>

#include "cyclemagic/build.hpp"
#include "cyclemagic/family.hpp"
#include "cyclemagic/labeling.hpp"

// Constructive total labelings, one per family. Each formula block is applied
// as printed in its source construction except where the TYPOS ledger
// (docs/TYPOS.md) records a correction; correction keys are reported by
// corrections_applied() and embedded in certificates.

namespace cyclemagic {

namespace typo {
// Printed even-i fan vertex formula collides; exponent-preserving correction.
inline constexpr const char* kFanEvenVertex = "thm-fans-even-vertex";
// Printed odd-wheel rim formula overflows at i = n-1; that rim edge gets the
// one unused block m(2n+2)-j+1.
inline constexpr const char* kWheelOddRim = "thm-wheels-odd-rim-last";
// Printed odd-wheel hub-edge formula restricted to i <= n-1 (i = n has its
// own block).
inline constexpr const char* kWheelOddHubRange = "thm-wheels-odd-hub-range";
// Printed fan-union even-i offset floor(n(s+k)/2) is not bijective for odd n
// unless k-s is 0 or 1; corrected offset counts the odd-position labels.
inline constexpr const char* kFanUnionEvenBase = "thm-fan-union-even-base";
// Consequence of the corrected offset: the odd-n magic constant is
// s(17n+3)/2 + k(17n-15)/2 + 3 rather than the printed (s+k)(17n)/2 + s-7k+3.
inline constexpr const char* kFanUnionOddConstant = "thm-fan-union-odd-constant";
// Union families follow the printed counts (large copies of size n, small of
// size n-1), not the printed names; index ranges shifted accordingly.
inline constexpr const char* kUnionNameOffset = "thm-unions-name-offset";
}  // namespace typo

// Ledger keys of the corrections a given spec's labeler applies.
inline std::vector<std::string> corrections_applied(const FamilySpec& spec) {
    std::vector<std::string> keys;
    switch (spec.family) {
        case Family::Fans:
            keys.push_back(typo::kFanEvenVertex);
            break;
        case Family::Wheels:
            if (spec.n % 2 == 1) {
                keys.push_back(typo::kWheelOddRim);
                keys.push_back(typo::kWheelOddHubRange);
            }
            break;
        case Family::FanUnion:
            keys.push_back(typo::kUnionNameOffset);
            if (spec.n % 2 == 1) {
                keys.push_back(typo::kFanUnionEvenBase);
                keys.push_back(typo::kFanUnionOddConstant);
            }
            break;
        case Family::LadderUnion:
            keys.push_back(typo::kUnionNameOffset);
            break;
        default:
            break;
    }
    return keys;
}

namespace detail {

inline Int parity_sign(Int n) { return n % 2 == 1 ? 1 : -1; }  // (-1)^(n+1)

}  // namespace detail

// --- fans: m >= 2 copies of F_n, n >= 3; triangles around each hub ---
//
// Step 1 labels vertices (hub high block, path vertices odd positions then
// even), step 2 the hub edges, step 3 the path edges; after each step the
// triangle weights form a consecutive run, which the tests assert.
inline TotalLabeling label_fans(Int m, Int n) {
    FamilySpec::fans(m, n).validate();
    const Int sgn = detail::parity_sign(n);
    TotalLabeling lab;
    for (Int j = 1; j <= m; ++j) {
        lab.set_vertex(vid("c", {j}), m * (n + 1) - j + 1);
        for (Int i = 1; i <= n; ++i) {
            if (i % 2 == 1)
                lab.set_vertex(vid("v", {i, j}), j + m * (i - 1) / 2);
            else
                lab.set_vertex(vid("v", {i, j}), exact_div(m * (2 * n + 2 * i - 3 + sgn), 4) + j);
        }
        for (Int i = 1; i <= n; ++i)
            lab.set_edge(vid("c", {j}), vid("v", {i, j}), 3 * m * n - m * (i - 1) - j + 1);
        for (Int i = 1; i + 1 <= n; ++i)
            lab.set_edge(vid("v", {i, j}), vid("v", {i + 1, j}), m * (n + i) + j);
    }
    return lab;
}

// --- ladders: m >= 2 copies of L_n = P_n x P_2, n >= 2; rung squares ---
inline TotalLabeling label_ladders(Int m, Int n) {
    FamilySpec::ladders(m, n).validate();
    const Int v = 2 * m * n;
    const Int e = 3 * m * n - 2 * m;
    TotalLabeling lab;
    for (Int j = 1; j <= m; ++j) {
        for (Int i = 1; i <= n; ++i) {
            lab.set_vertex(vid("u", {i, j}), j + m * (i - 1));
            lab.set_vertex(vid("v", {i, j}), v - m * (i - 1) - j + 1);
            lab.set_edge(vid("u", {i, j}), vid("v", {i, j}), v + m * (i - 1) + j);
        }
        for (Int i = 1; i + 1 <= n; ++i) {
            lab.set_edge(vid("u", {i, j}), vid("u", {i + 1, j}),
                         v + e - m * (n - 1) - m * (i - 1) - j + 1);
            lab.set_edge(vid("v", {i, j}), vid("v", {i + 1, j}), v + e - m * (i - 1) - j + 1);
        }
    }
    return lab;
}

// --- triangular ladders: ladders plus the diagonals u[i+1]v[i] ---
inline TotalLabeling label_triangular_ladders(Int m, Int n) {
    FamilySpec::triangular_ladders(m, n).validate();
    TotalLabeling lab;
    for (Int j = 1; j <= m; ++j) {
        for (Int i = 1; i <= n; ++i) {
            lab.set_vertex(vid("u", {i, j}), j + 2 * m * (i - 1));
            lab.set_vertex(vid("v", {i, j}), j + m * (2 * i - 1));
            lab.set_edge(vid("u", {i, j}), vid("v", {i, j}), m * (4 * n + 1 - 2 * i) - j + 1);
        }
        for (Int i = 1; i + 1 <= n; ++i) {
            lab.set_edge(vid("u", {i, j}), vid("u", {i + 1, j}),
                         m * (6 * n - 3) - 2 * m * (i - 1) - j + 1);
            lab.set_edge(vid("v", {i, j}), vid("v", {i + 1, j}), 2 * m * (3 * n - i - 1) - j + 1);
            lab.set_edge(vid("u", {i + 1, j}), vid("v", {i, j}), 2 * m * (2 * n - i) - j + 1);
        }
    }
    return lab;
}

namespace detail {

// Odd n. Hubs get {1..m}; spokes descend block-wise with a dedicated block
// for i = n; the rim edge v[n-1]v[n] takes the block the printed run skips.
inline void wheel_copy_odd(TotalLabeling& lab, Int m, Int n, Int j) {
    lab.set_vertex(vid("c", {j}), j);
    for (Int i = 1; i <= n; ++i) {
        if (i % 2 == 1)
            lab.set_vertex(vid("v", {i, j}), m * (i + 1) / 2 + j);
        else
            lab.set_vertex(vid("v", {i, j}), m * exact_div(n + i + 1, 2) + j);
    }
    for (Int i = 1; i + 1 <= n; ++i)
        lab.set_edge(vid("c", {j}), vid("v", {i, j}), m * (2 * n - i + 1) - j + 1);
    lab.set_edge(vid("c", {j}), vid("v", {n, j}), m * (2 * n + 1) - j + 1);
    for (Int i = 1; i + 2 <= n; ++i)
        lab.set_edge(vid("v", {i, j}), vid("v", {i + 1, j}), m * (2 * n + 3 + i) - j + 1);
    lab.set_edge(vid("v", {n - 1, j}), vid("v", {n, j}), m * (2 * n + 2) - j + 1);
    lab.set_edge(vid("v", {n, j}), vid("v", {1, j}), m * (2 * n + 3) - j + 1);
}

// n = 0 (mod 4). Hub formula m(n/4 + ceil((n-1)/2) + 1) + j - m with the
// exact quarter n/4.
inline void wheel_copy_mod0(TotalLabeling& lab, Int m, Int n, Int j) {
    const Int half = n / 2;
    lab.set_vertex(vid("c", {j}), m * (n / 4 + (n - 1 + 1) / 2 + 1) + j - m);
    for (Int i = 1; i <= n; ++i) {
        if (i % 2 == 1)
            lab.set_vertex(vid("v", {i, j}), m * (i / 2) + j);
        else if (i <= half)
            lab.set_vertex(vid("v", {i, j}), exact_div(m * (i + n), 2) + j - m);
        else
            lab.set_vertex(vid("v", {i, j}), exact_div(m * (i + n), 2) + j);
    }
    for (Int i = 1; i <= n; ++i) {
        Int block;
        if (i <= half)
            block = 2 * n + 2 - i;
        else if (i <= n - 1)
            block = 2 * n + 1 - i;
        else
            block = 3 * n / 2 + 1;
        lab.set_edge(vid("c", {j}), vid("v", {i, j}), m * block - (j - 1));
    }
    for (Int i = 1; i + 1 <= n; ++i) {
        Int block;
        if (i <= half - 1)
            block = 2 * n + 2 + i;
        else if (i <= n - 2)
            block = 2 * n + 3 + i;
        else
            block = 5 * n / 2 + 2;
        lab.set_edge(vid("v", {i, j}), vid("v", {i + 1, j}), m * block - (j - 1));
    }
    lab.set_edge(vid("v", {n, j}), vid("v", {1, j}), 2 * m * (n + 1) - (j - 1));
}

// n = 2 (mod 4).
inline void wheel_copy_mod2(TotalLabeling& lab, Int m, Int n, Int j) {
    const Int half = n / 2;
    lab.set_vertex(vid("c", {j}), exact_div(3 * m * (n + 2), 4) + j - m);
    for (Int i = 1; i <= n; ++i) {
        if (i == n)
            lab.set_vertex(vid("v", {i, j}), m * half + j);
        else if (i % 2 == 1)
            lab.set_vertex(vid("v", {i, j}), m * (i / 2) + j);
        else if (i <= half)
            lab.set_vertex(vid("v", {i, j}), m * (exact_div(i + n, 2) + 1) + j - m);
        else
            lab.set_vertex(vid("v", {i, j}), m * (exact_div(i + n, 2) + 2) + j - m);
    }
    for (Int i = 1; i <= n; ++i) {
        Int block;
        if (i == 1)
            block = 2 * (n + 1);
        else if (i <= half)
            block = 2 * n + 2 - i;
        else if (i == n)
            block = 3 * n / 2 + 1;
        else if (i % 2 == 0)
            block = 2 * n - i;
        else
            block = 2 * n + 2 - i;
        lab.set_edge(vid("c", {j}), vid("v", {i, j}), m * block - (j - 1));
    }
    for (Int i = 1; i + 1 <= n; ++i) {
        Int block;
        if (i == 1)
            block = 2 * n + 1;
        else if (i <= half - 1)
            block = 2 * n + 1 + i;
        else
            block = 2 * n + 2 + i;
        lab.set_edge(vid("v", {i, j}), vid("v", {i + 1, j}), m * block - (j - 1));
    }
    lab.set_edge(vid("v", {n, j}), vid("v", {1, j}), m * (5 * n / 2 + 1) - (j - 1));
}

}  // namespace detail

// --- wheels: m >= 2 copies of W_n, n >= 3; hub triangles incl. the wrap ---
inline TotalLabeling label_wheels(Int m, Int n) {
    FamilySpec::wheels(m, n).validate();
    TotalLabeling lab;
    for (Int j = 1; j <= m; ++j) {
        if (n % 2 == 1)
            detail::wheel_copy_odd(lab, m, n, j);
        else if (n % 4 == 0)
            detail::wheel_copy_mod0(lab, m, n, j);
        else
            detail::wheel_copy_mod2(lab, m, n, j);
    }
    return lab;
}

// --- books: m >= 2 copies of B_n = K_{1,n} x K_2, n >= 2; the n pages ---
inline TotalLabeling label_books(Int m, Int n) {
    FamilySpec::books(m, n).validate();
    const Int half = n / 2;
    const Int ceil_half = (n + 1) / 2;
    TotalLabeling lab;
    for (Int j = 1; j <= m; ++j) {
        for (Int i = 1; i <= 2; ++i) lab.set_vertex(vid("u", {i, j}), m * (i - 1) + j);
        for (Int i = 1; i <= n; ++i) {
            lab.set_vertex(vid("v", {i, j}), m * (i + 1) + j);
            lab.set_vertex(vid("w", {i, j}), m * (2 * n + 2 - i) + j);
        }
        if (n % 2 == 0) {
            lab.set_edge(vid("u", {1, j}), vid("u", {2, j}), m * (5 * n / 2 + 3) - j + 1);
            for (Int i = 1; i <= n; ++i) {
                if (i <= half) {
                    lab.set_edge(vid("u", {2, j}), vid("v", {i, j}),
                                 m * (2 * n + 2 + i) - j + 1);
                    lab.set_edge(vid("u", {1, j}), vid("w", {i, j}),
                                 m * (5 * n + 5 - 2 * i) - j + 1);
                    lab.set_edge(vid("v", {i, j}), vid("w", {i, j}),
                                 exact_div(m * (7 * n + 6 + 2 * i), 2) - j + 1);
                } else {
                    lab.set_edge(vid("u", {2, j}), vid("v", {i, j}),
                                 m * (2 * n + 3 + i) - j + 1);
                    lab.set_edge(vid("u", {1, j}), vid("w", {i, j}),
                                 m * (6 * n + 4 - 2 * i) - j + 1);
                    lab.set_edge(vid("v", {i, j}), vid("w", {i, j}),
                                 exact_div(m * (5 * n + 6 + 2 * i), 2) - j + 1);
                }
            }
        } else {
            lab.set_edge(vid("u", {1, j}), vid("u", {2, j}), m * (2 * n + 3) - j + 1);
            for (Int i = 1; i <= n; ++i) {
                lab.set_edge(vid("u", {2, j}), vid("v", {i, j}), m * (2 * n + 3 + i) - j + 1);
                if (i <= ceil_half) {
                    lab.set_edge(vid("u", {1, j}), vid("w", {i, j}),
                                 m * (5 * n + 5 - 2 * i) - j + 1);
                    lab.set_edge(vid("v", {i, j}), vid("w", {i, j}),
                                 exact_div(m * (7 * n + 5 + 2 * i), 2) - j + 1);
                } else {
                    lab.set_edge(vid("u", {1, j}), vid("w", {i, j}),
                                 m * (6 * n + 5 - 2 * i) - j + 1);
                    lab.set_edge(vid("v", {i, j}), vid("w", {i, j}),
                                 exact_div(m * (5 * n + 5 + 2 * i), 2) - j + 1);
                }
            }
        }
    }
    return lab;
}

// --- generalized antiprism: l >= 2 copies of A^n_m, m, n >= 3 ---
//
// Every label is l*base + t where t is +k-l or -k+1; the m-odd case splits
// bases by the parities of i and j, the m-even case only by j, and the
// vertical/diagonal sign flips with the parity of n.
inline TotalLabeling label_antiprism(Int l, Int m, Int n) {
    FamilySpec::antiprism(l, m, n).validate();
    TotalLabeling lab;
    auto P = [m](Int i, Int j, Int k) { return detail::apv(i, j, k, m); };
    for (Int k = 1; k <= l; ++k) {
        const Int up = k - l;     // ascending in k
        const Int down = -k + 1;  // descending in k
        for (Int i = 1; i <= m; ++i)
            for (Int j = 1; j <= n; ++j) {
                const bool io = i % 2 == 1, jo = j % 2 == 1;
                Int base, t;
                if (m % 2 == 1) {
                    if (io && jo) {
                        base = m * (j - 1) + exact_div(m - i + 2, 2);
                        t = up;
                    } else if (!io && jo) {
                        base = m * (j - 1) + exact_div(2 * m - i + 2, 2);
                        t = up;
                    } else if (io) {
                        base = m * (j - 1) + exact_div(i + 1, 2);
                        t = down;
                    } else {
                        base = m * (j - 1) + exact_div(m + i + 1, 2);
                        t = down;
                    }
                } else {
                    base = jo ? m * (j - 1) + i : m * j - i + 1;
                    t = jo ? up : down;
                }
                lab.set_vertex(P(i, j, k), l * base + t);
            }
        for (Int i = 1; i <= m; ++i) {
            for (Int j = 1; j <= n; ++j) {  // level edges, top segment
                const bool io = i % 2 == 1, jo = j % 2 == 1;
                Int base, t;
                if (m % 2 == 1) {
                    if (io && jo) {
                        base = m * (4 * n - j - 2) + exact_div(i + 1, 2);
                        t = down;
                    } else if (!io && jo) {
                        base = m * (4 * n - j - 2) + exact_div(m + i + 1, 2);
                        t = down;
                    } else if (io) {
                        base = i != m ? m * (4 * n - j - 2) + exact_div(m - i, 2)
                                      : m * (4 * n - j - 1);
                        t = up;
                    } else {
                        base = m * (4 * n - j - 2) + exact_div(2 * m - i, 2);
                        t = up;
                    }
                } else {
                    if (jo) {
                        base = i != m ? m * (4 * n - j - 1) - i : m * (4 * n - j - 1);
                        t = down;
                    } else {
                        base = i != m ? m * (4 * n - j - 2) + i + 1 : m * (4 * n - j - 2) + 1;
                        t = up;
                    }
                }
                lab.set_edge(P(i, j, k), P(i + 1, j, k), l * base + t);
            }
            for (Int j = 1; j + 1 <= n; ++j) {  // vertical edges
                const bool io = i % 2 == 1, jo = j % 2 == 1;
                Int base, t;
                if (m % 2 == 1) {
                    if (io && jo)
                        base = m * (2 * n - j - 1) + exact_div(m + i, 2);
                    else if (!io && jo)
                        base = m * (2 * n - j - 1) + exact_div(i, 2);
                    else if (io)
                        base = m * (2 * n - j - 1) + exact_div(2 * m - i + 1, 2);
                    else
                        base = m * (2 * n - j - 1) + exact_div(m - i + 1, 2);
                    t = n % 2 == 0 ? up : down;
                } else {
                    base = jo ? m * (2 * n - j) - i + 1 : m * (2 * n - j - 1) + i;
                    t = n % 2 == 0 ? up : down;
                }
                lab.set_edge(P(i, j, k), P(i, j + 1, k), l * base + t);
            }
            for (Int j = 1; j + 1 <= n; ++j) {  // diagonal edges
                const bool io = i % 2 == 1, jo = j % 2 == 1;
                Int base, t;
                if (m % 2 == 1) {
                    if (io && jo)
                        base = m * (3 * n - j - 2) + exact_div(2 * m - i + 1, 2);
                    else if (!io && jo)
                        base = m * (3 * n - j - 2) + exact_div(m - i + 1, 2);
                    else if (io)
                        base = m * (3 * n - j - 2) + exact_div(m + i, 2);
                    else
                        base = m * (3 * n - j - 2) + exact_div(i, 2);
                    t = n % 2 == 0 ? down : up;
                } else {
                    base = jo ? m * (3 * n - j - 2) + i : m * (3 * n - j - 1) - i + 1;
                    t = n % 2 == 0 ? down : up;
                }
                lab.set_edge(P(i, j + 1, k), P(i + 1, j, k), l * base + t);
            }
        }
    }
    return lab;
}

// --- fan union: s fans on path n plus k fans on path n-1, n >= 3 ---
inline TotalLabeling label_fan_union(Int s, Int k, Int n) {
    const FamilySpec spec = FamilySpec::fan_union(s, k, n);
    spec.validate();
    const Int tot = s + k;
    const Int v = spec.vertex_count();
    // Even positions start right after the odd-position labels.
    const Int even_base = n % 2 == 0 ? tot * n / 2 : tot * (n - 1) / 2 + s;
    TotalLabeling lab;
    for (Int j = 1; j <= tot; ++j) {
        const Int b = spec.union_path_length(j);
        lab.set_vertex(vid("c", {j}), v - j + 1);
        for (Int i = 1; i <= b; ++i) {
            if (i % 2 == 1)
                lab.set_vertex(vid("v", {i, j}), j + tot * (i - 1) / 2);
            else
                lab.set_vertex(vid("v", {i, j}), j + tot * (i - 2) / 2 + even_base);
        }
        for (Int i = 1; i <= b; ++i)
            lab.set_edge(vid("c", {j}), vid("v", {i, j}),
                         s * (3 * n - i + 1) + k * (3 * n - i - 2) - j + 1);
        for (Int i = 1; i + 1 <= b; ++i)
            lab.set_edge(vid("v", {i, j}), vid("v", {i + 1, j}),
                         s * (n + i) + k * (n + i - 1) + j);
    }
    return lab;
}

// --- ladder union: s ladders of length n plus k of length n-1, n >= 3 ---
inline TotalLabeling label_ladder_union(Int s, Int k, Int n) {
    const FamilySpec spec = FamilySpec::ladder_union(s, k, n);
    spec.validate();
    const Int v = spec.vertex_count();
    const Int e = spec.edge_count();
    TotalLabeling lab;
    for (Int j = 1; j <= s; ++j) {
        for (Int i = 1; i <= n; ++i) {
            lab.set_vertex(vid("u", {i, j}), i + n * (j - 1));
            lab.set_vertex(vid("v", {i, j}), v - n * (j - 1) - i + 1);
            lab.set_edge(vid("u", {i, j}), vid("v", {i, j}), v + (n - i) * (s + k) + j);
        }
        for (Int i = 1; i + 1 <= n; ++i) {
            lab.set_edge(vid("u", {i, j}), vid("u", {i + 1, j}),
                         v + e - (s + k) * (n - i - 1) - j + 1);
            lab.set_edge(vid("v", {i, j}), vid("v", {i + 1, j}),
                         2 * v - (s + k) * (n - i) - j + 1);
        }
    }
    for (Int t = 1; t <= k; ++t) {
        for (Int i = 1; i + 1 <= n; ++i) {
            lab.set_vertex(vid("a", {i, t}), s * n + i + (n - 1) * (t - 1));
            lab.set_vertex(vid("b", {i, t}), v + n - s * n - t * (n - 1) - i);
            lab.set_edge(vid("a", {i, t}), vid("b", {i, t}),
                         v + (n - i - 1) * (s + k) + s + t);
        }
        for (Int i = 1; i + 2 <= n; ++i) {
            lab.set_edge(vid("a", {i, t}), vid("a", {i + 1, t}),
                         v + e - (s + k) * (n - i - 2) - s - t + 1);
            lab.set_edge(vid("b", {i, t}), vid("b", {i + 1, t}),
                         2 * v - (s + k) * (n - i - 1) - s - t + 1);
        }
    }
    return lab;
}

// Dispatches to the family's labeler.
inline TotalLabeling label_family(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Fans: return label_fans(spec.m, spec.n);
        case Family::Ladders: return label_ladders(spec.m, spec.n);
        case Family::TriangularLadders: return label_triangular_ladders(spec.m, spec.n);
        case Family::Wheels: return label_wheels(spec.m, spec.n);
        case Family::Books: return label_books(spec.m, spec.n);
        case Family::Antiprism: return label_antiprism(spec.l, spec.m, spec.n);
        case Family::FanUnion: return label_fan_union(spec.s, spec.k, spec.n);
        case Family::LadderUnion: return label_ladder_union(spec.s, spec.k, spec.n);
    }
    throw std::logic_error("unknown family");
}

}  // namespace cyclemagic
