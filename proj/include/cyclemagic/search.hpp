#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cyclemagic/cycles.hpp"
#include "cyclemagic/graph.hpp"
#include "cyclemagic/labeling.hpp"
#include "cyclemagic/verify.hpp"

namespace cyclemagic {

class NoCovering : public std::runtime_error {
public:
    explicit NoCovering(const Edge& e)
        : std::runtime_error("edge {" + e.first + ", " + e.second +
                             "} lies in no cycle of the requested length") {}
};

struct SearchConfig {
    Int cycle_length = 3;
    Int limit = std::numeric_limits<Int>::max();       // max labelings to return
    Int node_budget = 10'000'000;                      // max search-tree nodes
    std::optional<Int> target_constant;                // restrict to one c
    std::uint64_t seed = 0;                            // tie-break ordering key
    bool super = true;                                 // vertices 1..v, edges v+1..v+e

    void validate() const {
        if (limit < 1) throw std::invalid_argument("limit must be >= 1");
        if (node_budget < 1) throw std::invalid_argument("node_budget must be >= 1");
    }
};

struct SearchOutcome {
    std::vector<TotalLabeling> labelings;  // each verifier-valid in strict mode
    std::set<Int> constants_seen;
    bool exhausted = false;  // true iff the space was fully explored in budget
    Int nodes_used = 0;
};

namespace detail {

// Deterministic per-seed tie-break key.
inline std::uint64_t mix_hash(std::uint64_t seed, const std::string& name) {
    std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

struct SearchState {
    // element indexing: 0..nv-1 vertices, nv..nv+ne-1 edges
    Int nv = 0, ne = 0;
    std::vector<std::string> vertex_names;
    std::vector<Edge> edge_names;
    std::vector<std::vector<Int>> cycles_of;   // element -> cycle indices
    std::vector<std::vector<Int>> elems_of;    // cycle -> element indices
    std::vector<Int> order;                    // branch order over elements
    std::vector<Int> assigned;                 // element -> label or 0
    std::vector<bool> label_used;              // 1..nv+ne
    std::vector<Int> cycle_sum;                // assigned part
    std::vector<Int> cycle_missing_v;          // unassigned vertex slots
    std::vector<Int> cycle_missing_e;          // unassigned edge slots
};

// Sum of the r smallest (or largest) unused labels in [lo..hi].
inline Int pool_extreme_sum(const std::vector<bool>& used, Int lo, Int hi, Int r, bool smallest) {
    Int sum = 0, taken = 0;
    if (smallest) {
        for (Int x = lo; x <= hi && taken < r; ++x)
            if (!used[x]) {
                sum += x;
                ++taken;
            }
    } else {
        for (Int x = hi; x >= lo && taken < r; --x)
            if (!used[x]) {
                sum += x;
                ++taken;
            }
    }
    return taken == r ? sum : -1;  // -1: pool too small (cannot complete)
}

}  // namespace detail

// Backtracking search for C_k-supermagic labelings over all cycles of the
// given length. Vertices draw labels from {1..v} and edges from {v+1..v+e}
// (the super split) unless cfg.super is off. Complete within budget: with
// exhausted=true the returned set is every solution (up to limit).
inline SearchOutcome find_labelings(const Graph& g, const SearchConfig& cfg) {
    cfg.validate();
    std::vector<Cycle> cycles = enumerate_cycles(g, cfg.cycle_length);
    {
        std::set<Edge> covered;
        for (const Cycle& c : cycles)
            for (const Edge& e : c.edges()) covered.insert(e);
        for (const Edge& e : g.edges())
            if (!covered.count(e)) throw NoCovering(e);
    }

    detail::SearchState st;
    st.vertex_names = g.sorted_vertices();
    st.nv = static_cast<Int>(st.vertex_names.size());
    st.edge_names.assign(g.edges().begin(), g.edges().end());
    st.ne = static_cast<Int>(st.edge_names.size());
    const Int total = st.nv + st.ne;

    std::map<std::string, Int> vindex;
    for (Int i = 0; i < st.nv; ++i) vindex[st.vertex_names[i]] = i;
    std::map<Edge, Int> eindex;
    for (Int i = 0; i < st.ne; ++i) eindex[st.edge_names[i]] = st.nv + i;

    st.cycles_of.resize(total);
    st.elems_of.resize(cycles.size());
    for (Int ci = 0; ci < static_cast<Int>(cycles.size()); ++ci) {
        for (const std::string& v : cycles[ci].vertices()) {
            st.cycles_of[vindex[v]].push_back(ci);
            st.elems_of[ci].push_back(vindex[v]);
        }
        for (const Edge& e : cycles[ci].edges()) {
            st.cycles_of[eindex[e]].push_back(ci);
            st.elems_of[ci].push_back(eindex[e]);
        }
    }

    // Branch order: elements of the least-indexed cycle first so the first
    // completed cycle pins the constant early, then by how many cycles an
    // element appears in, descending; seed only breaks ties.
    st.order.resize(total);
    for (Int i = 0; i < total; ++i) st.order[i] = i;
    auto name_of = [&st](Int el) {
        return el < st.nv ? st.vertex_names[el]
                          : st.edge_names[el - st.nv].first + "|" + st.edge_names[el - st.nv].second;
    };
    std::vector<bool> in_first(total, false);
    if (!st.elems_of.empty())
        for (Int el : st.elems_of[0]) in_first[el] = true;
    std::sort(st.order.begin(), st.order.end(), [&](Int a, Int b) -> bool {
        if (in_first[a] != in_first[b]) return in_first[a];
        const auto ca = st.cycles_of[a].size(), cb = st.cycles_of[b].size();
        if (ca != cb) return ca > cb;
        return detail::mix_hash(cfg.seed, name_of(a)) < detail::mix_hash(cfg.seed, name_of(b));
    });

    st.assigned.assign(total, 0);
    st.label_used.assign(total + 1, false);
    st.cycle_sum.assign(cycles.size(), 0);
    st.cycle_missing_v.assign(cycles.size(), 0);
    st.cycle_missing_e.assign(cycles.size(), 0);
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
        st.cycle_missing_v[ci] = cycles[ci].length();
        st.cycle_missing_e[ci] = cycles[ci].length();
    }

    SearchOutcome out;
    std::optional<Int> constant = cfg.target_constant;
    bool budget_hit = false;

    auto lo_for = [&](Int el) { return cfg.super ? (el < st.nv ? Int{1} : st.nv + 1) : Int{1}; };
    auto hi_for = [&](Int el) { return cfg.super ? (el < st.nv ? st.nv : total) : total; };

    auto feasible = [&](Int ci) {
        if (!constant) return true;
        const Int mv = st.cycle_missing_v[ci];
        const Int me = st.cycle_missing_e[ci];
        const Int vlo = cfg.super ? 1 : 1, vhi = cfg.super ? st.nv : total;
        const Int elo = cfg.super ? st.nv + 1 : 1, ehi = total;
        Int minv = detail::pool_extreme_sum(st.label_used, vlo, vhi, mv, true);
        Int mine = detail::pool_extreme_sum(st.label_used, elo, ehi, me, true);
        Int maxv = detail::pool_extreme_sum(st.label_used, vlo, vhi, mv, false);
        Int maxe = detail::pool_extreme_sum(st.label_used, elo, ehi, me, false);
        if (minv < 0 || mine < 0) return false;
        return st.cycle_sum[ci] + minv + mine <= *constant &&
               st.cycle_sum[ci] + maxv + maxe >= *constant;
    };

    std::function<bool(Int)> dfs = [&](Int depth) -> bool {  // returns "stop"
        if (depth == total) {
            TotalLabeling lab;
            for (Int i = 0; i < st.nv; ++i) lab.vertex_labels[st.vertex_names[i]] = st.assigned[i];
            for (Int i = 0; i < st.ne; ++i)
                lab.edge_labels[st.edge_names[i]] = st.assigned[st.nv + i];
            VerificationReport rep = verify(g, lab, cfg.cycle_length, VerifyMode::Strict);
            const bool ok = rep.bijective && rep.covering_ok && rep.magic_constant.has_value() &&
                            (rep.super || !cfg.super);
            if (!ok) throw std::logic_error("search emitted a labeling the verifier rejects");
            out.labelings.push_back(std::move(lab));
            out.constants_seen.insert(*rep.magic_constant);
            return static_cast<Int>(out.labelings.size()) >= cfg.limit;
        }
        const Int el = st.order[depth];
        for (Int label = lo_for(el); label <= hi_for(el); ++label) {
            if (st.label_used[label]) continue;
            if (out.nodes_used >= cfg.node_budget) {
                budget_hit = true;
                return true;
            }
            ++out.nodes_used;

            st.label_used[label] = true;
            st.assigned[el] = label;
            const bool is_vertex = el < st.nv;
            std::optional<Int> saved_constant = constant;
            bool ok = true;
            for (Int ci : st.cycles_of[el]) {
                st.cycle_sum[ci] += label;
                (is_vertex ? st.cycle_missing_v[ci] : st.cycle_missing_e[ci])--;
            }
            for (Int ci : st.cycles_of[el]) {
                if (st.cycle_missing_v[ci] == 0 && st.cycle_missing_e[ci] == 0) {
                    if (!constant)
                        constant = st.cycle_sum[ci];
                    else if (st.cycle_sum[ci] != *constant) {
                        ok = false;
                        break;
                    }
                }
                if (!feasible(ci)) {
                    ok = false;
                    break;
                }
            }
            bool stop = false;
            if (ok) stop = dfs(depth + 1);

            for (Int ci : st.cycles_of[el]) {
                st.cycle_sum[ci] -= label;
                (is_vertex ? st.cycle_missing_v[ci] : st.cycle_missing_e[ci])++;
            }
            constant = saved_constant;
            st.assigned[el] = 0;
            st.label_used[label] = false;
            if (stop) return true;
        }
        return false;
    };

    // dfs returns true only when cut short (limit filled or budget hit), so a
    // false return certifies full exploration.
    const bool stopped = total == 0 ? false : dfs(0);
    out.exhausted = !stopped;
    return out;
}

// True iff the candidate labeling passes covering-mode verification at the
// family's predicted constant; the harness that pins typo corrections.
inline bool fit_check(const FamilySpec& spec,
                      const std::function<TotalLabeling(const FamilySpec&)>& candidate) {
    const Graph g = build_graph(spec);
    TotalLabeling lab = candidate(spec);
    VerificationReport rep =
        verify(g, lab, spec.cycle_length(), VerifyMode::Covering, covering_cycles(spec));
    return rep.valid() && rep.magic_constant == predicted_constant(spec);
}

}  // namespace cyclemagic
