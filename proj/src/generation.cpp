#include "sheafrig/generation.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace sheafrig {

namespace {

// Occurrences of each partner vertex among the new edges of a move; every
// new edge ends at the new vertex, so these are the new parallel classes.
bool respects_parallel_bound(const Multigraph& g, const ExtensionMove& m, int bound) {
    std::map<int, int> cnt;
    for (int id : m.deleted_edge_ids) {
        const MultiEdge* e = g.find_edge(id);
        ++cnt[e->u];
        ++cnt[e->v];
    }
    for (int v : m.attach_vertices) ++cnt[v];
    for (const auto& [v, c] : cnt)
        if (c > bound) return false;
    return true;
}

} // namespace

GeneratedTight generate_tight(int n, int target_vertices, Rng& rng) {
    require(n >= 3, "need n >= 3");
    require(target_vertices >= 2, "need at least two vertices");
    GeneratedTight out{Multigraph::banana(n - 2), {}};
    const int d = n - 1;
    while (out.graph.num_vertices() < target_vertices) {
        for (int attempt = 0;; ++attempt) {
            check_internal(attempt < 20000, "could not sample a valid extension move");
            int kmax = std::min<int>(d, out.graph.num_edges());
            int k = static_cast<int>(rng.below(kmax + 1));
            ExtensionMove m;
            m.dim_d = d;
            m.order_k = k;
            std::vector<int> ids;
            for (const auto& e : out.graph.edges()) ids.push_back(e.id);
            for (int j = 0; j < k; ++j) {
                int pick = j + static_cast<int>(rng.below(ids.size() - j));
                std::swap(ids[j], ids[pick]);
                m.deleted_edge_ids.push_back(ids[j]);
            }
            std::sort(m.deleted_edge_ids.begin(), m.deleted_edge_ids.end());
            for (int j = 0; j < d - k; ++j)
                m.attach_vertices.push_back(static_cast<int>(rng.below(out.graph.num_vertices())));
            if (!respects_parallel_bound(out.graph, m, n - 2)) continue;
            ExtensionResult res = apply_extension(out.graph, m);
            SparsityReport rep = is_sparse(res.graph, n - 1, n);
            check_internal(rep.tight, "extension move broke tightness");
            out.graph = std::move(res.graph);
            out.moves.push_back(std::move(m));
            break;
        }
    }
    return out;
}

namespace {

struct ReversePair {
    int edge_a, edge_b;    // edges at the removed vertex, ids in the parent graph
    int u, uprime;         // their other endpoints, parent vertex ids
    int restored_id;       // id of the restored edge in the reduced graph
};

struct ReverseStep {
    int removed_vertex;                         // parent vertex id
    std::vector<ReversePair> pairs;             // k replaced edges
    std::vector<std::pair<int, int>> attach;    // (edge id, endpoint) in parent ids
};

struct SearchCtx {
    int n;
    long long budget;
    long long nodes = 0;
    bool exhausted = false;
    std::vector<ReverseStep> steps;  // in discovery order: input graph first
};

// Enumerate ways to split the incident-edge list into k unordered pairs (the
// replaced edges) plus singletons (the attach edges).
void enumerate_pairings(const std::vector<int>& items, int k, std::vector<std::pair<int, int>>& current,
                        std::vector<bool>& used, int singles_left,
                        const std::function<bool(const std::vector<std::pair<int, int>>&)>& emit, bool& stop) {
    if (stop) return;
    if (static_cast<int>(current.size()) == k) {
        if (!emit(current)) stop = true;
        return;
    }
    int first = -1;
    for (size_t i = 0; i < items.size(); ++i)
        if (!used[i]) {
            first = static_cast<int>(i);
            break;
        }
    if (first < 0) return;
    used[first] = true;
    for (size_t j = first + 1; j < items.size(); ++j) {
        if (used[j]) continue;
        used[j] = true;
        current.emplace_back(items[first], items[j]);
        enumerate_pairings(items, k, current, used, singles_left, emit, stop);
        current.pop_back();
        used[j] = false;
        if (stop) break;
    }
    if (!stop && singles_left > 0) {
        // First element stays an attach edge.
        enumerate_pairings(items, k, current, used, singles_left - 1, emit, stop);
    }
    used[first] = false;
}

bool search_reverse(const Multigraph& g, SearchCtx& ctx) {
    if (ctx.exhausted) return false;
    if (++ctx.nodes > ctx.budget) {
        ctx.exhausted = true;
        return false;
    }
    const int n = ctx.n, d = n - 1;
    if (g.num_vertices() == 2) return true;  // tightness forces the base graph

    std::vector<int> order(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });

    for (int v : order) {
        const int deg = g.degree(v);
        const int k = deg - d;
        if (k < 0 || k > d) continue;
        std::vector<int> inc = g.incident_edge_ids(v);
        auto other = [&](int id) {
            const MultiEdge* e = g.find_edge(id);
            return e->u == v ? e->v : e->u;
        };

        bool found = false;
        ReverseStep chosen;
        std::vector<std::pair<int, int>> current;
        std::vector<bool> used(inc.size(), false);
        bool stop = false;
        auto emit = [&](const std::vector<std::pair<int, int>>& pairs) -> bool {
            // Restored edges may not be loops.
            for (const auto& [a, b] : pairs)
                if (other(a) == other(b)) return true;
            // Build the reduced graph: drop v, renumber, restore the edges.
            auto renum = [&](int x) { return x > v ? x - 1 : x; };
            std::vector<MultiEdge> kept;
            int max_id = -1;
            for (const auto& e : g.edges()) {
                max_id = std::max(max_id, e.id);
                if (e.u == v || e.v == v) continue;
                kept.push_back({e.id, renum(e.u), renum(e.v)});
            }
            ReverseStep step;
            step.removed_vertex = v;
            int next_id = max_id + 1;
            for (const auto& [a, b] : pairs) {
                ReversePair rp{a, b, other(a), other(b), next_id};
                kept.push_back({next_id, renum(rp.u), renum(rp.uprime)});
                ++next_id;
                step.pairs.push_back(rp);
            }
            std::vector<bool> paired(inc.size(), false);
            for (const auto& [a, b] : pairs)
                for (size_t i = 0; i < inc.size(); ++i)
                    if (inc[i] == a || inc[i] == b) paired[i] = true;
            for (size_t i = 0; i < inc.size(); ++i)
                if (!paired[i]) step.attach.emplace_back(inc[i], other(inc[i]));

            Multigraph reduced = Multigraph::assemble(g.num_vertices() - 1, kept);
            for (const auto& rp : step.pairs)
                if (reduced.parallel_count(renum(rp.u), renum(rp.uprime)) > n - 2) return true;
            if (!is_sparse(reduced, n - 1, n).tight) return true;
            if (search_reverse(reduced, ctx)) {
                chosen = step;
                found = true;
                return false;  // stop enumeration
            }
            return !ctx.exhausted;
        };
        enumerate_pairings(inc, k, current, used, d - k, emit, stop);
        if (found) {
            ctx.steps.push_back(chosen);
            return true;
        }
        if (ctx.exhausted) return false;
    }
    return false;
}

} // namespace

std::optional<Decomposition> decompose_tight_full(const Multigraph& g, int n, long long max_nodes,
                                                  long long* nodes_explored_out) {
    require(n >= 3, "need n >= 3");
    SparsityReport rep = is_sparse(g, n - 1, n);
    require(rep.tight, "input graph is not (n-1,n)-tight");
    require(g.num_vertices() >= 2, "need at least two vertices");

    SearchCtx ctx;
    ctx.n = n;
    ctx.budget = max_nodes;
    bool ok = search_reverse(g, ctx);
    if (nodes_explored_out) *nodes_explored_out = ctx.nodes;
    if (!ok) {
        if (ctx.exhausted) return std::nullopt;
        // A tight graph always decomposes; a dead end here is a bug.
        throw InternalError("reverse-move search failed on a tight graph");
    }

    // Replay the reverse steps bottom-up, tracking the isomorphism between
    // the current level of the reduction and the replayed graph.
    // steps are recorded top-down: steps[0] reduces the input graph.
    std::vector<ReverseStep> steps = ctx.steps;  // steps.back() produced the base graph... (see below)
    // search_reverse appends on the way out of the recursion, so steps[0] is
    // the LAST reduction (to the base graph) and steps.back() the first.
    Decomposition out;

    // Reconstruct the intermediate graphs to know their vertex counts and
    // base edge lists. Simplest: re-run the reductions from the input.
    std::vector<Multigraph> levels;  // levels[0] = input ... levels[m] = base
    levels.push_back(g);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        const ReverseStep& st = *it;
        const Multigraph& cur = levels.back();
        auto renum = [&](int x) { return x > st.removed_vertex ? x - 1 : x; };
        std::vector<MultiEdge> kept;
        for (const auto& e : cur.edges()) {
            if (e.u == st.removed_vertex || e.v == st.removed_vertex) continue;
            kept.push_back({e.id, renum(e.u), renum(e.v)});
        }
        for (const auto& rp : st.pairs) kept.push_back({rp.restored_id, renum(rp.u), renum(rp.uprime)});
        levels.push_back(Multigraph::assemble(cur.num_vertices() - 1, kept));
    }

    const Multigraph& base = levels.back();
    check_internal(base.num_vertices() == 2 && base.num_edges() == n - 2, "unexpected base graph");

    Multigraph replay = Multigraph::banana(n - 2);
    std::map<int, int> phi_v;  // current-level vertex -> replay vertex
    std::map<int, int> phi_e;  // current-level edge id -> replay edge id
    phi_v[0] = 0;
    phi_v[1] = 1;
    for (int i = 0; i < n - 2; ++i) phi_e[base.edges()[i].id] = replay.edges()[i].id;

    // Walk back up: steps in recursion-exit order are base-first.
    for (size_t si = 0; si < steps.size(); ++si) {
        const ReverseStep& st = steps[si];
        const Multigraph& parent = levels[steps.size() - 1 - si];  // graph before this reduction
        auto renum = [&](int x) { return x > st.removed_vertex ? x - 1 : x; };

        ExtensionMove mv;
        mv.dim_d = n - 1;
        mv.order_k = static_cast<int>(st.pairs.size());
        for (const auto& rp : st.pairs) mv.deleted_edge_ids.push_back(phi_e.at(rp.restored_id));
        for (const auto& [eid, w] : st.attach) mv.attach_vertices.push_back(phi_v.at(renum(w)));

        ExtensionResult res = apply_extension(replay, mv);

        std::map<int, int> phi_v_new, phi_e_new;
        for (int x = 0; x < parent.num_vertices(); ++x)
            phi_v_new[x] = (x == st.removed_vertex) ? res.new_vertex : phi_v.at(renum(x));
        for (const auto& e : parent.edges()) {
            if (e.u == st.removed_vertex || e.v == st.removed_vertex) continue;
            phi_e_new[e.id] = phi_e.at(e.id);
        }
        for (size_t j = 0; j < st.pairs.size(); ++j) {
            const ReversePair& rp = st.pairs[j];
            // Match pair orientation to the endpoint order of the deleted
            // replay edge so that edge_a lands on f_{2j-1}.
            const MultiEdge* del = replay.find_edge(mv.deleted_edge_ids[j]);
            int f_odd = res.new_edge_ids[2 * j], f_even = res.new_edge_ids[2 * j + 1];
            if (phi_v.at(renum(rp.u)) == del->u) {
                phi_e_new[rp.edge_a] = f_odd;
                phi_e_new[rp.edge_b] = f_even;
            } else {
                check_internal(phi_v.at(renum(rp.u)) == del->v, "pair endpoint mismatch");
                phi_e_new[rp.edge_a] = f_even;
                phi_e_new[rp.edge_b] = f_odd;
            }
        }
        for (size_t j = 0; j < st.attach.size(); ++j)
            phi_e_new[st.attach[j].first] = res.new_edge_ids[2 * st.pairs.size() + j];

        replay = std::move(res.graph);
        phi_v = std::move(phi_v_new);
        phi_e = std::move(phi_e_new);
        out.moves.push_back(std::move(mv));
    }

    out.vertex_map.assign(g.num_vertices(), -1);
    for (const auto& [x, y] : phi_v) out.vertex_map[x] = y;
    for (const auto& [x, y] : phi_e) {
        out.edge_map_input.push_back(x);
        out.edge_map_replay.push_back(y);
    }
    out.nodes_explored = ctx.nodes;

    check_internal(isomorphic(replay, g), "replayed decomposition is not isomorphic to the input");
    return out;
}

std::optional<std::vector<ExtensionMove>> decompose_tight(const Multigraph& g, int n, long long max_nodes) {
    auto full = decompose_tight_full(g, n, max_nodes);
    if (!full) return std::nullopt;
    return full->moves;
}

bool isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    const int n = a.num_vertices();
    require(n <= 10, "isomorphism check limited to 10 vertices");
    auto mult = [](const Multigraph& g) {
        std::vector<std::vector<int>> m(g.num_vertices(), std::vector<int>(g.num_vertices(), 0));
        for (const auto& e : g.edges()) {
            ++m[e.u][e.v];
            ++m[e.v][e.u];
        }
        return m;
    };
    auto ma = mult(a), mb = mult(b);
    auto degs = [&](const std::vector<std::vector<int>>& m) {
        std::vector<int> d;
        for (const auto& row : m) {
            int s = 0;
            for (int x : row) s += x;
            d.push_back(s);
        }
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(ma) != degs(mb)) return false;

    std::vector<int> perm(n, -1);
    std::vector<bool> taken(n, false);
    std::function<bool(int)> go = [&](int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (taken[w]) continue;
            bool ok = true;
            for (int x = 0; x < v; ++x)
                if (ma[v][x] != mb[w][perm[x]]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            perm[v] = w;
            taken[w] = true;
            if (go(v + 1)) return true;
            taken[w] = false;
            perm[v] = -1;
        }
        return false;
    };
    return go(0);
}

} // namespace sheafrig
