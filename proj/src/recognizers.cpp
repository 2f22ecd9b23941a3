#include "mdec/recognizers.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "mdec/patterns.hpp"

namespace mdec {

// --- certificates ------------------------------------------------------------

bool is_chordless_cycle(const Graph& g, std::span<const Vertex> cycle) {
    const std::size_t k = cycle.size();
    if (k < 4) return false;
    std::vector<Vertex> sorted(cycle.begin(), cycle.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (Vertex v : sorted)
        if (!g.contains_vertex(v)) return false;
    for (std::size_t i = 0; i < k; ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % k])) return false;
    return induced_subgraph(g, sorted).edge_count() == k;
}

bool verify_forbidden(const Graph& g, const ForbiddenSubgraph& sub) {
    if (sub.name == "hole") return sub.vertices.size() >= 5 && is_chordless_cycle(g, sub.vertices);
    if (sub.name == "square") return sub.vertices.size() == 4 && is_chordless_cycle(g, sub.vertices);
    Graph pattern;
    if (sub.name == "house") pattern = patterns::house();
    else if (sub.name == "gem") pattern = patterns::gem();
    else if (sub.name == "domino") pattern = patterns::domino();
    else if (sub.name == "P4") pattern = patterns::path(4);
    else return false;
    if (static_cast<Vertex>(sub.vertices.size()) != pattern.vertex_count()) return false;
    for (Vertex v : sub.vertices)
        if (!g.contains_vertex(v)) return false;
    std::vector<Vertex> tmp = sub.vertices;
    std::sort(tmp.begin(), tmp.end());
    if (std::adjacent_find(tmp.begin(), tmp.end()) != tmp.end()) return false;
    for (Vertex a = 0; a < pattern.vertex_count(); ++a)
        for (Vertex b = a + 1; b < pattern.vertex_count(); ++b)
            if (pattern.has_edge(a, b) != g.has_edge(sub.vertices[a], sub.vertices[b])) return false;
    return true;
}

// --- chordal -----------------------------------------------------------------

std::vector<Vertex> lex_bfs_order(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<Vertex> order(n);
    std::vector<std::size_t> pos(n), cell_of(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = static_cast<Vertex>(i);
        pos[i] = i;
    }
    struct Cell {
        std::size_t start, end, moved;
    };
    std::vector<Cell> cells{{0, n, 0}};
    std::vector<char> visited(n, 0);
    std::vector<std::size_t> touched;
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = order[i];
        visited[v] = 1;
        ++cells[cell_of[v]].start;
        touched.clear();
        for (Vertex w : g.neighbors(v)) {
            if (visited[w]) continue;
            const std::size_t cid = cell_of[w];
            Cell& c = cells[cid];
            if (c.moved == 0) touched.push_back(cid);
            const std::size_t target = c.start + c.moved;
            const Vertex other = order[target];
            std::swap(order[pos[w]], order[target]);
            pos[other] = pos[w];
            pos[w] = target;
            ++c.moved;
        }
        for (std::size_t cid : touched) {
            Cell c = cells[cid];
            if (c.moved < c.end - c.start) {
                const std::size_t nid = cells.size();
                cells.push_back({c.start, c.start + c.moved, 0});
                for (std::size_t p = c.start; p < c.start + c.moved; ++p) cell_of[order[p]] = nid;
                cells[cid].start += c.moved;
            }
            cells[cid].moved = 0;
        }
    }
    return order;
}

namespace {

struct PeoViolation {
    Vertex v, u, w;  // u, w later neighbors of v, not adjacent
};

std::optional<PeoViolation> find_peo_violation(const Graph& g, std::span<const Vertex> order) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < order.size(); ++i) idx[order[i]] = i;
    // pending[u] = (v, w) pairs requiring w in N(u)
    std::vector<std::vector<std::pair<Vertex, Vertex>>> pending(n);
    for (Vertex v : order) {
        Vertex parent = -1;
        for (Vertex w : g.neighbors(v))
            if (idx[w] > idx[v] && (parent < 0 || idx[w] < idx[parent])) parent = w;
        if (parent < 0) continue;
        for (Vertex w : g.neighbors(v))
            if (idx[w] > idx[v] && w != parent) pending[parent].emplace_back(v, w);
    }
    std::vector<std::size_t> mark(n, static_cast<std::size_t>(-1));
    for (std::size_t u = 0; u < n; ++u) {
        if (pending[u].empty()) continue;
        for (Vertex x : g.neighbors(static_cast<Vertex>(u))) mark[x] = u;
        for (auto [v, w] : pending[u])
            if (mark[w] != u) return PeoViolation{v, static_cast<Vertex>(u), w};
    }
    return std::nullopt;
}

// Shortest u-w path avoiding `blocked`; empty if none.
std::vector<Vertex> shortest_path_avoiding(const Graph& g, Vertex u, Vertex w, const std::vector<char>& blocked) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<Vertex> parent(n, -2);
    std::deque<Vertex> q{u};
    parent[u] = -1;
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop_front();
        if (x == w) break;
        for (Vertex y : g.neighbors(x))
            if (!blocked[y] && parent[y] == -2) {
                parent[y] = x;
                q.push_back(y);
            }
    }
    if (parent[w] == -2) return {};
    std::vector<Vertex> path;
    for (Vertex x = w; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

// Chordless cycle through v, x, y where x and y are non-adjacent neighbors of v.
std::vector<Vertex> cycle_through(const Graph& g, Vertex v, Vertex x, Vertex y) {
    std::vector<char> blocked(static_cast<std::size_t>(g.vertex_count()), 0);
    blocked[v] = 1;
    for (Vertex z : g.neighbors(v))
        if (z != x && z != y) blocked[z] = 1;
    auto path = shortest_path_avoiding(g, x, y, blocked);
    if (path.empty()) return {};
    std::vector<Vertex> cycle{v};
    cycle.insert(cycle.end(), path.begin(), path.end());
    return cycle;
}

std::vector<Vertex> find_chordless_cycle(const Graph& g, const PeoViolation& hint) {
    auto c = cycle_through(g, hint.v, hint.u, hint.w);
    if (is_chordless_cycle(g, c)) return c;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                c = cycle_through(g, v, nb[i], nb[j]);
                if (is_chordless_cycle(g, c)) return c;
            }
    }
    throw std::logic_error("non-chordal graph without a chordless cycle");
}

}  // namespace

bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order) {
    if (order.size() != static_cast<std::size_t>(g.vertex_count())) return false;
    std::vector<char> seen(order.size(), 0);
    for (Vertex v : order) {
        if (!g.contains_vertex(v) || seen[v]) return false;
        seen[v] = 1;
    }
    return !find_peo_violation(g, order).has_value();
}

ChordalResult is_chordal(const Graph& g) {
    ChordalResult r;
    auto visit = lex_bfs_order(g);
    std::vector<Vertex> elimination(visit.rbegin(), visit.rend());
    auto violation = find_peo_violation(g, elimination);
    if (!violation) {
        r.chordal = true;
        r.elimination_order = std::move(elimination);
        return r;
    }
    r.chordless_cycle = find_chordless_cycle(g, *violation);
    return r;
}

// --- split -------------------------------------------------------------------

SplitResult is_split(const Graph& g) {
    SplitResult r;
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<Vertex> by_degree(n);
    for (std::size_t i = 0; i < n; ++i) by_degree[i] = static_cast<Vertex>(i);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (g.degree(by_degree[i]) + 1 >= i + 1) k = i + 1;  // d_i >= i - 1 (1-based)
    std::size_t head = 0, tail = 0;
    for (std::size_t i = 0; i < n; ++i) (i < k ? head : tail) += g.degree(by_degree[i]);
    r.split = head == k * (k - 1) + tail;
    if (r.split) {
        r.clique.assign(by_degree.begin(), by_degree.begin() + static_cast<std::ptrdiff_t>(k));
        r.independent.assign(by_degree.begin() + static_cast<std::ptrdiff_t>(k), by_degree.end());
        std::sort(r.clique.begin(), r.clique.end());
        std::sort(r.independent.begin(), r.independent.end());
    }
    return r;
}

// --- pruning -----------------------------------------------------------------

std::string_view to_string(PruneKind kind) {
    switch (kind) {
        case PruneKind::pendant: return "pendant";
        case PruneKind::true_twin: return "true-twin";
        case PruneKind::false_twin: return "false-twin";
        case PruneKind::isolated: return "isolated";
    }
    return "?";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Pruner {
public:
    Pruner(const Graph& g, bool allow_pendant)
        : g_(g), allow_pendant_(allow_pendant), n_(static_cast<std::size_t>(g.vertex_count())),
          alive_(n_, 1), live_deg_(n_), key_(n_), open_(n_), closed_(n_), mark_(n_, 0) {
        for (std::size_t v = 0; v < n_; ++v) {
            key_[v] = splitmix64(v * 0x632be59bd9b4e019ULL + 17);
            live_deg_[v] = g.degree(static_cast<Vertex>(v));
        }
        open_buckets_.reserve(n_);
        closed_buckets_.reserve(n_);
        for (std::size_t v = 0; v < n_; ++v) {
            std::uint64_t h = 0;
            for (Vertex w : g.neighbors(static_cast<Vertex>(v))) h += key_[w];
            open_[v] = h;
            closed_[v] = h + key_[v];
            open_buckets_[open_[v]].push_back(static_cast<Vertex>(v));
            closed_buckets_[closed_[v]].push_back(static_cast<Vertex>(v));
        }
    }

    PruneResult run() {
        PruneResult r;
        std::size_t alive_count = n_;
        std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> heap;
        for (std::size_t v = 0; v < n_; ++v) heap.push(static_cast<Vertex>(v));
        while (alive_count > 1 && !heap.empty()) {
            const Vertex v = heap.top();
            heap.pop();
            if (!alive_[v]) continue;
            auto step = eligible(v);
            if (!step) continue;
            r.sequence.push_back(*step);
            alive_[v] = 0;
            --alive_count;
            for (Vertex u : g_.neighbors(v)) {
                if (!alive_[u]) continue;
                --live_deg_[u];
                open_[u] -= key_[v];
                closed_[u] -= key_[v];
                open_buckets_[open_[u]].push_back(u);
                closed_buckets_[closed_[u]].push_back(u);
                heap.push(u);
                push_bucket_members(open_buckets_, open_, open_[u], u, heap);
                push_bucket_members(closed_buckets_, closed_, closed_[u], u, heap);
            }
        }
        for (std::size_t v = 0; v < n_; ++v)
            if (alive_[v]) r.remainder.push_back(static_cast<Vertex>(v));
        r.reduced = r.remainder.size() <= 1;
        return r;
    }

private:
    using Buckets = std::unordered_map<std::uint64_t, std::vector<Vertex>>;

    template <class Heap>
    void push_bucket_members(Buckets& buckets, const std::vector<std::uint64_t>& hash, std::uint64_t h, Vertex u,
                             Heap& heap) {
        auto& list = buckets[h];
        int pushed = 0;
        for (std::size_t i = 0; i < list.size() && pushed < 2;) {
            const Vertex x = list[i];
            if (!alive_[x] || hash[x] != h) {
                list[i] = list.back();
                list.pop_back();
                continue;
            }
            if (x != u) {
                heap.push(x);
                ++pushed;
            }
            ++i;
        }
    }

    bool same_neighborhood(Vertex v, Vertex w, bool closed) {
        if (live_deg_[v] != live_deg_[w]) return false;
        if (g_.has_edge(v, w) != closed) return false;
        ++epoch_;
        for (Vertex x : g_.neighbors(v))
            if (alive_[x] && x != w) mark_[x] = epoch_;
        for (Vertex x : g_.neighbors(w))
            if (alive_[x] && x != v && mark_[x] != epoch_) return false;
        return true;
    }

    Vertex find_twin(Buckets& buckets, const std::vector<std::uint64_t>& hash, Vertex v, bool closed) {
        auto it = buckets.find(hash[v]);
        if (it == buckets.end()) return -1;
        auto& list = it->second;
        const std::uint64_t h = hash[v];
        for (std::size_t i = 0; i < list.size();) {
            const Vertex x = list[i];
            if (!alive_[x] || hash[x] != h) {
                list[i] = list.back();
                list.pop_back();
                continue;
            }
            if (x != v && same_neighborhood(v, x, closed)) return x;
            ++i;
        }
        return -1;
    }

    std::optional<PruneStep> eligible(Vertex v) {
        if (live_deg_[v] == 0) return PruneStep{v, PruneKind::isolated, -1};
        if (allow_pendant_ && live_deg_[v] == 1) {
            for (Vertex w : g_.neighbors(v))
                if (alive_[w]) return PruneStep{v, PruneKind::pendant, w};
        }
        if (Vertex t = find_twin(open_buckets_, open_, v, false); t >= 0) return PruneStep{v, PruneKind::false_twin, t};
        if (Vertex t = find_twin(closed_buckets_, closed_, v, true); t >= 0) return PruneStep{v, PruneKind::true_twin, t};
        return std::nullopt;
    }

    const Graph& g_;
    bool allow_pendant_;
    std::size_t n_;
    std::vector<char> alive_;
    std::vector<std::size_t> live_deg_;
    std::vector<std::uint64_t> key_, open_, closed_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t epoch_ = 0;
    Buckets open_buckets_, closed_buckets_;
};

}  // namespace

PruneResult prune_pendants_and_twins(const Graph& g, bool allow_pendant) { return Pruner(g, allow_pendant).run(); }

bool replay_elimination(const Graph& g, std::span<const PruneStep> sequence, bool allow_pendant) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<char> alive(n, 1);
    std::size_t alive_count = n;
    auto live_neighbors = [&](Vertex v) {
        std::vector<Vertex> out;
        for (Vertex w : g.neighbors(v))
            if (alive[w]) out.push_back(w);
        return out;
    };
    for (const PruneStep& s : sequence) {
        if (!g.contains_vertex(s.vertex) || !alive[s.vertex] || alive_count <= 1) return false;
        auto nv = live_neighbors(s.vertex);
        switch (s.kind) {
            case PruneKind::isolated:
                if (!nv.empty()) return false;
                break;
            case PruneKind::pendant:
                if (!allow_pendant || nv.size() != 1 || nv[0] != s.partner) return false;
                break;
            case PruneKind::false_twin:
            case PruneKind::true_twin: {
                if (!g.contains_vertex(s.partner) || !alive[s.partner] || s.partner == s.vertex) return false;
                const bool adjacent = g.has_edge(s.vertex, s.partner);
                if (adjacent != (s.kind == PruneKind::true_twin)) return false;
                auto nw = live_neighbors(s.partner);
                std::erase(nv, s.partner);
                std::erase(nw, s.vertex);
                if (nv != nw) return false;
                break;
            }
        }
        alive[s.vertex] = 0;
        --alive_count;
    }
    return alive_count <= 1;
}

// --- distance-hereditary ------------------------------------------------------

namespace {

bool dh_reducible(const Graph& g, const std::vector<Vertex>& subset) {
    return prune_pendants_and_twins(induced_subgraph(g, subset), true).reduced;
}

std::vector<Vertex> minimize_non_dh(const Graph& g, std::vector<Vertex> s) {
    for (std::size_t chunk = std::max<std::size_t>(1, s.size() / 2);; chunk /= 2) {
        for (std::size_t i = 0; i < s.size();) {
            std::vector<Vertex> cand(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i));
            cand.insert(cand.end(), s.begin() + static_cast<std::ptrdiff_t>(std::min(s.size(), i + chunk)), s.end());
            if (cand.size() >= 5 && !dh_reducible(g, cand)) s = std::move(cand);
            else i += chunk;
        }
        if (chunk == 1) break;
    }
    return s;
}

std::vector<Vertex> cycle_order(const Graph& h, const std::vector<Vertex>& labels) {
    std::vector<Vertex> order{0};
    Vertex prev = -1, cur = 0;
    while (true) {
        Vertex next = -1;
        for (Vertex w : h.neighbors(cur))
            if (w != prev) {
                next = w;
                break;
            }
        if (next == 0 || next < 0) break;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    for (auto& v : order) v = labels[v];
    return order;
}

ForbiddenSubgraph name_obstruction(const Graph& g, const std::vector<Vertex>& s) {
    Graph h = induced_subgraph(g, s);
    const std::pair<const char*, Graph> named[] = {
        {"house", patterns::house()}, {"gem", patterns::gem()}, {"domino", patterns::domino()}};
    for (const auto& [name, pat] : named)
        if (auto iso = find_isomorphism(pat, h)) {
            ForbiddenSubgraph f{name, {}};
            for (Vertex x : *iso) f.vertices.push_back(s[x]);
            return f;
        }
    const auto dp = degree_profile(h);
    if (h.vertex_count() >= 5 && dp.min_degree == 2 && dp.max_degree == 2 && is_connected(h))
        return ForbiddenSubgraph{"hole", cycle_order(h, s)};
    throw std::logic_error("minimal non-distance-hereditary subgraph matches no known obstruction");
}

}  // namespace

DhResult is_distance_hereditary(const Graph& g) {
    DhResult r;
    auto pr = prune_pendants_and_twins(g, true);
    if (pr.reduced) {
        r.distance_hereditary = true;
        r.elimination = std::move(pr.sequence);
        return r;
    }
    // Holes show up directly as long chordless cycles of the remainder.
    std::vector<Vertex> labels;
    Graph rest = induced_subgraph(g, pr.remainder, &labels);
    auto ch = is_chordal(rest);
    if (!ch.chordal && ch.chordless_cycle.size() >= 5) {
        ForbiddenSubgraph f{"hole", {}};
        for (Vertex v : ch.chordless_cycle) f.vertices.push_back(labels[v]);
        r.obstruction = std::move(f);
        return r;
    }
    r.obstruction = name_obstruction(g, minimize_non_dh(g, pr.remainder));
    return r;
}

// --- cograph -----------------------------------------------------------------

CographResult is_cograph(const Graph& g) {
    CographResult r;
    auto pr = prune_pendants_and_twins(g, false);
    if (pr.reduced) {
        r.cograph = true;
        r.elimination = std::move(pr.sequence);
        return r;
    }
    std::vector<Vertex> labels;
    Graph h = induced_subgraph(g, pr.remainder, &labels);
    for (const Edge& e : h.edges()) {
        for (auto [b, c] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            for (Vertex x : h.neighbors(b)) {
                if (x == c || h.has_edge(x, c)) continue;
                for (Vertex y : h.neighbors(c)) {
                    if (y == b || y == x || h.has_edge(y, b) || h.has_edge(x, y)) continue;
                    r.induced_p4 = {labels[x], labels[b], labels[c], labels[y]};
                    return r;
                }
            }
        }
    }
    throw std::logic_error("twin-free remainder without an induced P4");
}

}  // namespace mdec
