#include "mdec/hamiltonian.hpp"

#include <algorithm>
#include <stdexcept>

namespace mdec {

namespace {

// Depth-first path extension with pruning. The search state is the current
// path; every unvisited vertex keeps a count of unvisited neighbors.
class PathSearch {
public:
    PathSearch(const Graph& g, Vertex s, Vertex t, std::uint64_t budget)
        : g_(g), n_(g.vertex_count()), s_(s), t_(t), budget_(budget),
          visited_(static_cast<std::size_t>(n_), 0), free_(static_cast<std::size_t>(n_), 0),
          mark_(static_cast<std::size_t>(n_), 0) {
        for (Vertex v = 0; v < n_; ++v) free_[v] = static_cast<int>(g.degree(v));
    }

    HamiltonSearch run() {
        HamiltonSearch out;
        if (n_ == 1) {
            out.status = s_ == t_ ? HamiltonSearch::Status::found : HamiltonSearch::Status::none;
            if (s_ == t_) out.path = {s_};
            return out;
        }
        if (s_ == t_) return out;
        visit(s_);
        bool ok = false;
        try {
            ok = extend();
        } catch (const Budget&) {
            out.status = HamiltonSearch::Status::budget_exhausted;
            out.nodes = nodes_;
            return out;
        }
        out.nodes = nodes_;
        if (ok) {
            out.status = HamiltonSearch::Status::found;
            out.path = path_;
        }
        return out;
    }

private:
    struct Budget {};

    void visit(Vertex v) {
        visited_[v] = 1;
        path_.push_back(v);
        for (Vertex w : g_.neighbors(v)) --free_[w];
    }

    void unvisit() {
        Vertex v = path_.back();
        path_.pop_back();
        visited_[v] = 0;
        for (Vertex w : g_.neighbors(v)) ++free_[w];
    }

    // Every unvisited vertex other than t needs two usable path neighbors,
    // t needs one; the unvisited part plus the head must be connected.
    bool viable(Vertex head) {
        const std::size_t remaining = static_cast<std::size_t>(n_) - path_.size();
        if (remaining == 0) return head == t_;
        if (visited_[t_]) return false;
        for (Vertex w = 0; w < n_; ++w) {
            if (visited_[w]) continue;
            int options = free_[w] + (g_.has_edge(w, head) ? 1 : 0);
            if (options < (w == t_ ? 1 : 2)) return false;
        }
        // connectivity from head through unvisited vertices
        ++stamp_;
        std::size_t reached = 0;
        stack_.clear();
        stack_.push_back(head);
        mark_[head] = stamp_;
        while (!stack_.empty()) {
            Vertex v = stack_.back();
            stack_.pop_back();
            for (Vertex w : g_.neighbors(v)) {
                if (visited_[w] || mark_[w] == stamp_) continue;
                mark_[w] = stamp_;
                ++reached;
                stack_.push_back(w);
            }
        }
        return reached == remaining;
    }

    bool extend() {
        if (++nodes_ > budget_) throw Budget{};
        Vertex head = path_.back();
        if (path_.size() == static_cast<std::size_t>(n_)) return head == t_;
        if (!viable(head)) return false;

        // A neighbor whose only remaining options are the head and one other
        // vertex must be entered now.
        Vertex forced = -1;
        for (Vertex w : g_.neighbors(head)) {
            if (visited_[w] || w == t_) continue;
            if (free_[w] <= 1) {
                if (forced != -1) return false;
                forced = w;
            }
        }
        auto nb = g_.neighbors(head);
        for (Vertex w : nb) {
            if (visited_[w]) continue;
            if (forced != -1 && w != forced) continue;
            if (w == t_ && path_.size() + 1 != static_cast<std::size_t>(n_)) continue;
            visit(w);
            if (extend()) return true;
            unvisit();
        }
        return false;
    }

    const Graph& g_;
    Vertex n_, s_, t_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<char> visited_;
    std::vector<int> free_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;
    std::vector<Vertex> stack_;
    std::vector<Vertex> path_;
};

void check_vertex(const Graph& g, Vertex v) {
    if (!g.contains_vertex(v)) throw GraphError(GraphError::Kind::out_of_range, v, v);
}

void enumerate(const Graph& g, std::uint32_t full, std::uint32_t used, std::vector<Vertex>& path,
               std::optional<Vertex> to, std::vector<std::vector<Vertex>>& out) {
    Vertex head = path.back();
    if (used == full) {
        if (!to || head == *to) out.push_back(path);
        return;
    }
    for (Vertex w : g.neighbors(head)) {
        if (used & (1u << w)) continue;
        if (to && w == *to && (used | (1u << w)) != full) continue;
        path.push_back(w);
        enumerate(g, full, used | (1u << w), path, to, out);
        path.pop_back();
    }
}

}  // namespace

HamiltonSearch find_hamiltonian_path(const Graph& g, Vertex s, Vertex t, std::uint64_t budget) {
    check_vertex(g, s);
    check_vertex(g, t);
    return PathSearch(g, s, t, budget).run();
}

HamiltonSearch find_hamiltonian_cycle(const Graph& g, std::uint64_t budget) {
    HamiltonSearch out;
    const Vertex n = g.vertex_count();
    if (n < 3) return out;
    // A Hamiltonian cycle through 0 returns to 0 from one of its neighbors;
    // try each neighbor as the far end of a path starting at 0.
    auto nb = g.neighbors(0);
    std::uint64_t left = budget;
    for (std::size_t i = nb.size(); i-- > 0;) {
        HamiltonSearch r = PathSearch(g, 0, nb[i], left).run();
        out.nodes += r.nodes;
        if (r.status == HamiltonSearch::Status::found) {
            out.status = HamiltonSearch::Status::found;
            out.path = std::move(r.path);
            return out;
        }
        if (r.status == HamiltonSearch::Status::budget_exhausted) {
            out.status = HamiltonSearch::Status::budget_exhausted;
            return out;
        }
        left -= std::min(left, r.nodes);
    }
    return out;
}

bool is_hamiltonian_path(const Graph& g, std::span<const Vertex> path) {
    const Vertex n = g.vertex_count();
    if (path.size() != static_cast<std::size_t>(n)) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!g.contains_vertex(path[i]) || seen[path[i]]) return false;
        seen[path[i]] = 1;
        if (i > 0 && !g.has_edge(path[i - 1], path[i])) return false;
    }
    return true;
}

bool is_hamiltonian_cycle(const Graph& g, std::span<const Vertex> cycle) {
    if (cycle.size() < 3) return false;
    return is_hamiltonian_path(g, cycle) && g.has_edge(cycle.back(), cycle.front());
}

std::vector<std::vector<Vertex>> all_hamiltonian_paths(const Graph& g, Vertex from, std::optional<Vertex> to) {
    const Vertex n = g.vertex_count();
    if (n > kMaxEnumerationVertices) throw SizeLimitError("all_hamiltonian_paths: graph too large");
    check_vertex(g, from);
    if (to) check_vertex(g, *to);
    std::vector<std::vector<Vertex>> out;
    const std::uint32_t full = n == 32 ? 0xFFFFFFFFu : ((1u << n) - 1);
    std::vector<Vertex> path{from};
    if (to && *to == from) {
        if (n == 1) out.push_back(path);
        return out;
    }
    enumerate(g, full, 1u << from, path, to, out);
    return out;
}

std::vector<std::vector<Vertex>> all_hamiltonian_cycles_through(const Graph& g, Vertex a, Vertex b) {
    if (!g.has_edge(a, b)) throw GraphError(GraphError::Kind::missing_edge, a, b);
    if (g.vertex_count() < 3) return {};
    return all_hamiltonian_paths(g, a, b);
}

std::vector<Edge> path_edges(std::span<const Vertex> walk, bool closed) {
    std::vector<Edge> out;
    for (std::size_t i = 1; i < walk.size(); ++i) out.emplace_back(walk[i - 1], walk[i]);
    if (closed && walk.size() >= 3) out.emplace_back(walk.back(), walk.front());
    return out;
}

}  // namespace mdec
