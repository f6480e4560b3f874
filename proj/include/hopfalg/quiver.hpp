#ifndef HOPFALG_QUIVER_HPP
#define HOPFALG_QUIVER_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace hopfalg {

enum class GraphClass { dynkin, affine, wild };

/// Ext-quiver with its separated bipartite double and representation-type
/// classification (finite / tame / wild through the separated-graph rule).
struct QuiverGraph {
    std::vector<std::string> vertices;
    // arrows[(src, dst)] = multiplicity
    std::map<std::pair<size_t, size_t>, size_t> arrows;

    struct Component {
        std::vector<size_t> vertices; // indices into the separated vertex list
        GraphClass cls;
        std::string shape; // "A3", "affine A~2", "wild", ...
    };

    // separated graph: vertices 0..n-1 and starred n..2n-1, one undirected
    // edge bundle per arrow i -> j* with the arrow's multiplicity
    std::vector<Component> separated_components() const {
        size_t n = vertices.size();
        std::map<std::pair<size_t, size_t>, size_t> edges; // undirected, key sorted
        for (const auto& [arrow, mult] : arrows) {
            size_t u = arrow.first, v = n + arrow.second;
            edges[{std::min(u, v), std::max(u, v)}] += mult;
        }
        // union-find over 2n vertices
        std::vector<size_t> parent(2 * n);
        for (size_t i = 0; i < 2 * n; ++i) parent[i] = i;
        std::function<size_t(size_t)> find = [&](size_t v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (const auto& [e, mult] : edges)
            if (mult) parent[find(e.first)] = find(e.second);
        std::map<size_t, Component> comps;
        for (size_t v = 0; v < 2 * n; ++v) comps[find(v)].vertices.push_back(v);
        std::vector<Component> out;
        for (auto& [root, comp] : comps) {
            classify(comp, edges);
            out.push_back(std::move(comp));
        }
        return out;
    }

    GraphClass overall_class() const {
        GraphClass cls = GraphClass::dynkin;
        for (const auto& comp : separated_components()) {
            if (comp.cls == GraphClass::wild) return GraphClass::wild;
            if (comp.cls == GraphClass::affine) cls = GraphClass::affine;
        }
        return cls;
    }

private:
    static void classify(Component& comp, const std::map<std::pair<size_t, size_t>, size_t>& all) {
        // restrict the edge multiset to this component
        std::set<size_t> in(comp.vertices.begin(), comp.vertices.end());
        std::vector<std::pair<std::pair<size_t, size_t>, size_t>> edges;
        size_t edge_count = 0;
        std::map<size_t, size_t> degree;
        for (size_t v : comp.vertices) degree[v] = 0;
        for (const auto& [e, mult] : all) {
            if (!mult || !in.count(e.first)) continue;
            edges.push_back({e, mult});
            edge_count += mult;
            degree[e.first] += mult;
            degree[e.second] += mult;
        }
        size_t nv = comp.vertices.size();
        bool multi = false;
        for (const auto& [e, mult] : edges) multi = multi || mult > 1 || e.first == e.second;

        if (edge_count == 0) {
            comp.cls = GraphClass::dynkin;
            comp.shape = "A1";
            return;
        }
        if (multi) {
            // double edge between two vertices = affine A~1; anything else wild
            if (nv == 2 && edges.size() == 1 && edges.front().second == 2 &&
                edges.front().first.first != edges.front().first.second) {
                comp.cls = GraphClass::affine;
                comp.shape = "A~1";
            } else {
                comp.cls = GraphClass::wild;
                comp.shape = "wild";
            }
            return;
        }

        std::vector<size_t> degs;
        for (size_t v : comp.vertices) degs.push_back(degree[v]);
        std::sort(degs.rbegin(), degs.rend());
        bool tree = edge_count == nv - 1;
        bool cycle = edge_count == nv && degs.front() == 2;

        if (tree) {
            if (degs.front() <= 2) {
                comp.cls = GraphClass::dynkin;
                comp.shape = "A" + std::to_string(nv);
                return;
            }
            if (degs.front() == 4 && nv == 5 &&
                std::count(degs.begin(), degs.end(), 1) == 4) {
                // four leaves on one center: D~4
                comp.cls = GraphClass::affine;
                comp.shape = "D~4";
                return;
            }
            if (degs.front() == 3 && std::count(degs.begin(), degs.end(), 3) == 1) {
                // star with three branches: Dynkin DE / affine E~ by branch lengths
                auto branches = branch_lengths(comp, edges);
                std::sort(branches.begin(), branches.end());
                if (branches.size() == 3) {
                    size_t p = branches[0], q = branches[1], r = branches[2];
                    if (p == 1 && q == 1) {
                        comp.cls = GraphClass::dynkin;
                        comp.shape = "D" + std::to_string(nv);
                        return;
                    }
                    if (p == 1 && q == 2 && (r == 2 || r == 3 || r == 4)) {
                        comp.cls = GraphClass::dynkin;
                        comp.shape = "E" + std::to_string(nv);
                        return;
                    }
                    if ((p == 2 && q == 2 && r == 2) || (p == 1 && q == 3 && r == 3) ||
                        (p == 1 && q == 2 && r == 5)) {
                        comp.cls = GraphClass::affine;
                        comp.shape = "E~" + std::to_string(nv - 1);
                        return;
                    }
                }
                comp.cls = GraphClass::wild;
                comp.shape = "wild";
                return;
            }
            if (degs.front() == 3 && std::count(degs.begin(), degs.end(), 3) == 2) {
                // two trivalent nodes, all branches length 1 off a path: D~n
                if (is_affine_D(comp, degree)) {
                    comp.cls = GraphClass::affine;
                    comp.shape = "D~" + std::to_string(nv - 1);
                    return;
                }
            }
            comp.cls = GraphClass::wild;
            comp.shape = "wild";
            return;
        }
        if (cycle) {
            comp.cls = GraphClass::affine;
            comp.shape = "A~" + std::to_string(nv - 1);
            return;
        }
        comp.cls = GraphClass::wild;
        comp.shape = "wild";
    }

    static std::vector<size_t> branch_lengths(
        const Component& comp,
        const std::vector<std::pair<std::pair<size_t, size_t>, size_t>>& edges) {
        // lengths of the three simple paths hanging off the unique trivalent node
        std::map<size_t, std::vector<size_t>> adj;
        for (const auto& [e, mult] : edges) {
            adj[e.first].push_back(e.second);
            adj[e.second].push_back(e.first);
        }
        size_t center = comp.vertices.front();
        for (size_t v : comp.vertices)
            if (adj[v].size() == 3) center = v;
        std::vector<size_t> lens;
        for (size_t start : adj[center]) {
            size_t len = 1, prev = center, cur = start;
            while (adj[cur].size() == 2) {
                size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = nxt;
                ++len;
            }
            lens.push_back(len);
        }
        return lens;
    }

    static bool is_affine_D(const Component& comp, std::map<size_t, size_t> degree) {
        // D~n: a path whose two end nodes each carry two extra leaves
        size_t leaves = 0, deg2 = 0, deg3 = 0;
        for (size_t v : comp.vertices) {
            if (degree[v] == 1) ++leaves;
            else if (degree[v] == 2) ++deg2;
            else if (degree[v] == 3) ++deg3;
            else return false;
        }
        return leaves == 4 && deg3 == 2 && leaves + deg2 + deg3 == comp.vertices.size();
    }
};

} // namespace hopfalg

#endif
