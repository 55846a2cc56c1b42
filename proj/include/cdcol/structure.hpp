#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace cdcol {

// Components of G[within], each as a vertex set; ordered by lowest vertex.
inline std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
	std::vector<VertexSet> out;
	VertexSet seen(g.order());
	for (vertex s : within) {
		if (seen.contains(s))
			continue;
		VertexSet comp(g.order());
		std::vector<vertex> stack{s};
		seen.insert(s);
		while (!stack.empty()) {
			vertex u = stack.back();
			stack.pop_back();
			comp.insert(u);
			for (vertex w : g.neighbors(u))
				if (within.contains(w) && !seen.contains(w)) {
					seen.insert(w);
					stack.push_back(w);
				}
		}
		out.push_back(std::move(comp));
	}
	return out;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
	return connected_components(g, g.vertices());
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

inline bool is_independent(const Graph& g, const VertexSet& s) {
	for (vertex v : s)
		if (g.neighbors(v).intersects(s))
			return false;
	return true;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
	for (vertex v : s) {
		auto others = s;
		others.erase(v);
		if (!others.is_subset_of(g.neighbors(v)))
			return false;
	}
	return true;
}

inline bool has_edge_within(const Graph& g, const VertexSet& s) { return !is_independent(g, s); }

// Length of a shortest cycle, nullopt for forests.
inline std::optional<std::size_t> girth(const Graph& g) {
	constexpr auto unseen = std::numeric_limits<std::size_t>::max();
	std::size_t best = unseen;
	std::vector<std::size_t> dist(g.order()), parent(g.order());
	for (vertex root = 0; root < g.order(); ++root) {
		std::fill(dist.begin(), dist.end(), unseen);
		dist[root] = 0;
		parent[root] = root;
		std::deque<vertex> queue{root};
		while (!queue.empty()) {
			vertex u = queue.front();
			queue.pop_front();
			if (2 * dist[u] + 1 >= best)
				break;
			for (vertex w : g.neighbors(u)) {
				if (dist[w] == unseen) {
					dist[w] = dist[u] + 1;
					parent[w] = u;
					queue.push_back(w);
				} else if (parent[u] != w) {
					best = std::min(best, dist[u] + dist[w] + 1);
				}
			}
		}
	}
	if (best == unseen)
		return std::nullopt;
	return best;
}

// 2-colouring of G[within]; the lowest vertex of every component goes to side A.
inline std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g, const VertexSet& within) {
	VertexSet a(g.order()), b(g.order()), seen(g.order());
	for (vertex s : within) {
		if (seen.contains(s))
			continue;
		seen.insert(s);
		a.insert(s);
		std::deque<vertex> queue{s};
		while (!queue.empty()) {
			vertex u = queue.front();
			queue.pop_front();
			bool u_in_a = a.contains(u);
			for (vertex w : g.neighbors(u)) {
				if (!within.contains(w))
					continue;
				if (!seen.contains(w)) {
					seen.insert(w);
					(u_in_a ? b : a).insert(w);
					queue.push_back(w);
				} else if (a.contains(w) == u_in_a) {
					return std::nullopt;
				}
			}
		}
	}
	return std::pair{a, b};
}

inline std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
	return bipartition(g, g.vertices());
}

inline bool is_bipartite(const Graph& g, const VertexSet& within) { return bipartition(g, within).has_value(); }

inline std::optional<std::array<vertex, 3>> find_triangle(const Graph& g) {
	for (auto [u, v] : g.edges()) {
		auto common = g.neighbors(u) & g.neighbors(v);
		for (vertex w : common)
			if (w > v)
				return std::array{u, v, w};
	}
	return std::nullopt;
}

struct SplitPartition {
	VertexSet clique;
	VertexSet independent;
};

// Hammer-Simeone degree-sequence test, then vertices of the independent side
// that see the whole clique are moved over so the clique side is maximum.
inline std::optional<SplitPartition> split_partition(const Graph& g) {
	const std::size_t n = g.order();
	std::vector<vertex> order(n);
	std::iota(order.begin(), order.end(), vertex{0});
	std::stable_sort(order.begin(), order.end(), [&](vertex a, vertex b) { return g.degree(a) > g.degree(b); });
	std::size_t m = 0;
	for (std::size_t i = 0; i < n; ++i)
		if (g.degree(order[i]) + 1 >= i + 1)
			m = i + 1;
	std::size_t top = 0, rest = 0;
	for (std::size_t i = 0; i < n; ++i)
		(i < m ? top : rest) += g.degree(order[i]);
	if (top != m * (m - (m > 0 ? 1 : 0)) + rest)
		return std::nullopt;

	SplitPartition p{VertexSet(n), VertexSet(n)};
	for (std::size_t i = 0; i < n; ++i)
		(i < m ? p.clique : p.independent).insert(order[i]);
	if (!is_clique(g, p.clique) || !is_independent(g, p.independent))
		return std::nullopt;
	for (bool moved = true; moved;) {
		moved = false;
		for (vertex w : p.independent)
			if (p.clique.is_subset_of(g.neighbors(w))) {
				p.independent.erase(w);
				p.clique.insert(w);
				moved = true;
				break;
			}
	}
	return p;
}

namespace detail {

// Chordless cycle v, u, ..., w of length >= 4, or empty if the graph is chordal.
inline std::vector<vertex> chordless_cycle(const Graph& g) {
	const std::size_t n = g.order();
	for (vertex v = 0; v < n; ++v) {
		auto nb = g.neighbors(v).to_vector();
		for (std::size_t i = 0; i < nb.size(); ++i)
			for (std::size_t j = i + 1; j < nb.size(); ++j) {
				vertex u = nb[i], w = nb[j];
				if (g.adjacent(u, w))
					continue;
				auto allowed = g.closed_neighbors(v).complement();
				allowed.insert(u);
				allowed.insert(w);
				std::vector<vertex> prev(n, n);
				prev[u] = u;
				std::deque<vertex> queue{u};
				while (!queue.empty() && prev[w] == n) {
					vertex x = queue.front();
					queue.pop_front();
					for (vertex y : g.neighbors(x))
						if (allowed.contains(y) && prev[y] == n) {
							prev[y] = x;
							queue.push_back(y);
						}
				}
				if (prev[w] == n)
					continue;
				std::vector<vertex> path;
				for (vertex x = w; x != u; x = prev[x])
					path.push_back(x);
				path.push_back(u);
				std::reverse(path.begin(), path.end());
				std::vector<vertex> cycle{v};
				cycle.insert(cycle.end(), path.begin(), path.end());
				return cycle;
			}
	}
	return {};
}

} // namespace detail

// omega(G) for chordal G: 1 + the largest set of earlier-visited neighbours in a
// maximum cardinality search (the reverse visit order is a perfect elimination ordering).
inline std::size_t clique_number_chordal(const Graph& g) {
	const std::size_t n = g.order();
	if (n == 0)
		return 0;
	std::vector<std::size_t> weight(n, 0);
	VertexSet visited(n);
	std::size_t best = 0;
	for (std::size_t step = 0; step < n; ++step) {
		vertex pick = n;
		for (vertex v = 0; v < n; ++v)
			if (!visited.contains(v) && (pick == n || weight[v] > weight[pick]))
				pick = v;
		auto earlier = g.neighbors(pick) & visited;
		if (!is_clique(g, earlier))
			throw not_chordal_error(detail::chordless_cycle(g));
		best = std::max(best, earlier.size() + 1);
		visited.insert(pick);
		for (vertex w : g.neighbors(pick))
			if (!visited.contains(w))
				++weight[w];
	}
	return best;
}

} // namespace cdcol
