#pragma once

#include <cstdint>
#include <deque>
#include <random>
#include <vector>

#include "graph.hpp"

namespace cdcol {

// Engine output is specified by the standard; distributions are not, so the
// derived draws below are written out to keep instances identical everywhere.
class Rng {
public:
	explicit Rng(std::uint64_t seed) : engine_(seed) {}

	double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
	std::size_t below(std::size_t bound) { return bound == 0 ? 0 : static_cast<std::size_t>(engine_() % bound); }
	bool chance(double p) { return uniform() < p; }

private:
	std::mt19937_64 engine_;
};

inline Graph random_gnp(std::size_t n, double p, Rng& rng) {
	Graph g(n);
	for (vertex u = 0; u < n; ++u)
		for (vertex v = u + 1; v < n; ++v)
			if (rng.chance(p))
				g.add_edge(u, v);
	return g;
}

namespace detail {

inline std::size_t distance(const Graph& g, vertex s, vertex t, std::size_t limit) {
	std::vector<std::size_t> dist(g.order(), limit + 1);
	std::deque<vertex> queue{s};
	dist[s] = 0;
	while (!queue.empty()) {
		auto u = queue.front();
		queue.pop_front();
		if (u == t)
			return dist[u];
		if (dist[u] == limit)
			continue;
		for (vertex w : g.neighbors(u))
			if (dist[w] > limit) {
				dist[w] = dist[u] + 1;
				queue.push_back(w);
			}
	}
	return limit + 1;
}

} // namespace detail

// Connected graph of girth >= 5: a random tree that favours a few hubs, then
// `extra` attempted edges, each kept only between vertices at distance >= 4.
inline Graph random_girth5(std::size_t n, std::size_t extra, Rng& rng, std::size_t hubs = 2) {
	Graph g(n);
	for (vertex v = 1; v < n; ++v) {
		std::size_t bound = std::min<std::size_t>(v, hubs);
		vertex parent = rng.chance(0.5) && bound > 0 ? rng.below(bound) : rng.below(v);
		g.add_edge(parent, v);
	}
	for (std::size_t i = 0; i < extra && n >= 5; ++i) {
		vertex a = rng.below(n), b = rng.below(n);
		if (a != b && !g.adjacent(a, b) && detail::distance(g, a, b, 3) >= 4)
			g.add_edge(a, b);
	}
	return g;
}

// Connected split graph: clique of 1..n vertices, every other vertex adjacent
// to a nonempty random part of the clique.
inline Graph random_split(std::size_t n, Rng& rng) {
	Graph g(n);
	if (n == 0)
		return g;
	std::size_t c = 1 + rng.below(n);
	for (vertex a = 0; a < c; ++a)
		for (vertex b = a + 1; b < c; ++b)
			g.add_edge(a, b);
	for (vertex v = c; v < n; ++v) {
		bool any = false;
		for (vertex a = 0; a < c; ++a)
			if (rng.chance(0.5)) {
				g.add_edge(v, a);
				any = true;
			}
		if (!any)
			g.add_edge(v, rng.below(c));
	}
	return g;
}

// m nonempty subsets of {0..n-1}, each element kept with probability p.
inline std::vector<std::vector<std::size_t>> random_set_family(std::size_t n, std::size_t m, double p, Rng& rng) {
	std::vector<std::vector<std::size_t>> sets(m);
	for (auto& s : sets) {
		for (std::size_t x = 0; x < n; ++x)
			if (rng.chance(p))
				s.push_back(x);
		if (s.empty() && n > 0)
			s.push_back(rng.below(n));
	}
	return sets;
}

} // namespace cdcol
