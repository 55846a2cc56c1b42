#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "exact.hpp"
#include "fpt.hpp"

namespace cdcol {

namespace detail {

inline SplitPartition require_split(const Graph& g) {
	auto p = split_partition(g);
	if (!p)
		throw precondition_error("graph is not a split graph (degree-sequence test fails)");
	return *p;
}

// Maximum clique of the non-isolated part of a split graph, ascending.
inline std::vector<vertex> split_max_clique(const Graph& g, const VertexSet& alive) {
	VertexSet busy(g.order());
	for (vertex v : alive)
		if (g.neighbors(v).intersects(alive))
			busy.insert(v);
	if (busy.empty())
		return {};
	auto sub = induced(g, busy);
	return sub.lift(require_split(sub.graph).clique.to_vector());
}

} // namespace detail

// chi_cd = omega on each nontrivial component. Clique c_0 < ... < c_{w-1}: the
// class of c_i is dominated by c_{i+1 mod w}; an independent vertex joins the
// lowest c_i it misses whose successor it sees.
inline ChromaticResult split_cd_coloring(const Graph& g) {
	detail::require_split(g);
	return detail::per_component(g, [](const Graph& comp) {
		if (comp.order() == 1)
			return ChromaticResult{1, CdColoring{{0}, {0}}};
		auto p = detail::require_split(comp);
		auto c = p.clique.to_vector();
		const std::size_t w = c.size();
		std::vector<VertexSet> classes;
		std::vector<vertex> doms;
		for (std::size_t i = 0; i < w; ++i) {
			classes.push_back(VertexSet::of(comp.order(), {c[i]}));
			doms.push_back(c[(i + 1) % w]);
		}
		for (vertex v : p.independent) {
			bool placed = false;
			for (std::size_t i = 0; i < w && !placed; ++i)
				if (!comp.adjacent(v, c[i]) && comp.adjacent(v, c[(i + 1) % w])) {
					classes[i].insert(v);
					placed = true;
				}
			if (!placed)
				throw error("internal: split partition clique is not maximum");
		}
		auto col = CdColoring::from_classes(comp.order(), classes, doms);
		if (!validate_cd_coloring(comp, col))
			throw error("internal: split colouring failed validation");
		return ChromaticResult{w, std::move(col)};
	});
}

namespace detail {

inline std::optional<VertexSet> split_branch(const Graph& g, const VertexSet& alive, std::size_t budget,
                                             std::size_t q) {
	auto clique = split_max_clique(g, alive);
	VertexSet deleted(g.order());
	if (clique.size() > q) {
		if (budget == 0)
			return std::nullopt;
		for (std::size_t i = 0; i <= q; ++i) {
			auto next = alive;
			next.erase(clique[i]);
			if (auto r = split_branch(g, next, budget - 1, q)) {
				r->insert(clique[i]);
				return r;
			}
		}
		return std::nullopt;
	}
	// chi_cd = omega + #isolated here; each isolated deletion lowers it by one.
	std::vector<vertex> lonely;
	for (vertex v : alive)
		if (!g.neighbors(v).intersects(alive))
			lonely.push_back(v);
	std::size_t chi = (clique.empty() ? 0 : clique.size()) + lonely.size();
	if (chi <= q)
		return deleted;
	if (chi - q > budget)
		return std::nullopt;
	for (std::size_t i = 0; i < chi - q; ++i)
		deleted.insert(lonely[i]);
	return deleted;
}

} // namespace detail

// Smallest S, |S| <= k, with chi_cd(G - S) <= q for a split graph G.
inline std::optional<VertexSet> split_partization(const Graph& g, std::size_t k, std::size_t q) {
	detail::require_split(g);
	for (std::size_t b = 0; b <= k; ++b)
		if (auto r = detail::split_branch(g, g.vertices(), b, q))
			return r;
	return std::nullopt;
}

struct GeneratedInstance {
	Graph graph;
	std::size_t k = 0;
	std::size_t q = 0;
	std::vector<std::string> provenance; // per vertex
	std::optional<bool> expected;        // answer of the source instance, when computed
};

inline constexpr std::size_t setcover_bruteforce_max_sets = 20;

// Smallest number of sets covering {0..n-1}, if at most k.
inline std::optional<std::vector<std::size_t>> set_cover_bruteforce(std::size_t n,
                                                                    const std::vector<std::vector<std::size_t>>& sets,
                                                                    std::size_t k) {
	const std::size_t m = sets.size();
	if (m > setcover_bruteforce_max_sets)
		throw capacity_error("brute-force set cover handles at most " +
		                     std::to_string(setcover_bruteforce_max_sets) + " sets");
	std::optional<std::vector<std::size_t>> best;
	for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
		auto size = static_cast<std::size_t>(std::popcount(pick));
		if (size > k || (best && size >= best->size()))
			continue;
		std::vector<bool> hit(n, false);
		std::vector<std::size_t> chosen;
		for (std::size_t j = 0; j < m; ++j)
			if (pick >> j & 1) {
				chosen.push_back(j);
				for (auto x : sets[j])
					hit[x] = true;
			}
		if (std::find(hit.begin(), hit.end(), false) == hit.end())
			best = chosen;
	}
	return best;
}

// Set cover (U = {0..n-1}, F, k) as split-graph partization (G, m-k, k+1):
// a clique of set vertices, element vertices adjacent to the sets missing
// them, a universal vertex and m+2 pendants on it.
inline GeneratedInstance generate_from_setcover(std::size_t n, const std::vector<std::vector<std::size_t>>& sets,
                                                std::size_t k) {
	const std::size_t m = sets.size();
	if (m == 0)
		throw precondition_error("set family is empty");
	if (k > m)
		throw precondition_error("k exceeds the number of sets");
	std::vector<std::vector<bool>> member(m, std::vector<bool>(n, false));
	for (std::size_t j = 0; j < m; ++j)
		for (auto x : sets[j]) {
			if (x >= n)
				throw precondition_error("set element outside the universe");
			member[j][x] = true;
		}
	const std::size_t kp = m - k;
	const std::size_t pendants = k + kp + 2;
	const vertex hub = m + n;
	GeneratedInstance out{Graph(m + n + 1 + pendants), kp, k + 1, {}, std::nullopt};
	for (std::size_t j = 0; j < m; ++j)
		out.provenance.push_back("set " + std::to_string(j + 1));
	for (std::size_t i = 0; i < n; ++i)
		out.provenance.push_back("element " + std::to_string(i + 1));
	out.provenance.push_back("universal");
	for (std::size_t i = 0; i < pendants; ++i)
		out.provenance.push_back("pendant " + std::to_string(i + 1));
	for (std::size_t a = 0; a < m; ++a)
		for (std::size_t b = a + 1; b < m; ++b)
			out.graph.add_edge(a, b);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < m; ++j)
			if (!member[j][i])
				out.graph.add_edge(m + i, j);
	for (vertex v = 0; v < out.graph.order(); ++v)
		if (v != hub)
			out.graph.add_edge(hub, v);
	if (m <= setcover_bruteforce_max_sets)
		out.expected = set_cover_bruteforce(n, sets, k).has_value();
	return out;
}

// G plus a universal vertex carrying k+q_base+2 pendants. (G, k) admits a
// deletion to a q_base-colourable graph iff the result admits one to chi_cd <= q_base+1.
inline GeneratedInstance generate_from_partization(const Graph& g, std::size_t k, std::size_t q_base) {
	if (q_base != 1 && q_base != 2)
		throw precondition_error("q_base must be 1 or 2");
	const std::size_t n = g.order();
	const std::size_t pendants = k + q_base + 2;
	const vertex hub = n;
	GeneratedInstance out{Graph(n + 1 + pendants), k, q_base + 1, {}, std::nullopt};
	for (vertex v = 0; v < n; ++v) {
		out.graph.set_label(v, g.label(v));
		out.provenance.push_back("original " + std::to_string(g.label(v)));
	}
	out.provenance.push_back("universal");
	for (std::size_t i = 0; i < pendants; ++i)
		out.provenance.push_back("pendant " + std::to_string(i + 1));
	std::int64_t next_label = 1;
	for (vertex v = 0; v < n; ++v)
		next_label = std::max(next_label, g.label(v) + 1);
	for (vertex v = n; v < out.graph.order(); ++v)
		out.graph.set_label(v, next_label++);
	for (auto [a, b] : g.edges())
		out.graph.add_edge(a, b);
	for (vertex v = 0; v < out.graph.order(); ++v)
		if (v != hub)
			out.graph.add_edge(hub, v);
	out.expected = q_base == 1 ? vertex_cover(g, k).has_value() : odd_cycle_transversal(g, k).has_value();
	return out;
}

} // namespace cdcol
