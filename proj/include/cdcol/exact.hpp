#pragma once

#include <bit>
#include <functional>
#include <vector>

#include "coefficient_table.hpp"
#include "coloring.hpp"
#include "structure.hpp"

namespace cdcol {

inline constexpr std::size_t default_exact_cap = 26;
inline constexpr std::size_t bruteforce_cap = 9;

struct ExactOptions {
	std::size_t cap = default_exact_cap;
	StarBackend backend = StarBackend::automatic;
	Parallelism parallelism{};
};

struct ChromaticResult {
	std::size_t q = 0;
	CdColoring witness;
};

namespace detail {

inline std::vector<mask_t> adjacency_masks(const Graph& g) {
	std::vector<mask_t> adj(g.order(), 0);
	for (auto [u, v] : g.edges()) {
		adj[u] |= mask_t{1} << v;
		adj[v] |= mask_t{1} << u;
	}
	return adj;
}

// Calls f(mask) for every nonempty independent subset of `candidates`.
template <class F>
void for_each_independent_subset(const std::vector<mask_t>& adj, mask_t chosen, mask_t candidates, F& f) {
	while (candidates) {
		mask_t v = static_cast<mask_t>(std::countr_zero(candidates));
		candidates &= candidates - 1;
		mask_t next = chosen | (mask_t{1} << v);
		f(next);
		for_each_independent_subset(adj, next, candidates & ~adj[v], f);
	}
}

// Ascending enumeration of the submasks of w: 0 is skipped.
inline mask_t next_submask(mask_t s, mask_t w) { return (s - w) & w; }

template <class Solve>
ChromaticResult per_component(const Graph& g, Solve&& solve) {
	ChromaticResult out;
	std::vector<std::pair<CdColoring, std::vector<vertex>>> parts;
	for (const auto& comp : connected_components(g)) {
		auto sub = induced(g, comp);
		auto r = solve(sub.graph);
		out.q += r.q;
		parts.emplace_back(std::move(r.witness), std::move(sub.to_parent));
	}
	out.witness = merge_colorings(g.order(), parts);
	return out;
}

inline CdColoring coloring_from_masks(const Graph& g, const std::vector<mask_t>& classes) {
	std::vector<VertexSet> sets;
	std::vector<vertex> doms;
	for (mask_t m : classes) {
		auto s = VertexSet::from_mask(g.order(), m);
		doms.push_back(*lowest_dominator(g, s));
		sets.push_back(std::move(s));
	}
	return CdColoring::from_classes(g.order(), sets, doms);
}

} // namespace detail

// All possible colour classes: nonempty independent X with X ⊆ N[y] for some y.
inline CoefficientTable build_color_class_family(const Graph& g, std::size_t cap = default_exact_cap) {
	if (g.order() > cap || g.order() > max_table_universe)
		throw capacity_error("exact solver handles at most " + std::to_string(cap) + " vertices, graph has " +
		                     std::to_string(g.order()));
	CoefficientTable family(static_cast<unsigned>(g.order()));
	auto adj = detail::adjacency_masks(g);
	auto put = [&](mask_t m) { family.set(m); };
	for (vertex y = 0; y < g.order(); ++y) {
		family.set(mask_t{1} << y);
		detail::for_each_independent_subset(adj, 0, adj[y], put);
	}
	return family;
}

// chi_cd(G) as the least ell with V(G) in p^ell, p the colour-class family;
// solved per connected component and summed.
inline ChromaticResult cd_chromatic_exact(const Graph& g, const ExactOptions& opt = {}) {
	if (g.order() > opt.cap)
		throw capacity_error("exact solver handles at most " + std::to_string(opt.cap) + " vertices, graph has " +
		                     std::to_string(g.order()));
	return detail::per_component(g, [&](const Graph& comp) {
		auto family = build_color_class_family(comp, opt.cap);
		const mask_t full = family.full_mask();
		std::vector<CoefficientTable> powers{family};
		StarPowers engine(family, opt.backend, opt.parallelism);
		while (!powers.back().test(full)) {
			if (powers.size() >= comp.order())
				throw error("internal: full vertex set unreachable");
			powers.push_back(engine.next());
		}
		// Peel the smallest family member S with W \ S in the next-lower power.
		std::vector<mask_t> classes;
		mask_t w = full;
		for (std::size_t level = powers.size(); level >= 2; --level) {
			const auto& lower = powers[level - 2];
			for (mask_t s = detail::next_submask(0, w); s != 0; s = detail::next_submask(s, w))
				if (family.test(s) && lower.test(w ^ s)) {
					classes.push_back(s);
					w ^= s;
					break;
				}
		}
		classes.push_back(w);
		return ChromaticResult{powers.size(), detail::coloring_from_masks(comp, classes)};
	});
}

// Independent oracle: search over set partitions, rejecting blocks that stop
// being independent or dominated as soon as they are formed.
inline ChromaticResult cd_chromatic_bruteforce(const Graph& g) {
	if (g.order() > bruteforce_cap)
		throw capacity_error("brute-force solver handles at most " + std::to_string(bruteforce_cap) +
		                     " vertices, graph has " + std::to_string(g.order()));
	return detail::per_component(g, [](const Graph& comp) {
		const std::size_t n = comp.order();
		auto adj = detail::adjacency_masks(comp);
		std::vector<mask_t> closed(n);
		for (vertex v = 0; v < n; ++v)
			closed[v] = adj[v] | (mask_t{1} << v);
		auto dominated = [&](mask_t m) {
			for (vertex y = 0; y < n; ++y)
				if ((m & ~closed[y]) == 0)
					return true;
			return false;
		};
		std::vector<mask_t> blocks, best;
		for (vertex v = 0; v < n; ++v)
			best.push_back(mask_t{1} << v);
		std::function<void(vertex)> assign = [&](vertex v) {
			if (blocks.size() >= best.size())
				return;
			if (v == n) {
				best = blocks;
				return;
			}
			const mask_t bit = mask_t{1} << v;
			for (std::size_t i = 0; i < blocks.size(); ++i)
				if (!(adj[v] & blocks[i]) && dominated(blocks[i] | bit)) {
					blocks[i] |= bit;
					assign(v + 1);
					blocks[i] &= ~bit;
				}
			blocks.push_back(bit);
			assign(v + 1);
			blocks.pop_back();
		};
		assign(0);
		return ChromaticResult{best.size(), detail::coloring_from_masks(comp, best)};
	});
}

} // namespace cdcol
