#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "exact.hpp"
#include "fpt.hpp"
#include "parallel.hpp"
#include "recog3.hpp"

namespace cdcol {

enum class Pattern { isolated_vertex, type0, type1, type2, type3, type4, type5 };

inline std::string pattern_name(Pattern p) {
	switch (p) {
	case Pattern::isolated_vertex: return "isolated";
	case Pattern::type0: return "type0";
	case Pattern::type1: return "type1";
	case Pattern::type2: return "type2";
	case Pattern::type3: return "type3";
	case Pattern::type4: return "type4";
	case Pattern::type5: return "type5";
	}
	return "?";
}

// One component of G - deleted. Dominators, parts and the component are in
// the input graph's indices; the witness colouring is local to the component.
struct RemainderPart {
	Pattern pattern = Pattern::type0;
	VertexSet component;
	TypeWitness witness;
};

struct DeletionSolution {
	VertexSet deleted;
	std::vector<RemainderPart> remainder_plan;
	std::vector<vertex> kept;  // vertices of G - deleted, ascending
	CdColoring coloring;       // on induced(G, kept), indexed like `kept`
};

namespace detail {

struct DeletionPlan {
	VertexSet deleted;
	int type = 0;
	std::vector<vertex> dominators;
};

inline Pattern pattern_of(int type) { return static_cast<Pattern>(type + 1); }

// Describes G - deleted component by component, trying the hinted type and
// dominators first; the recognizer covers everything else.
inline std::optional<DeletionSolution> certify(const Graph& g, const DeletionPlan& plan, std::size_t q) {
	DeletionSolution out{plan.deleted, {}, {}, {}};
	auto rest = remove_vertices(g, plan.deleted);
	out.kept = rest.to_parent;
	std::vector<std::pair<CdColoring, std::vector<vertex>>> parts;
	std::size_t total = 0;
	for (const auto& comp : connected_components(rest.graph)) {
		auto sub = induced(rest.graph, comp);
		std::vector<vertex> to_g;
		for (vertex v : sub.to_parent)
			to_g.push_back(rest.to_parent[v]);
		std::optional<TypeWitness> w;
		Pattern pat = Pattern::type0;
		if (comp.size() == 1) {
			w = witness_for(sub.graph, 0, {});
			pat = Pattern::isolated_vertex;
		} else {
			std::vector<vertex> local;
			for (vertex d : plan.dominators)
				for (vertex i = 0; i < to_g.size(); ++i)
					if (to_g[i] == d)
						local.push_back(i);
			if (local.size() == plan.dominators.size() && !plan.dominators.empty())
				w = witness_for(sub.graph, plan.type, local);
			if (!w) {
				auto r = cd_recognize_upto3(sub.graph);
				if (!r)
					return std::nullopt;
				w = std::move(r->components.front().witness);
			}
			pat = pattern_of(w->type_id);
		}
		total += w->coloring.num_colors();
		parts.emplace_back(w->coloring, sub.to_parent);
		for (auto& d : w->dominators)
			d = to_g[d];
		for (auto& [name, s] : w->parts) {
			VertexSet lifted(g.order());
			for (vertex v : s)
				lifted.insert(to_g[v]);
			s = lifted;
		}
		out.remainder_plan.push_back({pat, VertexSet::from(g.order(), to_g), std::move(*w)});
	}
	out.coloring = merge_colorings(rest.graph.order(), parts);
	if (total > q || !validate_cd_coloring(rest.graph, out.coloring))
		return std::nullopt;
	return out;
}

// Vertex cover of G[part] within budget, in g's indices.
inline std::optional<VertexSet> cover_within(const Graph& g, const VertexSet& part, std::size_t budget) {
	auto sub = induced(g, part);
	auto vc = vertex_cover(sub.graph, budget);
	if (!vc)
		return std::nullopt;
	return sub.lift(*vc, g.order());
}

inline std::optional<DeletionPlan> type1_at(const Graph& g, vertex x, vertex y, std::size_t k) {
	auto xs = g.neighbors(x) - g.closed_neighbors(y);
	auto ys = g.neighbors(y) - g.closed_neighbors(x);
	auto forced = g.vertices() - xs - ys;
	forced.erase(x);
	forced.erase(y);
	if (forced.size() > k)
		return std::nullopt;
	auto budget = k - forced.size();
	auto s1 = cover_within(g, xs, budget);
	if (!s1)
		return std::nullopt;
	auto s2 = cover_within(g, ys, budget - s1->size());
	if (!s2)
		return std::nullopt;
	return DeletionPlan{forced | *s1 | *s2, 1, {x, y}};
}

inline std::optional<DeletionPlan> type1_plan(const Graph& g, std::size_t k, unsigned threads) {
	auto edges = g.edges();
	auto hit = first_success(edges.size(), threads,
	                         [&](std::size_t i) { return type1_at(g, edges[i].first, edges[i].second, k); });
	if (!hit)
		return std::nullopt;
	return hit->second;
}

// Type 1 on G - v around the edge (x, y), keeping some neighbour of v so the
// remainder stays connected.
inline std::optional<DeletionPlan> type2_at(const Graph& g, vertex v, vertex x, vertex y, std::size_t k) {
	auto xs = g.neighbors(x) - g.closed_neighbors(y);
	auto ys = g.neighbors(y) - g.closed_neighbors(x);
	xs.erase(v);
	ys.erase(v);
	auto forced = g.vertices() - xs - ys;
	forced.erase(x);
	forced.erase(y);
	forced.erase(v);
	if (forced.size() > k)
		return std::nullopt;
	auto budget = k - forced.size();
	auto covers = [&](const VertexSet& keep, const VertexSet& gone) -> std::optional<VertexSet> {
		if (gone.size() > budget)
			return std::nullopt;
		auto s1 = cover_within(g, xs - keep - gone, budget - gone.size());
		if (!s1)
			return std::nullopt;
		auto s2 = cover_within(g, ys - keep - gone, budget - gone.size() - s1->size());
		if (!s2)
			return std::nullopt;
		return gone | *s1 | *s2;
	};
	std::optional<VertexSet> best;
	if (g.adjacent(v, x) || g.adjacent(v, y)) {
		best = covers(g.empty_set(), g.empty_set());
	} else {
		for (vertex w : g.neighbors(v) & (xs | ys)) {
			const auto& part = xs.contains(w) ? xs : ys;
			auto r = covers(VertexSet::of(g.order(), {w}), g.neighbors(w) & part);
			if (r && (!best || r->size() < best->size()))
				best = r;
		}
	}
	if (!best)
		return std::nullopt;
	return DeletionPlan{forced | *best, 2, {v}};
}

inline std::optional<DeletionPlan> type2_plan(const Graph& g, std::size_t k, unsigned threads) {
	auto edges = g.edges();
	auto hit = first_success(g.order(), threads, [&](std::size_t v) -> std::optional<DeletionPlan> {
		for (auto [x, y] : edges)
			if (x != v && y != v)
				if (auto r = type2_at(g, v, x, y, k))
					return r;
		return std::nullopt;
	});
	if (!hit)
		return std::nullopt;
	return hit->second;
}

inline std::optional<DeletionPlan> type3_at(const Graph& g, vertex x, vertex y, std::size_t k) {
	const auto& xs = g.neighbors(x);
	auto ys = g.neighbors(y) - g.closed_neighbors(x);
	auto forced = g.vertices() - xs - ys;
	forced.erase(x);
	if (forced.size() > k)
		return std::nullopt;
	auto budget = k - forced.size();
	auto s1 = cover_within(g, ys, budget);
	if (!s1)
		return std::nullopt;
	budget -= s1->size();
	auto sub = induced(g, xs);
	vertex ly = 0;
	while (sub.to_parent[ly] != y)
		++ly;
	auto s2 = oct_excluding(sub.graph, ly, budget);
	if (!s2)
		return std::nullopt;
	if (!has_edge_within(sub.graph, sub.graph.vertices() - *s2)) {
		// Keep some edge (a,b) of G[N(x)] as well; smallest solution wins.
		std::optional<VertexSet> best;
		for (auto [a, b] : sub.graph.edges()) {
			auto r = detail::oct_solve(sub.graph, VertexSet::of(sub.graph.order(), {a, b, ly}),
			                           best ? best->size() - 1 : budget);
			if (r && (!best || r->size() < best->size()))
				best = r;
			if (best && best->empty())
				break;
		}
		if (!best)
			return std::nullopt;
		s2 = best;
	}
	return DeletionPlan{forced | *s1 | sub.lift(*s2, g.order()), 3, {x, y}};
}

inline std::optional<DeletionPlan> type4_at(const Graph& g, vertex x, vertex y, vertex z, std::size_t k) {
	auto xs = g.neighbors(x) - g.closed_neighbors(y);
	auto ys = g.neighbors(y) - g.closed_neighbors(z);
	auto zs = g.neighbors(z) - g.closed_neighbors(x);
	auto forced = g.vertices() - xs - ys - zs;
	forced.erase(x);
	forced.erase(y);
	forced.erase(z);
	if (forced.size() > k)
		return std::nullopt;
	auto budget = k - forced.size();
	auto deleted = forced;
	for (const auto* part : {&xs, &ys, &zs}) {
		auto s = cover_within(g, *part, budget);
		if (!s)
			return std::nullopt;
		budget -= s->size();
		deleted |= *s;
	}
	return DeletionPlan{deleted, 4, {x, y, z}};
}

// z goes to y's class side; the ordered enumeration covers the mirror case.
inline std::optional<DeletionPlan> type5_at(const Graph& g, vertex x, vertex y, vertex z, std::size_t k) {
	const auto& nx = g.neighbors(x);
	const auto& ny = g.neighbors(y);
	const auto& nz = g.neighbors(z);
	auto others = g.vertices();
	others.erase(x);
	others.erase(y);
	others.erase(z);
	auto zs = (nz - nx - ny) & others;
	auto clash = ((ny & nz) - nx) & others;
	auto only_y = (ny - nx - nz) & others;
	auto to_x = (nx - ny) & others;
	auto xyz = nx & ny & nz & others;
	auto both = (nx & ny) - nz;
	both &= others;
	auto forced = (others - nx - ny - nz) | clash;
	if (forced.size() > k)
		return std::nullopt;
	auto budget = k - forced.size();
	auto s1 = cover_within(g, zs, budget);
	if (!s1)
		return std::nullopt;
	budget -= s1->size();
	auto bset = only_y | to_x | xyz | both;
	bset.insert(z);
	auto sub = induced(g, bset);
	VertexSet p(sub.graph.order()), q(sub.graph.order());
	vertex lz = 0;
	for (vertex i = 0; i < sub.to_parent.size(); ++i) {
		vertex u = sub.to_parent[i];
		if (u == z) {
			lz = i;
			p.insert(i);
		} else if (only_y.contains(u)) {
			p.insert(i);
		} else if (to_x.contains(u) || xyz.contains(u)) {
			q.insert(i);
		}
	}
	auto s2 = oct_with_forced_sides(sub.graph, p, q, lz, budget);
	if (!s2)
		return std::nullopt;
	return DeletionPlan{forced | *s1 | sub.lift(s2->oct, g.order()), 5, {x, y, z}};
}

template <class Tuple, class Solve>
std::optional<DeletionPlan> scan(const std::vector<Tuple>& tuples, unsigned threads, Solve&& solve) {
	auto hit = first_success(tuples.size(), threads, [&](std::size_t i) { return solve(tuples[i]); });
	if (!hit)
		return std::nullopt;
	return hit->second;
}

inline std::vector<std::pair<vertex, vertex>> ordered_edges(const Graph& g) {
	std::vector<std::pair<vertex, vertex>> out;
	for (vertex x = 0; x < g.order(); ++x)
		for (vertex y : g.neighbors(x))
			out.emplace_back(x, y);
	return out;
}

inline std::vector<std::array<vertex, 3>> ordered_triangles(const Graph& g) {
	std::vector<std::array<vertex, 3>> out;
	for (vertex x = 0; x < g.order(); ++x)
		for (vertex y : g.neighbors(x))
			for (vertex z : g.neighbors(x) & g.neighbors(y))
				out.push_back({x, y, z});
	return out;
}

inline std::vector<std::array<vertex, 3>> ordered_paths(const Graph& g) {
	std::vector<std::array<vertex, 3>> out;
	for (vertex x = 0; x < g.order(); ++x)
		for (vertex y = 0; y < g.order(); ++y)
			if (x != y && !g.adjacent(x, y))
				for (vertex z : g.neighbors(x) & g.neighbors(y))
					out.push_back({x, y, z});
	return out;
}

inline std::optional<DeletionPlan> type3_plan(const Graph& g, std::size_t k, unsigned threads) {
	return scan(ordered_edges(g), threads, [&](auto e) { return type3_at(g, e.first, e.second, k); });
}

inline std::optional<DeletionPlan> type4_plan(const Graph& g, std::size_t k, unsigned threads) {
	return scan(ordered_triangles(g), threads, [&](auto t) { return type4_at(g, t[0], t[1], t[2], k); });
}

inline std::optional<DeletionPlan> type5_plan(const Graph& g, std::size_t k, unsigned threads) {
	return scan(ordered_paths(g), threads, [&](auto t) { return type5_at(g, t[0], t[1], t[2], k); });
}

// An isolated vertex u next to a Type 1 remainder: N(u) is deleted.
inline std::optional<DeletionPlan> isolated_type1_plan(const Graph& g, std::size_t k, unsigned threads) {
	std::vector<vertex> us = g.vertices().to_vector();
	return scan(us, threads, [&](vertex u) -> std::optional<DeletionPlan> {
		if (g.degree(u) > k)
			return std::nullopt;
		auto sub = remove_vertices(g, g.closed_neighbors(u));
		auto inner = type1_plan(sub.graph, k - g.degree(u), 1);
		if (!inner)
			return std::nullopt;
		return DeletionPlan{sub.lift(inner->deleted, g.order()) | g.neighbors(u), 1, inner->dominators.empty()
		                        ? std::vector<vertex>{}
		                        : sub.lift(inner->dominators)};
	});
}

// Keep the lowest `keep` vertices when everything else fits in the budget.
inline std::optional<DeletionPlan> small_plan(const Graph& g, std::size_t k, std::size_t keep) {
	const std::size_t n = g.order();
	if (n > k + keep)
		return std::nullopt;
	VertexSet deleted(n);
	for (vertex v = std::min(n, keep); v < n; ++v)
		deleted.insert(v);
	return DeletionPlan{deleted, 0, {}};
}

inline std::optional<DeletionSolution> finish(const Graph& g, std::optional<DeletionPlan> plan, std::size_t q) {
	if (!plan)
		return std::nullopt;
	auto out = certify(g, *plan, q);
	if (!out)
		throw error("internal: deletion plan did not certify");
	return out;
}

} // namespace detail

inline std::optional<DeletionSolution> delete_to_type1(const Graph& g, std::size_t k, Parallelism par = {}) {
	return detail::finish(g, detail::type1_plan(g, k, par.threads), 2);
}

inline std::optional<DeletionSolution> delete_to_type2(const Graph& g, std::size_t k, Parallelism par = {}) {
	return detail::finish(g, detail::type2_plan(g, k, par.threads), 3);
}

inline std::optional<DeletionSolution> delete_to_type3(const Graph& g, std::size_t k, Parallelism par = {}) {
	return detail::finish(g, detail::type3_plan(g, k, par.threads), 3);
}

inline std::optional<DeletionSolution> delete_to_type4(const Graph& g, std::size_t k, Parallelism par = {}) {
	return detail::finish(g, detail::type4_plan(g, k, par.threads), 3);
}

inline std::optional<DeletionSolution> delete_to_type5(const Graph& g, std::size_t k, Parallelism par = {}) {
	return detail::finish(g, detail::type5_plan(g, k, par.threads), 3);
}

// Is there S, |S| <= k, with chi_cd(G - S) <= 3?
inline std::optional<DeletionSolution> partization3(const Graph& g, std::size_t k, Parallelism par = {}) {
	const unsigned t = par.threads;
	std::optional<detail::DeletionPlan> plan;
	if (!(plan = detail::type1_plan(g, k, t)) && !(plan = detail::type2_plan(g, k, t)) &&
	    !(plan = detail::type3_plan(g, k, t)) && !(plan = detail::type4_plan(g, k, t)) &&
	    !(plan = detail::type5_plan(g, k, t)) && !(plan = detail::isolated_type1_plan(g, k, t)))
		plan = detail::small_plan(g, k, 3);
	return detail::finish(g, plan, 3);
}

// Is there S, |S| <= k, with chi_cd(G - S) <= 2?
inline std::optional<DeletionSolution> partization2(const Graph& g, std::size_t k, Parallelism par = {}) {
	auto plan = detail::type1_plan(g, k, par.threads);
	if (!plan)
		plan = detail::small_plan(g, k, 2);
	return detail::finish(g, plan, 2);
}

inline constexpr std::size_t partization_bruteforce_max_n = 9;

// Exhaustive over subsets by increasing size (lexicographic within a size).
inline std::optional<DeletionSolution> partization_bruteforce(const Graph& g, std::size_t k, std::size_t q) {
	const std::size_t n = g.order();
	if (n > partization_bruteforce_max_n)
		throw capacity_error("brute-force partization handles at most " +
		                     std::to_string(partization_bruteforce_max_n) + " vertices, graph has " +
		                     std::to_string(n));
	for (std::size_t size = 0; size <= std::min(k, n); ++size) {
		std::vector<vertex> pick(size);
		for (std::size_t i = 0; i < size; ++i)
			pick[i] = i;
		while (true) {
			auto gone = VertexSet::from(n, pick);
			auto rest = remove_vertices(g, gone);
			auto chi = cd_chromatic_bruteforce(rest.graph);
			if (chi.q <= q) {
				DeletionSolution out{gone, {}, rest.to_parent, chi.witness};
				if (q <= 3)
					if (auto described = detail::certify(g, detail::DeletionPlan{gone, 0, {}}, q))
						out.remainder_plan = std::move(described->remainder_plan);
				return out;
			}
			std::size_t i = size;
			while (i > 0 && pick[i - 1] == n - size + i - 1)
				--i;
			if (i == 0)
				break;
			++pick[i - 1];
			for (std::size_t j = i; j < size; ++j)
				pick[j] = pick[j - 1] + 1;
		}
	}
	return std::nullopt;
}

} // namespace cdcol
