#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coloring.hpp"
#include "structure.hpp"

namespace cdcol {

inline std::optional<std::pair<vertex, vertex>> has_dominating_edge(const Graph& g) {
	for (auto [u, v] : g.edges())
		if ((g.neighbors(u) | g.neighbors(v)) == g.vertices())
			return std::pair{u, v};
	return std::nullopt;
}

struct TypeWitness {
	int type_id = 0;
	std::vector<vertex> dominators;
	std::vector<std::pair<std::string, VertexSet>> parts;
	CdColoring coloring;

	const VertexSet* part(const std::string& name) const {
		for (const auto& [k, s] : parts)
			if (k == name)
				return &s;
		return nullptr;
	}
};

namespace detail {

inline TypeWitness make_witness(const Graph& g, int type, std::vector<vertex> doms,
                                std::vector<std::pair<std::string, VertexSet>> parts,
                                const std::vector<std::pair<VertexSet, vertex>>& classes) {
	std::vector<VertexSet> sets;
	std::vector<vertex> by;
	for (const auto& [cls, d] : classes)
		if (!cls.empty()) {
			sets.push_back(cls);
			by.push_back(d);
		}
	return TypeWitness{type, std::move(doms), std::move(parts), CdColoring::from_classes(g.order(), sets, by)};
}

inline std::optional<TypeWitness> type0(const Graph& g) {
	if (g.order() > 3 || !is_connected(g))
		return std::nullopt;
	std::vector<std::pair<VertexSet, vertex>> classes;
	for (vertex v = 0; v < g.order(); ++v)
		classes.emplace_back(VertexSet::of(g.order(), {v}), v);
	return make_witness(g, 0, g.vertices().to_vector(), {}, classes);
}

inline std::optional<TypeWitness> type1(const Graph& g, vertex x, vertex y) {
	if (!g.adjacent(x, y))
		return std::nullopt;
	const auto& nx = g.neighbors(x);
	const auto& ny = g.neighbors(y);
	if (nx.intersects(ny) || (nx | ny) != g.vertices() || !is_independent(g, nx) || !is_independent(g, ny))
		return std::nullopt;
	return make_witness(g, 1, {x, y}, {{"X", nx}, {"Y", ny}}, {{nx, x}, {ny, y}});
}

// Bipartite with dominating edge, searched lexicographically.
inline std::optional<TypeWitness> type1_any(const Graph& g) {
	for (auto [x, y] : g.edges())
		if (auto w = type1(g, x, y))
			return w;
	return std::nullopt;
}

inline std::optional<TypeWitness> type2(const Graph& g, vertex v) {
	auto sub = remove_vertices(g, VertexSet::of(g.order(), {v}));
	auto inner = type1_any(sub.graph);
	if (!inner)
		return std::nullopt;
	auto x = sub.to_parent[inner->dominators[0]];
	auto y = sub.to_parent[inner->dominators[1]];
	auto nx = sub.lift(inner->parts[0].second, g.order());
	auto ny = sub.lift(inner->parts[1].second, g.order());
	return make_witness(g, 2, {v}, {{"X", nx}, {"Y", ny}},
	                    {{nx, x}, {ny, y}, {VertexSet::of(g.order(), {v}), v}});
}

inline std::optional<TypeWitness> type3(const Graph& g, vertex x, vertex y) {
	if (!g.adjacent(x, y))
		return std::nullopt;
	const auto& nx = g.neighbors(x);
	auto far = g.vertices() - g.closed_neighbors(x);
	if (!far.is_subset_of(g.neighbors(y)) || !is_independent(g, far) || !has_edge_within(g, nx))
		return std::nullopt;
	auto sides = bipartition(g, nx);
	if (!sides)
		return std::nullopt;
	auto xs = nx;
	xs.erase(y);
	auto first = far;
	first.insert(x);
	return make_witness(g, 3, {x, y}, {{"X", xs}, {"Y", far}},
	                    {{first, y}, {sides->first, x}, {sides->second, x}});
}

inline std::optional<TypeWitness> type4(const Graph& g, vertex x, vertex y, vertex z) {
	if (!g.adjacent(x, y) || !g.adjacent(y, z) || !g.adjacent(x, z))
		return std::nullopt;
	auto xs = g.neighbors(x) - g.closed_neighbors(y);
	auto ys = g.neighbors(y) - g.closed_neighbors(z);
	auto zs = g.neighbors(z) - g.closed_neighbors(x);
	auto all = xs | ys | zs;
	all.insert(x);
	all.insert(y);
	all.insert(z);
	if (all != g.vertices() || !is_independent(g, xs) || !is_independent(g, ys) || !is_independent(g, zs))
		return std::nullopt;
	auto cx = xs, cy = ys, cz = zs;
	cx.insert(y);
	cy.insert(z);
	cz.insert(x);
	return make_witness(g, 4, {x, y, z}, {{"X", xs}, {"Y", ys}, {"Z", zs}}, {{cx, x}, {cy, y}, {cz, z}});
}

inline std::optional<TypeWitness> type5(const Graph& g, vertex x, vertex y, vertex z) {
	if (x == y || g.adjacent(x, y) || !g.adjacent(x, z) || !g.adjacent(y, z))
		return std::nullopt;
	const auto& nx = g.neighbors(x);
	const auto& ny = g.neighbors(y);
	auto zs = g.neighbors(z) - nx - ny;
	zs.erase(x);
	zs.erase(y);
	if (!is_independent(g, zs))
		return std::nullopt;
	auto b = g.vertices() - zs;
	b.erase(x);
	b.erase(y);
	if (!b.is_subset_of(nx | ny))
		return std::nullopt;
	// Each component of G[B] has two 2-colourings; keep one with X ⊆ N(x), Y ⊆ N(y).
	VertexSet xs(g.order()), ys(g.order());
	for (const auto& comp : connected_components(g, b)) {
		auto sides = bipartition(g, comp);
		if (!sides)
			return std::nullopt;
		auto& [a, c] = *sides;
		if (a.is_subset_of(nx) && c.is_subset_of(ny)) {
			xs |= a;
			ys |= c;
		} else if (c.is_subset_of(nx) && a.is_subset_of(ny)) {
			xs |= c;
			ys |= a;
		} else {
			return std::nullopt;
		}
	}
	auto cz = zs;
	cz.insert(x);
	cz.insert(y);
	return make_witness(g, 5, {x, y, z}, {{"X", xs}, {"Y", ys}, {"Z", zs}}, {{xs, x}, {ys, y}, {cz, z}});
}

} // namespace detail

// Checks the clauses of one type for a given dominator tuple (edge for 1 and 3,
// single vertex for 2, ordered triple for 4 and 5; ignored for 0).
inline std::optional<TypeWitness> witness_for(const Graph& g, int type, const std::vector<vertex>& d) {
	auto need = [&](std::size_t k) {
		if (d.size() != k)
			throw error("type " + std::to_string(type) + " needs " + std::to_string(k) + " dominators");
		for (vertex v : d)
			if (v >= g.order())
				throw error("dominator out of range");
	};
	switch (type) {
	case 0: return detail::type0(g);
	case 1: need(2); return detail::type1(g, d[0], d[1]);
	case 2: need(1); return detail::type2(g, d[0]);
	case 3: need(2); return detail::type3(g, d[0], d[1]);
	case 4: need(3); return detail::type4(g, d[0], d[1], d[2]);
	case 5: need(3); return detail::type5(g, d[0], d[1], d[2]);
	default: throw error("unknown type " + std::to_string(type));
	}
}

// First dominator tuple (lexicographic) for which g is of type t.
inline std::optional<TypeWitness> recognize_type(const Graph& g, int t) {
	if (!is_connected(g))
		throw precondition_error("graph is not connected");
	const std::size_t n = g.order();
	switch (t) {
	case 0: return detail::type0(g);
	case 1: return detail::type1_any(g);
	case 2:
		for (vertex v = 0; v < n; ++v)
			if (auto w = detail::type2(g, v))
				return w;
		return std::nullopt;
	case 3:
		for (vertex x = 0; x < n; ++x)
			for (vertex y : g.neighbors(x))
				if (auto w = detail::type3(g, x, y))
					return w;
		return std::nullopt;
	case 4:
		for (vertex x = 0; x < n; ++x)
			for (vertex y : g.neighbors(x))
				for (vertex z : g.neighbors(x) & g.neighbors(y))
					if (auto w = detail::type4(g, x, y, z))
						return w;
		return std::nullopt;
	case 5:
		for (vertex x = 0; x < n; ++x)
			for (vertex y = 0; y < n; ++y)
				if (y != x && !g.adjacent(x, y))
					for (vertex z : g.neighbors(x) & g.neighbors(y))
						if (auto w = detail::type5(g, x, y, z))
							return w;
		return std::nullopt;
	default: throw error("unknown type " + std::to_string(t));
	}
}

// Per component: the witness with dominators and parts in the parent's
// indices, and the witness colouring local to induced(g, component).
struct ComponentWitness {
	VertexSet component;
	std::size_t q = 0;
	TypeWitness witness;
};

struct Recognition {
	std::size_t q = 0;
	std::vector<ComponentWitness> components;
	CdColoring coloring;
};

// Smallest q <= threshold (at most 3) with chi_cd(g) <= q, summing over components.
inline std::optional<Recognition> cd_recognize_upto3(const Graph& g, std::size_t threshold = 3) {
	Recognition out;
	std::vector<std::pair<CdColoring, std::vector<vertex>>> parts;
	for (const auto& comp : connected_components(g)) {
		auto sub = induced(g, comp);
		std::optional<TypeWitness> w;
		std::size_t q = 0;
		if (comp.size() == 1) {
			w = detail::type0(sub.graph);
			q = 1;
		} else if ((w = detail::type1_any(sub.graph))) {
			q = 2;
		} else {
			for (int t : {0, 2, 3, 4, 5})
				if ((w = recognize_type(sub.graph, t)))
					break;
			q = 3;
		}
		out.q += q;
		if (!w || out.q > threshold || out.q > 3)
			return std::nullopt;
		parts.emplace_back(w->coloring, sub.to_parent);
		w->dominators = sub.lift(w->dominators);
		for (auto& [name, s] : w->parts)
			s = sub.lift(s, g.order());
		out.components.push_back({comp, q, std::move(*w)});
	}
	out.coloring = merge_colorings(g.order(), parts);
	return out;
}

} // namespace cdcol
