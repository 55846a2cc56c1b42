#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace cdcol {

// Colour per vertex plus one dominator per colour class.
struct CdColoring {
	std::vector<std::size_t> color;
	std::vector<vertex> dominator;

	std::size_t num_colors() const { return dominator.size(); }

	std::vector<VertexSet> classes() const {
		std::vector<VertexSet> out(num_colors(), VertexSet(color.size()));
		for (vertex v = 0; v < color.size(); ++v)
			if (color[v] < out.size())
				out[color[v]].insert(v);
		return out;
	}

	static CdColoring from_classes(std::size_t n, const std::vector<VertexSet>& classes,
	                               const std::vector<vertex>& dominators) {
		CdColoring c;
		c.color.assign(n, classes.size());
		for (std::size_t i = 0; i < classes.size(); ++i)
			for (vertex v : classes[i])
				c.color[v] = i;
		c.dominator = dominators;
		return c;
	}

	friend bool operator==(const CdColoring&, const CdColoring&) = default;
};

// Lowest vertex y with cls ⊆ N[y].
inline std::optional<vertex> lowest_dominator(const Graph& g, const VertexSet& cls) {
	for (vertex y = 0; y < g.order(); ++y)
		if (cls.is_subset_of(g.closed_neighbors(y)))
			return y;
	return std::nullopt;
}

struct ValidationReport {
	bool ok = true;
	std::string violation;
	explicit operator bool() const { return ok; }
};

inline ValidationReport validate_cd_coloring(const Graph& g, const CdColoring& c) {
	auto fail = [](std::string why) { return ValidationReport{false, std::move(why)}; };
	auto name = [&](vertex v) { return std::to_string(g.label(v)); };
	const std::size_t q = c.num_colors();
	if (c.color.size() != g.order())
		return fail("colouring covers " + std::to_string(c.color.size()) + " vertices, graph has " +
		            std::to_string(g.order()));
	for (vertex v = 0; v < g.order(); ++v)
		if (c.color[v] >= q)
			return fail("vertex " + name(v) + " has no colour in [0," + std::to_string(q) + ")");
	for (vertex d : c.dominator)
		if (d >= g.order())
			return fail("dominator index out of range");
	for (auto [u, v] : g.edges())
		if (c.color[u] == c.color[v])
			return fail("improper edge (" + name(u) + "," + name(v) + ") in colour " + std::to_string(c.color[u]));
	auto cls = c.classes();
	for (std::size_t i = 0; i < q; ++i) {
		if (cls[i].empty())
			return fail("colour " + std::to_string(i) + " is unused");
		if (!cls[i].is_subset_of(g.closed_neighbors(c.dominator[i])))
			return fail("class " + std::to_string(i) + " is not dominated by vertex " + name(c.dominator[i]));
	}
	return {};
}

// Merges colourings of disjoint vertex sets of `g` (each given on its own subgraph).
inline CdColoring merge_colorings(std::size_t n, const std::vector<std::pair<CdColoring, std::vector<vertex>>>& parts) {
	CdColoring out;
	out.color.assign(n, 0);
	for (const auto& [c, to_parent] : parts) {
		std::size_t offset = out.dominator.size();
		for (vertex v = 0; v < c.color.size(); ++v)
			out.color[to_parent[v]] = offset + c.color[v];
		for (vertex d : c.dominator)
			out.dominator.push_back(to_parent[d]);
	}
	return out;
}

} // namespace cdcol
