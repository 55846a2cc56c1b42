#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vertex_set.hpp"

namespace cdcol {

using edge = std::pair<vertex, vertex>;

// Simple undirected graph; adjacency rows are bit vectors of width n.
// Vertices are 0-indexed internally; `label(v)` is the external name
// (1-based position by default, the input's name after parsing).
class Graph {
public:
	Graph() = default;
	explicit Graph(std::size_t n) : adj_(n, VertexSet(n)), labels_(n) {
		for (std::size_t v = 0; v < n; ++v)
			labels_[v] = static_cast<std::int64_t>(v + 1);
	}

	static Graph from_edges(std::size_t n, const std::vector<edge>& edges) {
		Graph g(n);
		for (auto [u, v] : edges)
			g.add_edge(u, v);
		return g;
	}

	std::size_t order() const { return adj_.size(); }
	std::size_t size() const {
		std::size_t twice = 0;
		for (const auto& row : adj_)
			twice += row.size();
		return twice / 2;
	}

	void add_edge(vertex u, vertex v) {
		if (u >= order() || v >= order())
			throw error("edge endpoint out of range");
		if (u == v)
			throw error("self-loop on vertex " + std::to_string(labels_[u]));
		adj_[u].insert(v);
		adj_[v].insert(u);
	}

	bool adjacent(vertex u, vertex v) const { return adj_[u].contains(v); }
	const VertexSet& neighbors(vertex v) const { return adj_[v]; }
	VertexSet closed_neighbors(vertex v) const {
		auto s = adj_[v];
		s.insert(v);
		return s;
	}
	std::size_t degree(vertex v) const { return adj_[v].size(); }

	VertexSet vertices() const { return VertexSet::full(order()); }
	VertexSet empty_set() const { return VertexSet(order()); }

	// Edges (u, v) with u < v in lexicographic order.
	std::vector<edge> edges() const {
		std::vector<edge> out;
		for (vertex u = 0; u < order(); ++u)
			for (vertex v : adj_[u])
				if (u < v)
					out.emplace_back(u, v);
		return out;
	}

	std::int64_t label(vertex v) const { return labels_[v]; }
	const std::vector<std::int64_t>& labels() const { return labels_; }
	void set_label(vertex v, std::int64_t l) { labels_[v] = l; }

	friend bool operator==(const Graph&, const Graph&) = default;

private:
	std::vector<VertexSet> adj_;
	std::vector<std::int64_t> labels_;
};

// Induced subgraph together with the map back to the parent's vertices.
struct Subgraph {
	Graph graph;
	std::vector<vertex> to_parent;

	VertexSet lift(const VertexSet& s, std::size_t parent_order) const {
		VertexSet out(parent_order);
		for (vertex v : s)
			out.insert(to_parent[v]);
		return out;
	}
	std::vector<vertex> lift(const std::vector<vertex>& vs) const {
		std::vector<vertex> out;
		out.reserve(vs.size());
		for (vertex v : vs)
			out.push_back(to_parent[v]);
		return out;
	}
};

inline Subgraph induced(const Graph& g, const VertexSet& keep) {
	Subgraph sub{Graph(keep.size()), keep.to_vector()};
	std::vector<vertex> index(g.order(), g.order());
	for (vertex i = 0; i < sub.to_parent.size(); ++i)
		index[sub.to_parent[i]] = i;
	for (vertex i = 0; i < sub.to_parent.size(); ++i) {
		vertex u = sub.to_parent[i];
		sub.graph.set_label(i, g.label(u));
		for (vertex w : g.neighbors(u))
			if (index[w] < g.order() && i < index[w])
				sub.graph.add_edge(i, index[w]);
	}
	return sub;
}

inline Subgraph remove_vertices(const Graph& g, const VertexSet& gone) {
	return induced(g, gone.complement());
}

// Disjoint union; vertices of `b` are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
	Graph g(a.order() + b.order());
	for (auto [u, v] : a.edges())
		g.add_edge(u, v);
	for (auto [u, v] : b.edges())
		g.add_edge(a.order() + u, a.order() + v);
	return g;
}

} // namespace cdcol
