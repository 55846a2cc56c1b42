#pragma once

#include <algorithm>
#include <climits>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "structure.hpp"

namespace cdcol {

namespace detail {

inline std::optional<VertexSet> vc_branch(const Graph& g, const VertexSet& alive, std::size_t budget) {
	std::size_t edges = 0, maxdeg = 0;
	std::optional<vertex> best, pendant;
	for (vertex v : alive) {
		auto d = (g.neighbors(v) & alive).size();
		edges += d;
		if (d == 1 && !pendant)
			pendant = v;
		if (d > maxdeg) {
			maxdeg = d;
			best = v;
		}
	}
	edges /= 2;
	if (edges == 0)
		return VertexSet(g.order());
	if (budget == 0 || edges > budget * maxdeg)
		return std::nullopt;
	auto take = [&](const VertexSet& s) -> std::optional<VertexSet> {
		if (s.size() > budget)
			return std::nullopt;
		auto r = vc_branch(g, alive - s, budget - s.size());
		if (r)
			*r |= s;
		return r;
	};
	if (pendant)
		return take(g.neighbors(*pendant) & alive);
	if (maxdeg > budget)
		return take(VertexSet::of(g.order(), {*best}));
	if (auto r = take(VertexSet::of(g.order(), {*best})))
		return r;
	return take(g.neighbors(*best) & alive);
}

} // namespace detail

// Minimum vertex cover of size <= k, or nothing.
inline std::optional<VertexSet> vertex_cover(const Graph& g, std::size_t k) {
	for (std::size_t b = 0; b <= k; ++b)
		if (auto r = detail::vc_branch(g, g.vertices(), b))
			return r;
	return std::nullopt;
}

namespace detail {

// Unit-capacity vertex cut between two terminal sets (Edmonds-Karp on the
// split-vertex network). Vertices in `solid` cannot be cut.
class VertexCut {
public:
	static constexpr int inf = INT_MAX / 4;

	explicit VertexCut(std::size_t n) : n_(n), head_(2 * n + 2, -1) {}

	void vertex_capacity(vertex v, bool solid) { arc(in(v), out(v), solid ? inf : 1); }
	void edge(vertex u, vertex w) {
		arc(out(u), in(w), inf);
		arc(out(w), in(u), inf);
	}
	void source(vertex v) { arc(s(), in(v), inf); }
	void sink(vertex v) { arc(out(v), t(), inf); }

	// The cut, or nothing if more than `limit` vertices are needed.
	std::optional<std::vector<vertex>> solve(std::size_t limit) {
		std::size_t flow = 0;
		while (true) {
			std::vector<int> via(head_.size(), -1);
			std::vector<bool> seen(head_.size(), false);
			std::deque<std::size_t> queue{s()};
			seen[s()] = true;
			while (!queue.empty() && !seen[t()]) {
				auto u = queue.front();
				queue.pop_front();
				for (int a = head_[u]; a >= 0; a = arcs_[a].next)
					if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
						seen[arcs_[a].to] = true;
						via[arcs_[a].to] = a;
						queue.push_back(arcs_[a].to);
					}
			}
			if (!seen[t()]) {
				std::vector<vertex> cut;
				for (vertex v = 0; v < n_; ++v)
					if (seen[in(v)] && !seen[out(v)])
						cut.push_back(v);
				return cut;
			}
			int push = inf;
			for (auto x = t(); x != s(); x = arcs_[via[x] ^ 1].to)
				push = std::min(push, arcs_[via[x]].cap);
			if (push >= inf)
				return std::nullopt;
			for (auto x = t(); x != s(); x = arcs_[via[x] ^ 1].to) {
				arcs_[via[x]].cap -= push;
				arcs_[via[x] ^ 1].cap += push;
			}
			flow += static_cast<std::size_t>(push);
			if (flow > limit)
				return std::nullopt;
		}
	}

private:
	struct Arc {
		std::size_t to;
		int cap;
		int next;
	};
	std::size_t n_;
	std::vector<int> head_;
	std::vector<Arc> arcs_;

	std::size_t in(vertex v) const { return 2 * v; }
	std::size_t out(vertex v) const { return 2 * v + 1; }
	std::size_t s() const { return 2 * n_; }
	std::size_t t() const { return 2 * n_ + 1; }
	void arc(std::size_t a, std::size_t b, int cap) {
		arcs_.push_back({b, cap, head_[a]});
		head_[a] = static_cast<int>(arcs_.size() - 1);
		arcs_.push_back({a, 0, head_[b]});
		head_[b] = static_cast<int>(arcs_.size() - 1);
	}
};

// Compression step: G[alive] - w is bipartite; find a deletable set of at
// most `budget` vertices leaving G[alive] bipartite.
inline std::optional<VertexSet> oct_compress(const Graph& g, const VertexSet& alive, const VertexSet& w,
                                             const VertexSet& solid, std::size_t budget) {
	const std::size_t n = g.order();
	auto rest = alive - w;
	auto colouring = bipartition(g, rest);
	if (!colouring)
		throw error("internal: compression set is not an odd cycle transversal");
	const auto& side_a = colouring->first;
	auto wv = w.to_vector();
	std::vector<int> guess(wv.size(), 0); // 0 delete, 1 left, 2 right
	while (true) {
		VertexSet del(n), left(n), right(n);
		bool ok = true;
		for (std::size_t i = 0; i < wv.size(); ++i) {
			if (guess[i] == 0) {
				ok = ok && !solid.contains(wv[i]);
				del.insert(wv[i]);
			} else {
				(guess[i] == 1 ? left : right).insert(wv[i]);
			}
		}
		if (ok && del.size() <= budget && is_independent(g, left) && is_independent(g, right)) {
			VertexSet forced(n), keep(n), flip(n);
			for (vertex u : rest) {
				bool to_right = g.neighbors(u).intersects(left);
				bool to_left = g.neighbors(u).intersects(right);
				if (to_right && to_left) {
					forced.insert(u);
				} else if (to_right || to_left) {
					bool now_left = side_a.contains(u);
					(now_left == to_left ? keep : flip).insert(u);
				}
			}
			if (!forced.intersects(solid) && del.size() + forced.size() <= budget) {
				auto h = rest - forced;
				auto hv = h.to_vector();
				std::vector<vertex> index(n, n);
				for (vertex i = 0; i < hv.size(); ++i)
					index[hv[i]] = i;
				VertexCut net(hv.size());
				for (vertex i = 0; i < hv.size(); ++i) {
					net.vertex_capacity(i, solid.contains(hv[i]));
					for (vertex x : g.neighbors(hv[i]) & h)
						if (hv[i] < x)
							net.edge(i, index[x]);
					if (keep.contains(hv[i]))
						net.source(i);
					if (flip.contains(hv[i]))
						net.sink(i);
				}
				if (auto cut = net.solve(budget - del.size() - forced.size())) {
					auto sol = del | forced;
					for (vertex i : *cut)
						sol.insert(hv[i]);
					return sol;
				}
			}
		}
		std::size_t i = 0;
		while (i < guess.size() && guess[i] == 2)
			guess[i++] = 0;
		if (i == guess.size())
			return std::nullopt;
		++guess[i];
	}
}

// Minimum odd cycle transversal of size <= k avoiding `solid`, by iterative
// compression over the vertices in index order.
inline std::optional<VertexSet> oct_solve(const Graph& g, const VertexSet& solid, std::size_t k) {
	const std::size_t n = g.order();
	for (std::size_t b = 0; b <= k; ++b) {
		VertexSet alive(n), sol(n);
		bool failed = false;
		for (vertex v = 0; v < n && !failed; ++v) {
			alive.insert(v);
			if (is_bipartite(g, alive - sol))
				continue;
			auto w = sol;
			w.insert(v);
			auto next = oct_compress(g, alive, w, solid, b);
			if (next)
				sol = *next;
			else
				failed = true;
		}
		if (!failed)
			return sol;
	}
	return std::nullopt;
}

} // namespace detail

inline std::optional<VertexSet> odd_cycle_transversal(const Graph& g, std::size_t k) {
	return detail::oct_solve(g, VertexSet(g.order()), k);
}

struct GadgetVertex {
	enum class Kind { original, pair, side_p, side_q };
	Kind kind = Kind::original;
	vertex a = 0; // original vertex, or the lower vertex of the pair
	vertex b = 0; // upper vertex of the pair
};

struct GadgetGraph {
	Graph graph;
	std::vector<GadgetVertex> origin;
	VertexSet core;                         // gadget vertices that are original vertices
	std::vector<vertex> gadget_of;          // original vertex -> gadget vertex (or graph order if absent)

	VertexSet of_kind(GadgetVertex::Kind kind) const {
		VertexSet s(graph.order());
		for (vertex v = 0; v < graph.order(); ++v)
			if (origin[v].kind == kind)
				s.insert(v);
		return s;
	}
};

// g - v plus one vertex per pair of neighbours of v, adjacent to exactly that pair.
inline GadgetGraph build_exclusion_gadget(const Graph& g, vertex v) {
	if (v >= g.order())
		throw error("vertex out of range");
	auto nb = g.neighbors(v).to_vector();
	const std::size_t base = g.order() - 1;
	GadgetGraph out{Graph(base + nb.size() * (nb.size() - (nb.empty() ? 0 : 1)) / 2), {}, {}, {}};
	out.gadget_of.assign(g.order(), out.graph.order());
	for (vertex u = 0, i = 0; u < g.order(); ++u)
		if (u != v) {
			out.gadget_of[u] = i;
			out.graph.set_label(i, g.label(u));
			out.origin.push_back({GadgetVertex::Kind::original, u, u});
			++i;
		}
	for (auto [a, b] : g.edges())
		if (a != v && b != v)
			out.graph.add_edge(out.gadget_of[a], out.gadget_of[b]);
	vertex next = base;
	for (std::size_t i = 0; i < nb.size(); ++i)
		for (std::size_t j = i + 1; j < nb.size(); ++j) {
			out.origin.push_back({GadgetVertex::Kind::pair, nb[i], nb[j]});
			out.graph.set_label(next, 0);
			out.graph.add_edge(next, out.gadget_of[nb[i]]);
			out.graph.add_edge(next, out.gadget_of[nb[j]]);
			++next;
		}
	out.core = VertexSet(out.graph.order());
	for (vertex i = 0; i < base; ++i)
		out.core.insert(i);
	return out;
}

// g plus independent sets I_P, I_Q of k+1 vertices: I_P complete to P and to
// I_Q, I_Q complete to Q.
inline GadgetGraph build_forcing_gadget(const Graph& g, const VertexSet& p, const VertexSet& q, std::size_t k) {
	if (p.intersects(q))
		throw precondition_error("forced sides overlap", (p & q).to_vector());
	const std::size_t n = g.order();
	GadgetGraph out{Graph(n + 2 * (k + 1)), {}, VertexSet(n + 2 * (k + 1)), std::vector<vertex>(n)};
	for (vertex u = 0; u < n; ++u) {
		out.origin.push_back({GadgetVertex::Kind::original, u, u});
		out.gadget_of[u] = u;
		out.core.insert(u);
		out.graph.set_label(u, g.label(u));
	}
	for (auto [a, b] : g.edges())
		out.graph.add_edge(a, b);
	for (std::size_t i = 0; i <= k; ++i) {
		vertex ip = n + i, iq = n + k + 1 + i;
		out.origin.push_back({GadgetVertex::Kind::side_p, ip, ip});
		for (vertex u : p)
			out.graph.add_edge(ip, u);
		for (vertex u : q)
			out.graph.add_edge(iq, u);
		for (std::size_t j = 0; j <= k; ++j)
			out.graph.add_edge(ip, n + k + 1 + j);
	}
	for (std::size_t i = 0; i <= k; ++i)
		out.origin.push_back({GadgetVertex::Kind::side_q, n + k + 1 + i, n + k + 1 + i});
	for (vertex i = n; i < out.graph.order(); ++i)
		out.graph.set_label(i, 0);
	return out;
}

namespace detail {

// Gadget solution back to original vertices: a pair vertex is replaced by its
// lower endpoint, which lies on every cycle through it.
inline VertexSet reroute(const GadgetGraph& gad, const VertexSet& sol, std::size_t original_order) {
	VertexSet out(original_order);
	for (vertex v : sol) {
		const auto& o = gad.origin[v];
		if (o.kind == GadgetVertex::Kind::original || o.kind == GadgetVertex::Kind::pair)
			out.insert(o.a);
	}
	return out;
}

} // namespace detail

// Minimum odd cycle transversal of size <= k that keeps v.
inline std::optional<VertexSet> oct_excluding(const Graph& g, vertex v, std::size_t k) {
	auto gad = build_exclusion_gadget(g, v);
	auto sol = odd_cycle_transversal(gad.graph, k);
	if (!sol)
		return std::nullopt;
	auto out = detail::reroute(gad, *sol, g.order());
	if (out.contains(v) || !is_bipartite(g, g.vertices() - out))
		throw error("internal: rerouted exclusion-gadget solution is not valid");
	return out;
}

struct ForcedOct {
	VertexSet oct;
	VertexSet side_p; // contains p - oct
	VertexSet side_q; // contains q - oct
};

namespace detail {

// Two-colour g - oct; a component with forced vertices follows them, any
// other component puts its lowest vertex on the p side.
inline std::optional<ForcedOct> orient(const Graph& g, const VertexSet& oct, const VertexSet& p,
                                       const VertexSet& q) {
	ForcedOct out{oct, VertexSet(g.order()), VertexSet(g.order())};
	for (const auto& comp : connected_components(g, g.vertices() - oct)) {
		auto sides = bipartition(g, comp);
		if (!sides)
			return std::nullopt;
		auto [a, b] = *sides;
		if (b.intersects(p) || a.intersects(q))
			std::swap(a, b);
		if (b.intersects(p) || a.intersects(q))
			return std::nullopt;
		out.side_p |= a;
		out.side_q |= b;
	}
	return out;
}

} // namespace detail

// Minimum odd cycle transversal of size <= k, avoiding `exclude`, such that the
// remaining graph has a bipartition with p and q on opposite sides.
inline std::optional<ForcedOct> oct_with_forced_sides(const Graph& g, const VertexSet& p, const VertexSet& q,
                                                      std::optional<vertex> exclude, std::size_t k) {
	if (p.intersects(q))
		throw precondition_error("forced sides overlap", (p & q).to_vector());
	const std::size_t n = g.order();
	if (exclude && (p.contains(*exclude) || q.contains(*exclude))) {
		// The kept vertex sits on its own side, so its neighbours belong to the
		// other one; neighbours forced onto its side must go.
		const vertex z = *exclude;
		bool in_p = p.contains(z);
		const auto& same = in_p ? p : q;
		auto doomed = g.neighbors(z) & same;
		if (doomed.size() > k)
			return std::nullopt;
		auto gone = doomed;
		gone.insert(z);
		auto sub = remove_vertices(g, gone);
		VertexSet p2(sub.graph.order()), q2(sub.graph.order());
		for (vertex i = 0; i < sub.to_parent.size(); ++i) {
			vertex u = sub.to_parent[i];
			bool other = g.adjacent(u, z);
			if (in_p ? (q.contains(u) || other) : q.contains(u))
				q2.insert(i);
			if (in_p ? p.contains(u) : (p.contains(u) || other))
				p2.insert(i);
		}
		auto inner = oct_with_forced_sides(sub.graph, p2, q2, std::nullopt, k - doomed.size());
		if (!inner)
			return std::nullopt;
		auto oct = sub.lift(inner->oct, n) | doomed;
		return detail::orient(g, oct, p, q);
	}
	GadgetGraph excl;
	const Graph* base = &g;
	VertexSet bp = p, bq = q;
	if (exclude) {
		excl = build_exclusion_gadget(g, *exclude);
		base = &excl.graph;
		bp = VertexSet(excl.graph.order());
		bq = VertexSet(excl.graph.order());
		for (vertex u : p)
			bp.insert(excl.gadget_of[u]);
		for (vertex u : q)
			bq.insert(excl.gadget_of[u]);
	}
	auto force = build_forcing_gadget(*base, bp, bq, k);
	auto solid = force.of_kind(GadgetVertex::Kind::side_p) | force.of_kind(GadgetVertex::Kind::side_q);
	auto sol = detail::oct_solve(force.graph, solid, k);
	if (!sol)
		return std::nullopt;
	VertexSet on_base(base->order());
	for (vertex v : *sol)
		on_base.insert(v);
	auto oct = exclude ? detail::reroute(excl, on_base, n) : on_base;
	auto out = detail::orient(g, oct, p, q);
	if (!out || (exclude && oct.contains(*exclude)))
		throw error("internal: forced-side gadget solution is not valid");
	return out;
}

} // namespace cdcol
