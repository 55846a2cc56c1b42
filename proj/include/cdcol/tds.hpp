#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "exact.hpp"
#include "parallel.hpp"
#include "structure.hpp"

namespace cdcol {

inline bool is_total_dominating(const Graph& g, const VertexSet& s) {
	VertexSet covered(g.order());
	for (vertex v : s)
		covered |= g.neighbors(v);
	return covered == g.vertices();
}

struct TdsCertificate {
	VertexSet set;
	std::size_t size() const { return set.size(); }
};

enum class KernelVerdict { no, reduced };

struct KernelOutcome {
	KernelVerdict verdict = KernelVerdict::no;
	Graph kernel;
	std::vector<vertex> back_map; // kernel vertex -> original vertex
	VertexSet forced;             // original vertices of degree >= k+1
	std::string reason;           // why the answer is NO, when it is
};

// |H| + |R| + |J ∩ N(R)| + |J1| + |J2| for a reduced instance.
inline std::size_t tds_kernel_bound(std::size_t k) { return k + k * k + k * k * k + k + k * (k - 1) / 2; }

// tds_kernel_bound(k) <= tds_kernel_constant * k^3 for every k >= 1.
inline constexpr std::size_t tds_kernel_constant = 4;

namespace detail {

// A triangle or a 4-cycle, whichever is found first.
inline std::vector<vertex> short_cycle(const Graph& g) {
	if (auto t = find_triangle(g))
		return {(*t)[0], (*t)[1], (*t)[2]};
	for (vertex u = 0; u < g.order(); ++u)
		for (vertex w = u + 1; w < g.order(); ++w) {
			auto common = (g.neighbors(u) & g.neighbors(w)).to_vector();
			if (common.size() >= 2)
				return {u, common[0], w, common[1]};
		}
	return {};
}

inline void require_girth5(const Graph& g) {
	auto gi = girth(g);
	if (gi && *gi < 5)
		throw precondition_error("girth " + std::to_string(*gi) +
		                             " < 5: neighbourhoods are not independent / two vertices share two "
		                             "neighbours",
		                         short_cycle(g));
}

// Smallest total dominating set of g containing `forced` with at most `budget`
// vertices. Branches on the neighbours of the lowest undominated vertex.
inline std::optional<VertexSet> tds_search(const Graph& g, const VertexSet& forced, std::size_t budget,
                                           unsigned threads) {
	const std::size_t n = g.order();
	std::size_t maxdeg = 0;
	for (vertex v = 0; v < n; ++v)
		maxdeg = std::max(maxdeg, g.degree(v));
	VertexSet base_cover(n);
	for (vertex v : forced)
		base_cover |= g.neighbors(v);

	auto dfs = [&](auto& self, VertexSet& sol, const VertexSet& covered, std::size_t remaining) -> bool {
		auto open = covered.complement();
		auto u = open.first();
		if (!u)
			return true;
		if (remaining == 0 || open.size() > remaining * maxdeg)
			return false;
		for (vertex v : g.neighbors(*u)) {
			sol.insert(v);
			if (self(self, sol, covered | g.neighbors(v), remaining - 1))
				return true;
			sol.erase(v);
		}
		return false;
	};

	for (std::size_t size = forced.size(); size <= budget; ++size) {
		auto open = base_cover.complement();
		auto u = open.first();
		if (!u)
			return forced;
		if (size == forced.size())
			continue;
		auto branches = g.neighbors(*u).to_vector();
		auto hit = first_success(branches.size(), threads, [&](std::size_t i) -> std::optional<VertexSet> {
			VertexSet sol = forced;
			sol.insert(branches[i]);
			if (dfs(dfs, sol, base_cover | g.neighbors(branches[i]), size - forced.size() - 1))
				return sol;
			return std::nullopt;
		});
		if (hit)
			return hit->second;
	}
	return std::nullopt;
}

} // namespace detail

// Polynomial kernel for total domination on graphs of girth >= 5. High-degree
// vertices H are committed to the solution; J* vertices whose H-neighbourhood
// is covered by another surviving J* vertex are deleted.
inline KernelOutcome tds_kernelize(const Graph& g, std::size_t k) {
	detail::require_girth5(g);
	if (k < 1)
		throw error("kernelization needs k >= 1");
	const std::size_t n = g.order();
	KernelOutcome out;
	out.forced = VertexSet(n);
	for (vertex v = 0; v < n; ++v)
		if (g.degree(v) >= k + 1)
			out.forced.insert(v);
	const auto& high = out.forced;
	if (high.size() > k) {
		out.reason = std::to_string(high.size()) + " vertices of degree >= k+1 must all be in the solution";
		return out;
	}
	VertexSet j(n);
	for (vertex h : high)
		j |= g.neighbors(h);
	j -= high;
	auto r = g.vertices() - high - j;
	if (r.size() > k * k) {
		out.reason = std::to_string(r.size()) + " vertices far from H exceed k^2";
		return out;
	}
	VertexSet near_r(n);
	for (vertex v : r)
		near_r |= g.neighbors(v);
	auto j_near_r = j & near_r;
	if (j_near_r.size() > k * r.size()) {
		out.reason = "|J ∩ N(R)| exceeds k|R|";
		return out;
	}
	auto j_star = j - near_r;
	VertexSet deleted(n);
	for (vertex u : j_star) {
		auto hu = g.neighbors(u) & high;
		for (vertex v : j_star)
			if (v != u && !deleted.contains(v) && hu.is_subset_of(g.neighbors(v) & high)) {
				deleted.insert(u);
				break;
			}
	}
	auto sub = remove_vertices(g, deleted);
	if (sub.graph.order() > tds_kernel_bound(k))
		throw error("internal: kernel of " + std::to_string(sub.graph.order()) + " vertices exceeds bound " +
		            std::to_string(tds_kernel_bound(k)));
	out.verdict = KernelVerdict::reduced;
	out.kernel = std::move(sub.graph);
	out.back_map = std::move(sub.to_parent);
	return out;
}

// Minimum total dominating set of size <= k (girth >= 5), solved per component.
inline std::optional<TdsCertificate> tds_solve(const Graph& g, std::size_t k, Parallelism par = {}) {
	detail::require_girth5(g);
	TdsCertificate cert{VertexSet(g.order())};
	std::size_t used = 0;
	for (const auto& comp : connected_components(g)) {
		if (comp.size() == 1 || used >= k)
			return std::nullopt;
		auto sub = induced(g, comp);
		auto kern = tds_kernelize(sub.graph, k - used);
		if (kern.verdict == KernelVerdict::no)
			return std::nullopt;
		VertexSet forced(kern.kernel.order());
		for (vertex i = 0; i < kern.back_map.size(); ++i)
			if (kern.forced.contains(kern.back_map[i]))
				forced.insert(i);
		auto found = detail::tds_search(kern.kernel, forced, k - used, par.threads);
		if (!found)
			return std::nullopt;
		for (vertex v : *found)
			cert.set.insert(sub.to_parent[kern.back_map[v]]);
		used += found->size();
	}
	return cert;
}

inline constexpr std::size_t tds_bruteforce_max_n = 20;
inline constexpr std::size_t tds_bruteforce_max_k = 6;

// Exhaustive: subsets by increasing size, lexicographic within a size.
inline std::optional<TdsCertificate> tds_bruteforce(const Graph& g, std::size_t k) {
	const std::size_t n = g.order();
	if (n > tds_bruteforce_max_n || k > tds_bruteforce_max_k)
		throw capacity_error("brute-force TDS handles n <= " + std::to_string(tds_bruteforce_max_n) + " and k <= " +
		                     std::to_string(tds_bruteforce_max_k));
	for (std::size_t size = 0; size <= std::min(k, n); ++size) {
		std::vector<vertex> pick(size);
		for (std::size_t i = 0; i < size; ++i)
			pick[i] = i;
		while (true) {
			auto s = VertexSet::from(n, pick);
			if (is_total_dominating(g, s))
				return TdsCertificate{s};
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

// Class i is N(v_i) minus earlier classes, dominated by v_i; empty classes are
// dropped. Needs a triangle-free graph.
inline CdColoring cd_coloring_from_tds(const Graph& g, const TdsCertificate& s) {
	if (auto t = find_triangle(g))
		throw precondition_error("graph contains a triangle", {(*t)[0], (*t)[1], (*t)[2]});
	if (!is_total_dominating(g, s.set))
		throw precondition_error("set is not a total dominating set");
	std::vector<VertexSet> classes;
	std::vector<vertex> doms;
	VertexSet covered(g.order());
	for (vertex v : s.set) {
		auto cls = g.neighbors(v) - covered;
		if (cls.empty())
			continue;
		covered |= cls;
		classes.push_back(std::move(cls));
		doms.push_back(v);
	}
	return CdColoring::from_classes(g.order(), classes, doms);
}

// chi_cd for girth >= 5 via chi_cd = gamma_t on each nontrivial component.
inline ChromaticResult cd_chromatic_girth5(const Graph& g, Parallelism par = {}) {
	detail::require_girth5(g);
	return detail::per_component(g, [&](const Graph& comp) {
		if (comp.order() == 1)
			return ChromaticResult{1, CdColoring{{0}, {0}}};
		for (std::size_t k = 1;; ++k)
			if (auto cert = tds_solve(comp, k, par)) {
				auto c = cd_coloring_from_tds(comp, *cert);
				return ChromaticResult{c.num_colors(), std::move(c)};
			}
	});
}

} // namespace cdcol
