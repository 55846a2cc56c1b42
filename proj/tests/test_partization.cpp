#include <gtest/gtest.h>

#include <functional>

#include "cdcol/generators.hpp"
#include "cdcol/partization.hpp"
#include "support/oracles.hpp"

using namespace cdcol;

namespace {

std::vector<Graph> small_graphs(std::uint64_t seed, std::size_t count, std::size_t max_n) {
	static const double ps[] = {0.25, 0.4, 0.55, 0.7, 0.85};
	Rng rng(seed);
	std::vector<Graph> out;
	while (out.size() < count)
		out.push_back(random_gnp(1 + rng.below(max_n), ps[rng.below(5)], rng));
	return out;
}

Graph remainder(const Graph& g, const DeletionSolution& s) { return remove_vertices(g, s.deleted).graph; }

void expect_certified(const Graph& g, const DeletionSolution& s, std::size_t k, std::size_t q) {
	EXPECT_LE(s.deleted.size(), k);
	auto rest = remove_vertices(g, s.deleted);
	EXPECT_EQ(s.kept, rest.to_parent);
	auto report = validate_cd_coloring(rest.graph, s.coloring);
	EXPECT_TRUE(report.ok) << report.violation;
	EXPECT_LE(s.coloring.num_colors(), q);
	VertexSet covered(g.order());
	for (const auto& part : s.remainder_plan) {
		EXPECT_FALSE(part.component.intersects(s.deleted));
		for (vertex d : part.witness.dominators) {
			EXPECT_FALSE(s.deleted.contains(d));
			EXPECT_TRUE(part.component.contains(d));
		}
		covered |= part.component;
	}
	EXPECT_EQ(covered, g.vertices() - s.deleted);
}

// Connected, bipartite, with an edge whose endpoints see everything.
bool type1_oracle(const Graph& h) {
	if (h.order() < 2 || !is_connected(h) || !oracle::bipartite(h))
		return false;
	for (auto [u, v] : h.edges())
		if ((h.neighbors(u) | h.neighbors(v)) == h.vertices())
			return true;
	return false;
}

bool type2_oracle(const Graph& h) {
	if (!is_connected(h))
		return false;
	for (vertex v = 0; v < h.order(); ++v)
		if (type1_oracle(remove_vertices(h, VertexSet::of(h.order(), {v})).graph))
			return true;
	return false;
}

std::optional<std::size_t> min_deletion(const Graph& g, const std::function<bool(const Graph&)>& ok) {
	std::optional<std::size_t> best;
	for (oracle::mask s = 0; s <= oracle::all(g.order()); ++s) {
		auto size = static_cast<std::size_t>(std::popcount(s));
		if (best && size >= *best)
			continue;
		if (ok(remove_vertices(g, VertexSet::from_mask(g.order(), s)).graph))
			best = size;
	}
	return best;
}

using Solver = std::optional<DeletionSolution> (*)(const Graph&, std::size_t, Parallelism);
const Solver per_type[] = {nullptr, delete_to_type1, delete_to_type2, delete_to_type3, delete_to_type4,
                           delete_to_type5};

} // namespace

TEST(DeleteToType1, Examples) {
	auto c4 = delete_to_type1(named::cycle(4), 0);
	ASSERT_TRUE(c4);
	EXPECT_TRUE(c4->deleted.empty());
	auto c6 = delete_to_type1(named::cycle(6), 2);
	ASSERT_TRUE(c6);
	EXPECT_TRUE(type1_oracle(remainder(named::cycle(6), *c6)));
	EXPECT_FALSE(delete_to_type1(named::complete(1), 0));
	EXPECT_FALSE(delete_to_type1(named::cycle(6), 1));
}

TEST(DeleteToType2, Examples) {
	auto c5 = delete_to_type2(named::cycle(5), 0);
	ASSERT_TRUE(c5);
	EXPECT_TRUE(c5->deleted.empty());
	EXPECT_FALSE(delete_to_type2(named::path(2), 0));
}

TEST(DeleteToType3, Examples) {
	// Type 3 needs a triangle through the dominating pair, so C5 is not one.
	EXPECT_FALSE(delete_to_type3(named::cycle(5), 0));
	EXPECT_FALSE(delete_to_type3(named::path(2), 0));
	auto k3 = delete_to_type3(named::complete(3), 0);
	ASSERT_TRUE(k3);
	EXPECT_EQ(k3->remainder_plan.at(0).pattern, Pattern::type3);
}

TEST(DeleteToType4, Examples) {
	auto k3 = delete_to_type4(named::complete(3), 0);
	ASSERT_TRUE(k3);
	EXPECT_TRUE(k3->deleted.empty());
	auto k4 = delete_to_type4(named::complete(4), 1);
	ASSERT_TRUE(k4);
	EXPECT_EQ(k4->deleted.size(), 1u);
	auto net = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
	EXPECT_EQ(delete_to_type4(net, 0).has_value(), oracle::chi_cd(net) <= 3);
}

TEST(DeleteToType5, Examples) {
	auto p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
	auto r = delete_to_type5(p3, 0);
	ASSERT_TRUE(r);
	EXPECT_EQ(r->remainder_plan.at(0).pattern, Pattern::type5);
	EXPECT_TRUE(delete_to_type5(named::cycle(5), 0));
	EXPECT_FALSE(delete_to_type5(named::complete(4), 0));
}

TEST(DeleteToType, RemainderHasTheRequestedType) {
	Rng rng(31);
	for (const auto& g : small_graphs(307, 250, 8)) {
		std::size_t k = rng.below(4);
		for (int t = 1; t <= 5; ++t) {
			auto s = per_type[t](g, k, {});
			if (!s)
				continue;
			expect_certified(g, *s, k, t == 1 ? 2 : 3);
			auto h = remainder(g, *s);
			ASSERT_TRUE(is_connected(h)) << "type " << t;
			EXPECT_TRUE(recognize_type(h, t)) << "type " << t;
		}
	}
}

TEST(DeleteToType, LowTypesAreMinimalAgainstOracle) {
	Rng rng(37);
	for (const auto& g : small_graphs(311, 200, 8)) {
		std::size_t k = rng.below(4);
		auto one = min_deletion(g, type1_oracle);
		EXPECT_EQ(delete_to_type1(g, k).has_value(), one && *one <= k);
		auto two = min_deletion(g, type2_oracle);
		EXPECT_EQ(delete_to_type2(g, k).has_value(), two && *two <= k);
	}
}

TEST(Partization3, Examples) {
	EXPECT_FALSE(partization3(named::complete(5), 1));
	auto k5 = partization3(named::complete(5), 2);
	ASSERT_TRUE(k5);
	EXPECT_EQ(k5->deleted.size(), 2u);
	EXPECT_EQ(remainder(named::complete(5), *k5), named::complete(3));
	auto c6k1 = disjoint_union(named::cycle(6), Graph(1));
	EXPECT_FALSE(partization3(c6k1, 0));
	EXPECT_EQ(oracle::chi_cd(c6k1), 5u);
	EXPECT_TRUE(partization3(Graph(0), 0));
	auto three = partization3(Graph(3), 0);
	ASSERT_TRUE(three);
	EXPECT_EQ(three->remainder_plan.size(), 3u);
	EXPECT_EQ(three->remainder_plan[0].pattern, Pattern::isolated_vertex);
}

TEST(Partization2, Examples) {
	auto k3 = partization2(named::complete(3), 1);
	ASSERT_TRUE(k3);
	EXPECT_EQ(remainder(named::complete(3), *k3), named::path(2));
	auto c5 = partization2(named::cycle(5), 1);
	ASSERT_TRUE(c5);
	auto p4 = remainder(named::cycle(5), *c5);
	EXPECT_EQ(p4.order(), 4u);
	EXPECT_EQ(p4.size(), 3u);
	EXPECT_TRUE(is_connected(p4));
	EXPECT_FALSE(partization2(named::complete(4), 1));
	EXPECT_TRUE(partization2(Graph(2), 0));
	EXPECT_FALSE(partization2(Graph(3), 0));
}

TEST(PartizationBruteforce, Examples) {
	EXPECT_TRUE(partization_bruteforce(named::complete(5), 2, 3));
	EXPECT_FALSE(partization_bruteforce(named::complete(5), 1, 3));
	for (std::size_t q = 0; q <= 3; ++q) {
		auto all = partization_bruteforce(named::cycle(7), 7, q);
		ASSERT_TRUE(all);
	}
	EXPECT_THROW(partization_bruteforce(named::petersen(), 1, 3), capacity_error);
}

TEST(PartizationBruteforce, MatchesOracle) {
	Rng rng(41);
	for (const auto& g : small_graphs(313, 150, 7)) {
		std::size_t q = 1 + rng.below(4);
		auto best = oracle::min_partization(g, q);
		for (std::size_t k = 0; k <= 3; ++k) {
			auto s = partization_bruteforce(g, k, q);
			ASSERT_EQ(s.has_value(), best <= k);
			if (s && q <= 3)
				expect_certified(g, *s, k, q);
			else if (s)
				EXPECT_TRUE(validate_cd_coloring(remainder(g, *s), s->coloring).ok);
		}
	}
}

TEST(Partization, AgreesWithOracle) {
	for (const auto& g : small_graphs(317, 300, 8)) {
		auto best3 = oracle::min_partization(g, 3), best2 = oracle::min_partization(g, 2);
		for (std::size_t k = 0; k <= 3; ++k) {
			auto s3 = partization3(g, k);
			ASSERT_EQ(s3.has_value(), best3 <= k) << "q=3 k=" << k;
			if (s3)
				expect_certified(g, *s3, k, 3);
			auto s2 = partization2(g, k);
			ASSERT_EQ(s2.has_value(), best2 <= k) << "q=2 k=" << k;
			if (s2)
				expect_certified(g, *s2, k, 2);
		}
	}
}

TEST(Partization, NamedGraphs) {
	for (const auto& [name, g] : named::corpus()) {
		if (g.order() > 9)
			continue;
		for (std::size_t k = 0; k <= 3; ++k) {
			EXPECT_EQ(partization3(g, k).has_value(), partization_bruteforce(g, k, 3).has_value()) << name;
			EXPECT_EQ(partization2(g, k).has_value(), partization_bruteforce(g, k, 2).has_value()) << name;
		}
	}
}

TEST(Partization, MonotoneInBudget) {
	for (const auto& g : small_graphs(331, 150, 9)) {
		bool prev3 = false, prev2 = false;
		for (std::size_t k = 0; k <= 4; ++k) {
			bool now3 = partization3(g, k).has_value(), now2 = partization2(g, k).has_value();
			EXPECT_TRUE(!prev3 || now3);
			EXPECT_TRUE(!prev2 || now2);
			prev3 = now3;
			prev2 = now2;
		}
	}
}

TEST(Partization, ThreadCountDoesNotChangeTheAnswer) {
	Rng rng(43);
	for (const auto& g : small_graphs(337, 80, 9)) {
		std::size_t k = rng.below(4);
		auto a = partization3(g, k, {1}), b = partization3(g, k, {4});
		ASSERT_EQ(a.has_value(), b.has_value());
		if (a) {
			EXPECT_EQ(a->deleted, b->deleted);
			EXPECT_EQ(a->coloring, b->coloring);
		}
	}
}
