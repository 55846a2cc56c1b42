// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/resource.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "support/oracles.hpp"

using namespace cdcol;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
	bool ok = true;
	std::string detail;
};

// Collects the first few failures; `ok` is false once anything failed.
class Tally {
public:
	void check(bool cond, const std::string& what) {
		++checks_;
		if (cond)
			return;
		if (failures_++ < 3)
			first_ += (first_.empty() ? "" : "; ") + what;
	}
	Verdict verdict(const std::string& summary) const {
		if (failures_ == 0)
			return {true, summary + ", " + std::to_string(checks_) + " checks"};
		return {false, std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed: " + first_};
	}

private:
	std::size_t checks_ = 0, failures_ = 0;
	std::string first_;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fixed(double x, int digits = 1) {
	std::ostringstream os;
	os.precision(digits);
	os << std::fixed << x;
	return os.str();
}

Graph random_graph(Rng& rng, std::size_t max_n, std::initializer_list<double> ps) {
	std::vector<double> choices(ps);
	return random_gnp(1 + rng.below(max_n), choices[rng.below(choices.size())], rng);
}

Graph random_connected(Rng& rng, std::size_t max_n) {
	while (true) {
		auto g = random_graph(rng, max_n, {0.25, 0.4, 0.6, 0.8});
		if (is_connected(g))
			return g;
	}
}

oracle::mask to_mask(const VertexSet& s) {
	oracle::mask m = 0;
	for (vertex v : s)
		m |= oracle::bit(v);
	return m;
}

std::string name_of(const Graph& g) {
	return "n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size());
}

Verdict exact_matches_bruteforce() {
	auto t0 = Clock::now();
	Tally t;
	Rng rng(1001);
	const double ps[] = {0.2, 0.5, 0.8};
	for (int i = 0; i < 540; ++i) {
		auto g = random_gnp(1 + rng.below(8), ps[i % 3], rng);
		auto exact = cd_chromatic_exact(g);
		t.check(exact.q == cd_chromatic_bruteforce(g).q, "random " + name_of(g));
		t.check(validate_cd_coloring(g, exact.witness).ok, "witness " + name_of(g));
	}
	for (const auto& [name, g] : named::corpus()) {
		auto exact = cd_chromatic_exact(g);
		// The Petersen graph is past the brute-force cap; the subset oracle covers it.
		auto truth = g.order() <= bruteforce_cap ? cd_chromatic_bruteforce(g).q : oracle::chi_cd(g);
		t.check(exact.q == truth, name);
		t.check(validate_cd_coloring(g, exact.witness).ok, std::string(name) + " witness");
	}
	double secs = seconds_since(t0);
	t.check(secs < 300, "runtime " + fixed(secs) + " s");
	return t.verdict("540 random + " + std::to_string(named::corpus().size()) + " named graphs in " + fixed(secs) + " s");
}

Verdict star_product_semantics() {
	Tally t;
	Rng rng(1003);
	const StarBackend backends[] = {StarBackend::automatic, StarBackend::layered, StarBackend::ranked_zeta};
	for (int i = 0; i < 120; ++i) {
		unsigned n = 1 + static_cast<unsigned>(rng.below(10));
		CoefficientTable p(n), r(n);
		double dp = 0.05 + 0.4 * rng.uniform(), dr = 0.05 + 0.4 * rng.uniform();
		for (mask_t m = 1; m <= p.full_mask(); ++m) {
			if (rng.chance(dp))
				p.set(m);
			if (rng.chance(dr))
				r.set(m);
		}
		std::vector<oracle::mask> a, b;
		for (auto m : p.members())
			a.push_back(m);
		for (auto m : r.members())
			b.push_back(m);
		auto expect = oracle::disjoint_unions(a, b, n);
		for (auto be : backends) {
			auto got = star_product(p, r, be, Parallelism{i % 2 ? 3u : 1u});
			bool same = true;
			for (mask_t m = 0; m <= got.full_mask(); ++m)
				same = same && got.test(m) == expect[m];
			t.check(same, "family " + std::to_string(i) + " n=" + std::to_string(n));
		}
	}
	return t.verdict("120 random family pairs, n <= 10, three backends");
}

Verdict named_values() {
	Tally t;
	struct Expect {
		std::string name;
		Graph g;
		std::size_t q;
	};
	std::vector<Expect> cases{{"C4", named::cycle(4), 2}, {"C5", named::cycle(5), 3}, {"C6", named::cycle(6), 4},
	                          {"Petersen", named::petersen(), 4}};
	for (std::size_t n = 1; n <= 6; ++n)
		cases.push_back({"K" + std::to_string(n), named::complete(n), n});
	std::string shown;
	for (const auto& c : cases) {
		auto brute = oracle::chi_cd(c.g);
		auto exact = cd_chromatic_exact(c.g).q;
		t.check(brute == c.q, c.name + " oracle gives " + std::to_string(brute));
		t.check(exact == c.q, c.name + " solver gives " + std::to_string(exact));
		shown += (shown.empty() ? "" : " ") + c.name + "=" + std::to_string(exact);
	}
	return t.verdict(shown);
}

Verdict exact_scaling() {
	Tally t;
	Rng rng(1009);
	double worst = 0;
	for (double p : {0.2, 0.5, 0.8}) {
		auto g = random_gnp(20, p, rng);
		auto t0 = Clock::now();
		auto r = cd_chromatic_exact(g);
		double secs = seconds_since(t0);
		worst = std::max(worst, secs);
		t.check(validate_cd_coloring(g, r.witness).ok, "witness at p=" + fixed(p));
		t.check(secs < 600, "p=" + fixed(p) + " took " + fixed(secs) + " s");
	}
	rusage usage{};
	getrusage(RUSAGE_SELF, &usage);
	double mib = static_cast<double>(usage.ru_maxrss) / 1024.0;
	t.check(mib < 2048, "peak memory " + fixed(mib) + " MiB");
	return t.verdict("n=20, slowest " + fixed(worst) + " s, peak RSS " + fixed(mib, 0) + " MiB");
}

Verdict girth5_path() {
	Tally t;
	Rng rng(1013);
	std::size_t solved = 0, largest_kernel = 0, small = 0;
	while (solved < 320) {
		std::size_t n = 2 + rng.below(17);
		auto g = random_girth5(n, rng.below(3 * n), rng, 1 + rng.below(3));
		t.check(oracle::girth(g).value_or(99) >= 5, "generator produced girth < 5");
		for (std::size_t k = 1; k <= 4; ++k) {
			auto kern = tds_kernelize(g, k);
			if (kern.verdict == KernelVerdict::reduced) {
				largest_kernel = std::max(largest_kernel, kern.kernel.order());
				t.check(kern.kernel.order() <= tds_kernel_constant * k * k * k, "kernel size at k=" + std::to_string(k));
			}
		}
		std::size_t k = 1 + rng.below(4);
		auto fast = tds_solve(g, k);
		auto slow = tds_bruteforce(g, k);
		t.check(fast.has_value() == slow.has_value(), "existence " + name_of(g) + " k=" + std::to_string(k));
		if (fast && slow) {
			t.check(fast->size() == slow->size(), "size " + name_of(g));
			t.check(is_total_dominating(g, fast->set), "certificate " + name_of(g));
		}
		++solved;
		if (n <= 9) {
			++small;
			auto r = cd_chromatic_girth5(g);
			t.check(r.q == oracle::chi_cd(g), "chi_cd " + name_of(g));
			t.check(validate_cd_coloring(g, r.witness).ok, "colouring " + name_of(g));
		}
	}
	return t.verdict(std::to_string(solved) + " instances (n <= 18, k <= 4), largest kernel " +
	                 std::to_string(largest_kernel) + ", " + std::to_string(small) + " chi_cd checks");
}

Verdict recognition() {
	Tally t;
	Rng rng(1019);
	std::size_t yes = 0;
	for (int i = 0; i < 2200; ++i) {
		auto g = random_connected(rng, 7);
		auto chi = oracle::chi_cd(g);
		auto r = cd_recognize_upto3(g);
		t.check(r.has_value() == (chi <= 3), "verdict " + name_of(g));
		if (!r)
			continue;
		++yes;
		t.check(r->q == chi, "q " + name_of(g));
		t.check(validate_cd_coloring(g, r->coloring).ok, "colouring " + name_of(g));
		for (const auto& c : r->components) {
			auto sub = induced(g, c.component);
			t.check(validate_cd_coloring(sub.graph, c.witness.coloring).ok, "witness " + name_of(g));
		}
	}
	return t.verdict("2200 connected graphs n <= 7, " + std::to_string(yes) + " with chi_cd <= 3");
}

void check_partization(Tally& t, const Graph& g, const std::string& label) {
	for (std::size_t k = 0; k <= 3; ++k)
		for (std::size_t q : {2, 3}) {
			bool truth = g.order() <= partization_bruteforce_max_n ? partization_bruteforce(g, k, q).has_value()
			                                                       : oracle::min_partization(g, q) <= k;
			auto got = q == 2 ? partization2(g, k) : partization3(g, k);
			std::string where = label + " k=" + std::to_string(k) + " q=" + std::to_string(q);
			t.check(got.has_value() == truth, where);
			if (!got)
				continue;
			t.check(got->deleted.size() <= k, "budget " + where);
			auto rest = remove_vertices(g, got->deleted).graph;
			t.check(validate_cd_coloring(rest, got->coloring).ok && got->coloring.num_colors() <= q,
			        "certificate " + where);
			for (const auto& part : got->remainder_plan)
				for (vertex d : part.witness.dominators)
					t.check(!got->deleted.contains(d), "deleted dominator " + where);
		}
}

Verdict partization() {
	Tally t;
	Rng rng(1021);
	for (int i = 0; i < 320; ++i) {
		auto g = random_graph(rng, 8, {0.25, 0.4, 0.55, 0.7, 0.85});
		check_partization(t, g, "random " + name_of(g));
	}
	for (const auto& [name, g] : named::corpus())
		check_partization(t, g, name);

	// Gadget correspondences, every vertex of every graph.
	std::size_t gadgets = 0;
	for (int i = 0; i < 120; ++i) {
		auto g = random_graph(rng, 8, {0.25, 0.45, 0.65});
		for (vertex v = 0; v < g.order(); ++v) {
			auto keep_v = oracle::min_constrained_oct(g, oracle::bit(v));
			auto gad = build_exclusion_gadget(g, v);
			if (gad.graph.order() <= 16) {
				++gadgets;
				t.check(oracle::min_constrained_oct(gad.graph) == keep_v, "exclusion gadget " + name_of(g));
			}
			for (std::size_t k = 0; k <= 3; ++k) {
				auto r = oct_excluding(g, v, k);
				t.check(r.has_value() == (keep_v && *keep_v <= k), "oct_excluding " + name_of(g));
			}
		}
		for (std::size_t k = 0; k <= 2; ++k) {
			VertexSet p(g.order()), q(g.order());
			for (vertex v = 0; v < g.order(); ++v) {
				auto roll = rng.below(4);
				if (roll == 0)
					p.insert(v);
				else if (roll == 1)
					q.insert(v);
			}
			auto direct = oracle::min_constrained_oct(g, 0, to_mask(p), to_mask(q));
			bool truth = direct && *direct <= k;
			auto gad = build_forcing_gadget(g, p, q, k);
			if (gad.graph.order() <= 16) {
				++gadgets;
				auto in_gadget = oracle::min_constrained_oct(gad.graph);
				t.check((in_gadget && *in_gadget <= k) == truth, "forcing gadget " + name_of(g));
			}
			t.check(oct_with_forced_sides(g, p, q, std::nullopt, k).has_value() == truth, "forced sides " + name_of(g));
		}
	}
	return t.verdict("320 random + named graphs, k <= 3, q in {2,3}; " + std::to_string(gadgets) +
	                 " gadget graphs checked");
}

Verdict split_graphs() {
	Tally t;
	Rng rng(1031);
	for (int i = 0; i < 220; ++i) {
		auto g = random_split(1 + rng.below(9), rng);
		t.check(oracle::split(g) && is_connected(g), "generator " + name_of(g));
		auto r = split_cd_coloring(g);
		t.check(r.q == oracle::clique_number(g), "omega " + name_of(g));
		t.check(r.q == oracle::chi_cd(g), "chi_cd " + name_of(g));
		t.check(validate_cd_coloring(g, r.witness).ok, "colouring " + name_of(g));
	}
	std::size_t covers = 0, lifts = 0;
	for (std::size_t n = 1; n <= 5; ++n)
		for (std::size_t m = 1; m <= 5; ++m)
			for (int rep = 0; rep < 3; ++rep) {
				auto sets = random_set_family(n, m, 0.2 + 0.2 * rep, rng);
				auto best = oracle::min_set_cover(n, sets);
				for (std::size_t k = 0; k <= m; ++k) {
					++covers;
					bool truth = best && *best <= k;
					auto inst = generate_from_setcover(n, sets, k);
					std::string where = "setcover n=" + std::to_string(n) + " m=" + std::to_string(m);
					t.check(inst.expected == truth, "expected " + where);
					t.check(split_partization(inst.graph, inst.k, inst.q).has_value() == truth, "split solver " + where);
					if (inst.graph.order() <= partization_bruteforce_max_n)
						t.check(partization_bruteforce(inst.graph, inst.k, inst.q).has_value() == truth,
						        "brute force " + where);
				}
			}
	for (int i = 0; i < 120; ++i) {
		auto g = random_graph(rng, 7, {0.3, 0.5, 0.7});
		for (std::size_t k = 0; k <= 3; ++k)
			for (std::size_t qb : {1, 2}) {
				++lifts;
				bool truth = qb == 1 ? oracle::min_vertex_cover(g) <= k : *oracle::min_constrained_oct(g) <= k;
				auto inst = generate_from_partization(g, k, qb);
				std::string where = "lift " + name_of(g) + " k=" + std::to_string(k) + " qbase=" + std::to_string(qb);
				t.check(inst.expected == truth, "expected " + where);
				bool solved = qb == 1 ? partization2(inst.graph, k).has_value() : partization3(inst.graph, k).has_value();
				t.check(solved == truth, "solver " + where);
			}
	}
	return t.verdict("220 split graphs, " + std::to_string(covers) + " set-cover and " + std::to_string(lifts) +
	                 " lifted instances");
}

struct Run {
	int code;
	std::string out;
};

Run cli(std::vector<std::string> args) {
	std::ostringstream out, err;
	int code = cdcol::cli::run(args, out, err);
	return {code, out.str()};
}

std::string slurp(const fs::path& p) {
	std::ifstream in(p);
	std::ostringstream os;
	os << in.rdbuf();
	return os.str();
}

Verdict determinism() {
	Tally t;
	auto dir = fs::temp_directory_path() / "cdcol_acceptance";
	fs::create_directories(dir);
	auto file = [&](const std::string& name) { return (dir / name).string(); };
	std::size_t certs = 0;
	for (int seed = 1; seed <= 8; ++seed) {
		std::string s = std::to_string(seed);
		std::vector<std::pair<std::string, std::vector<std::string>>> graphs{
		    {"gnp", {"gen", "random", "--n", "14", "--p", "0.3", "--seed", s}},
		    {"girth5", {"gen", "random", "--family", "girth5", "--n", "16", "--seed", s}},
		    {"split", {"gen", "random", "--family", "split", "--n", "12", "--seed", s}},
		    {"setcover", {"gen", "setcover", "--universe", "4", "--sets", "5", "--k", "2", "--seed", s}}};
		for (const auto& [family, args] : graphs) {
			auto a = cli(args), b = cli(args);
			t.check(a.code == 0 && a.out == b.out, family + " graph differs for seed " + s);
			auto graph = file(family + ".dimacs");
			std::ofstream(graph) << a.out;

			std::vector<std::vector<std::string>> solvers{{"cdnumber", graph}, {"partize", "--q", "3", "--k", "3", graph}};
			if (family == "girth5")
				solvers.push_back({"tds", "--k", "6", graph});
			if (family != "girth5")
				solvers.push_back({"recognize", "--q", "3", graph});
			for (auto solver : solvers) {
				auto run_with = [&](const std::string& threads, const std::string& cert) {
					auto args2 = solver;
					args2.insert(args2.end(), {"--threads", threads, "--cert", cert});
					return cli(args2);
				};
				auto c1 = file("one.json"), c2 = file("two.json"), c4 = file("four.json");
				fs::remove(c1);
				fs::remove(c2);
				fs::remove(c4);
				auto r1 = run_with("1", c1), r2 = run_with("1", c2), r4 = run_with("4", c4);
				std::string where = solver[0] + " on " + family + " seed " + s;
				t.check(r1.code == r2.code && r1.code == r4.code, "exit code " + where);
				t.check(slurp(c1) == slurp(c2), "single-thread certificates differ " + where);
				if (r1.code != 0)
					continue;
				++certs;
				auto j1 = json::parse(slurp(c1)), j4 = json::parse(slurp(c4));
				t.check(cli({"validate", graph, c4}).code == 0, "multi-thread certificate invalid " + where);
				for (const char* key : {"q", "size", "colors"})
					if (j1.contains(key))
						t.check(j1[key] == j4[key], std::string(key) + " differs " + where);
			}
		}
	}
	fs::remove_all(dir);
	return t.verdict(std::to_string(certs) + " certificates compared across runs and thread counts");
}

} // namespace

int main() {
	const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
	    {"exact solver matches brute force", exact_matches_bruteforce},
	    {"star product equals disjoint unions", star_product_semantics},
	    {"named cd-chromatic numbers", named_values},
	    {"exact solver at n=20", exact_scaling},
	    {"girth-5 kernel and total domination", girth5_path},
	    {"recognition of chi_cd <= 3", recognition},
	    {"partization and gadgets", partization},
	    {"split graphs and generators", split_graphs},
	    {"deterministic CLI output", determinism}};
	int failed = 0;
	for (std::size_t i = 0; i < criteria.size(); ++i) {
		const auto& [title, body] = criteria[i];
		auto t0 = Clock::now();
		Verdict v;
		try {
			v = body();
		} catch (const std::exception& e) {
			v = {false, std::string("exception: ") + e.what()};
		}
		failed += v.ok ? 0 : 1;
		std::cout << (v.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << title << " (" << v.detail
		          << "; " << fixed(seconds_since(t0)) << " s)" << std::endl;
	}
	return failed == 0 ? 0 : 1;
}
