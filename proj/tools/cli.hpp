#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cdcol/cdcol.hpp"

namespace cdcol::cli {

// Exit codes: 0 yes / solved, 1 no, 2 error or invalid certificate.
enum Exit { yes = 0, no = 1, failure = 2 };

namespace detail {

inline std::string read_file(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw error("cannot open " + path);
	std::ostringstream os;
	os << in.rdbuf();
	return os.str();
}

inline void write_file(const std::string& path, const std::string& text) {
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw error("cannot write " + path);
	out << text;
}

inline Graph load(const std::string& path) { return parse_graph(read_file(path)); }

struct Output {
	bool json_out = false;
	std::string cert_path;

	void add(CLI::App& cmd) {
		cmd.add_flag("--json", json_out, "Print the certificate as JSON instead of a summary");
		cmd.add_option("--cert", cert_path, "Write the certificate to this file");
	}

	// Summary or JSON to `out`; the certificate also goes to --cert when given.
	void emit(std::ostream& out, const std::string& summary, const json& cert) const {
		if (!cert_path.empty() && !cert.is_null())
			write_file(cert_path, cert.dump(2) + "\n");
		if (json_out)
			out << cert.dump(2) << '\n';
		else
			out << summary << '\n';
	}
};

inline std::string labels(const Graph& g, const VertexSet& s) {
	std::string out = "{";
	for (vertex v : s)
		out += (out.size() > 1 ? "," : "") + std::to_string(g.label(v));
	return out + "}";
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
	CLI::App app{"cd-colouring solvers: cd-chromatic number, recognition, total domination, partization"};
	app.require_subcommand(1);
	unsigned threads = 1;
	auto add_threads = [&](CLI::App* c) {
		c->add_option("--threads", threads, "Worker threads (results do not depend on it)")
		    ->check(CLI::Range(1u, 256u));
	};
	int code = yes;
	Graph g;

	// cdnumber
	auto* cdnumber = app.add_subcommand("cdnumber", "cd-chromatic number with a colouring certificate");
	std::string cd_file, backend = "auto";
	bool use_exact = false, use_girth5 = false, use_split = false, use_brute = false;
	std::size_t cap = default_exact_cap;
	detail::Output cd_out;
	auto* methods = cdnumber->add_option_group("method");
	methods->add_flag("--exact", use_exact, "Subset-polynomial solver (default)");
	methods->add_flag("--girth5", use_girth5, "Total domination path for girth >= 5");
	methods->add_flag("--split", use_split, "Clique number of a split graph");
	methods->add_flag("--brute", use_brute, "Exhaustive search (n <= 9)");
	methods->require_option(0, 1);
	cdnumber->add_option("--cap", cap, "Largest n the exact solver accepts")->check(CLI::Range(1, 30));
	cdnumber->add_option("--backend", backend, "Star-product backend")
	    ->check(CLI::IsMember({"auto", "layered", "ranked"}));
	cdnumber->add_option("file", cd_file, "Graph (DIMACS or edge list)")->required();
	cd_out.add(*cdnumber);
	add_threads(cdnumber);
	cdnumber->callback([&] {
		g = detail::load(cd_file);
		ChromaticResult r;
		std::string method = "exact";
		if (use_girth5) {
			method = "girth5";
			r = cd_chromatic_girth5(g, Parallelism{threads});
		} else if (use_split) {
			method = "split";
			r = split_cd_coloring(g);
		} else if (use_brute) {
			method = "brute";
			r = cd_chromatic_bruteforce(g);
		} else {
			auto b = backend == "layered" ? StarBackend::layered
			         : backend == "ranked" ? StarBackend::ranked_zeta
			                               : StarBackend::automatic;
			r = cd_chromatic_exact(g, ExactOptions{cap, b, Parallelism{threads}});
		}
		auto cert = coloring_certificate(g, r.witness);
		cert["method"] = method;
		cd_out.emit(out, "q=" + std::to_string(r.q), cert);
	});

	// recognize
	auto* recognize = app.add_subcommand("recognize", "Decide chi_cd <= q for q <= 3 with a type witness");
	std::size_t rq = 3;
	std::string rfile;
	detail::Output r_out;
	recognize->add_option("--q", rq, "Threshold")->required()->check(CLI::Range(1, 3));
	recognize->add_option("file", rfile, "Graph")->required();
	r_out.add(*recognize);
	recognize->callback([&] {
		g = detail::load(rfile);
		auto r = cd_recognize_upto3(g, rq);
		if (!r) {
			code = no;
			r_out.emit(out, "no: chi_cd > " + std::to_string(rq), json{{"kind", "recognition"}, {"answer", "no"}});
			return;
		}
		std::string types;
		for (const auto& c : r->components)
			types += (types.empty() ? "" : ",") + std::string("type") + std::to_string(c.witness.type_id);
		auto cert = recognition_certificate(g, *r);
		cert["answer"] = "yes";
		r_out.emit(out, "yes: q=" + std::to_string(r->q) + " components=" + types, cert);
	});

	// tds
	auto* tds = app.add_subcommand("tds", "Total dominating set of size <= k on a graph of girth >= 5");
	std::size_t tk = 0;
	std::string tfile, kernel_out;
	detail::Output t_out;
	tds->add_option("--k", tk, "Budget")->required()->check(CLI::Range(1, 1000));
	tds->add_option("file", tfile, "Graph")->required();
	tds->add_option("--kernel-out", kernel_out, "Write the reduced instance as DIMACS");
	t_out.add(*tds);
	add_threads(tds);
	tds->callback([&] {
		g = detail::load(tfile);
		if (!kernel_out.empty()) {
			auto kern = tds_kernelize(g, tk);
			std::vector<std::string> notes{"tds kernel for k=" + std::to_string(tk)};
			if (kern.verdict == KernelVerdict::no) {
				notes.push_back("verdict no: " + kern.reason);
				detail::write_file(kernel_out, write_dimacs(Graph(0), notes));
			} else {
				std::string forced = "forced";
				for (vertex v : kern.forced)
					forced += " " + std::to_string(g.label(v));
				notes.push_back(forced);
				for (vertex i = 0; i < kern.back_map.size(); ++i)
					notes.push_back("kernel " + std::to_string(i + 1) + " original " +
					                std::to_string(g.label(kern.back_map[i])));
				detail::write_file(kernel_out, write_dimacs(kern.kernel, notes));
			}
		}
		auto r = tds_solve(g, tk, Parallelism{threads});
		if (!r) {
			code = no;
			t_out.emit(out, "no: no total dominating set of size <= " + std::to_string(tk),
			           json{{"kind", "tds"}, {"answer", "no"}});
			return;
		}
		auto cert = tds_certificate(g, *r);
		cert["answer"] = "yes";
		t_out.emit(out, "yes: size=" + std::to_string(r->size()) + " set=" + detail::labels(g, r->set), cert);
	});

	// partize
	auto* partize = app.add_subcommand("partize", "Delete at most k vertices to reach chi_cd <= q");
	std::size_t pq = 3, pk = 0;
	std::string pfile;
	bool p_split = false, p_brute = false;
	detail::Output p_out;
	partize->add_option("--q", pq, "Target cd-chromatic number")->required()->check(CLI::Range(0, 1000));
	partize->add_option("--k", pk, "Deletion budget")->required();
	partize->add_option("file", pfile, "Graph")->required();
	partize->add_flag("--split", p_split, "Split-graph brancher");
	partize->add_flag("--brute", p_brute, "Exhaustive search (n <= 9)");
	p_out.add(*partize);
	add_threads(partize);
	partize->callback([&] {
		g = detail::load(pfile);
		std::optional<DeletionSolution> sol;
		if (p_split) {
			if (auto del = split_partization(g, pk, pq)) {
				auto rest = remove_vertices(g, *del);
				sol = DeletionSolution{*del, {}, rest.to_parent, split_cd_coloring(rest.graph).witness};
			}
		} else if (p_brute || (pq != 2 && pq != 3)) {
			if (!p_brute)
				err << "warning: q=" << pq << " has no FPT solver; using exhaustive search (n <= "
				    << partization_bruteforce_max_n << ")\n";
			sol = partization_bruteforce(g, pk, pq);
		} else {
			sol = pq == 2 ? partization2(g, pk, Parallelism{threads}) : partization3(g, pk, Parallelism{threads});
		}
		if (!sol) {
			code = no;
			p_out.emit(out, "no", json{{"kind", "partization"}, {"answer", "no"}, {"k", pk}, {"q", pq}});
			return;
		}
		auto cert = partization_certificate(g, *sol, pk, pq);
		cert["answer"] = "yes";
		std::string pattern;
		for (const auto& part : sol->remainder_plan)
			pattern += (pattern.empty() ? "" : "+") + pattern_name(part.pattern);
		p_out.emit(out,
		           "yes: deleted=" + detail::labels(g, sol->deleted) +
		               " colors=" + std::to_string(sol->coloring.num_colors()) +
		               (pattern.empty() ? "" : " remainder=" + pattern),
		           cert);
	});

	// gen
	auto* gen = app.add_subcommand("gen", "Instance generators");
	gen->require_subcommand(1);
	std::uint64_t seed = 1;
	std::string gen_out, sidecar;
	auto add_common = [&](CLI::App* c) {
		c->add_option("--out", gen_out, "Write the graph here instead of standard output");
		c->add_option("--sidecar", sidecar, "Write provenance and expected answer as JSON");
	};
	auto emit_instance = [&](const GeneratedInstance& inst, json meta) {
		json prov = json::object();
		for (vertex v = 0; v < inst.graph.order(); ++v)
			prov[std::to_string(inst.graph.label(v))] = inst.provenance[v];
		meta["k"] = inst.k;
		meta["q"] = inst.q;
		meta["expected"] = inst.expected ? json(*inst.expected ? "yes" : "no") : json(nullptr);
		meta["provenance"] = std::move(prov);
		auto text = write_dimacs(inst.graph, {"generated instance: k=" + std::to_string(inst.k) +
		                                          " q=" + std::to_string(inst.q)});
		if (gen_out.empty())
			out << text;
		else
			detail::write_file(gen_out, text);
		if (!sidecar.empty())
			detail::write_file(sidecar, meta.dump(2) + "\n");
	};

	auto* gsc = gen->add_subcommand("setcover", "Random set cover instance as split-graph partization");
	std::size_t su = 3, sm = 3, sk = 1;
	double sp = 0.5;
	gsc->add_option("--universe", su, "Universe size")->check(CLI::Range(1, 64));
	gsc->add_option("--sets", sm, "Number of sets")->check(CLI::Range(1, 64));
	gsc->add_option("--k", sk, "Set cover budget")->required();
	gsc->add_option("--density", sp, "Membership probability")->check(CLI::Range(0.0, 1.0));
	gsc->add_option("--seed", seed, "Random seed");
	add_common(gsc);
	gsc->callback([&] {
		Rng rng(seed);
		auto family = random_set_family(su, sm, sp, rng);
		auto inst = generate_from_setcover(su, family, sk);
		json sets = json::array();
		for (const auto& s : family) {
			json one = json::array();
			for (auto x : s)
				one.push_back(x + 1);
			sets.push_back(std::move(one));
		}
		emit_instance(inst, json{{"source", "setcover"}, {"seed", seed}, {"universe", su}, {"sets", sets},
		                         {"setcover_k", sk}});
	});

	auto* glift = gen->add_subcommand("lift", "Vertex cover / odd cycle transversal as cd-partization");
	std::string lfile;
	std::size_t lk = 0, lq = 1;
	glift->add_option("file", lfile, "Base graph")->required();
	glift->add_option("--k", lk, "Deletion budget")->required();
	glift->add_option("--qbase", lq, "1 (vertex cover) or 2 (odd cycle transversal)")->check(CLI::Range(1, 2));
	add_common(glift);
	glift->callback([&] {
		auto base = detail::load(lfile);
		emit_instance(generate_from_partization(base, lk, lq), json{{"source", "lift"}, {"qbase", lq}});
	});

	auto* grand = gen->add_subcommand("random", "Random graph");
	std::size_t rn = 10, extra = 20;
	double rp = 0.3;
	std::string family = "gnp";
	grand->add_option("--n", rn, "Number of vertices")->check(CLI::Range(0, 4096));
	grand->add_option("--p", rp, "Edge probability (gnp)")->check(CLI::Range(0.0, 1.0));
	grand->add_option("--family", family, "gnp, girth5 or split")->check(CLI::IsMember({"gnp", "girth5", "split"}));
	grand->add_option("--extra", extra, "Edge attempts on top of the tree (girth5)");
	grand->add_option("--seed", seed, "Random seed");
	add_common(grand);
	grand->callback([&] {
		Rng rng(seed);
		Graph r = family == "girth5" ? random_girth5(rn, extra, rng)
		          : family == "split" ? random_split(rn, rng)
		                              : random_gnp(rn, rp, rng);
		auto text = write_dimacs(r, {"random " + family + " n=" + std::to_string(rn) + " seed=" + std::to_string(seed)});
		if (gen_out.empty())
			out << text;
		else
			detail::write_file(gen_out, text);
	});

	// validate
	auto* validate = app.add_subcommand("validate", "Check a certificate against a graph");
	std::string vfile, vcert;
	validate->add_option("file", vfile, "Graph")->required();
	validate->add_option("cert", vcert, "Certificate JSON")->required();
	validate->callback([&] {
		g = detail::load(vfile);
		json cert;
		try {
			cert = json::parse(detail::read_file(vcert));
		} catch (const json::parse_error& e) {
			throw error(std::string("certificate is not valid JSON: ") + e.what());
		}
		auto report = validate_certificate(g, cert);
		if (report) {
			out << "valid\n";
		} else {
			code = failure;
			out << "invalid: " << report.violation << '\n';
		}
	});

	std::vector<const char*> argv{"cdcol"};
	for (const auto& a : args)
		argv.push_back(a.c_str());
	try {
		app.parse(static_cast<int>(argv.size()), argv.data());
	} catch (const CLI::ParseError& e) {
		int r = app.exit(e, out, err);
		return r == 0 ? yes : failure;
	} catch (const precondition_error& e) {
		err << "error: precondition violated: " << e.what();
		if (!e.witness.empty()) {
			err << " (witness:";
			for (vertex v : e.witness)
				err << ' ' << (v < g.order() ? g.label(v) : static_cast<std::int64_t>(v + 1));
			err << ')';
		}
		err << '\n';
		return failure;
	} catch (const capacity_error& e) {
		err << "error: capacity exceeded: " << e.what() << '\n';
		return failure;
	} catch (const std::exception& e) {
		err << "error: " << e.what() << '\n';
		return failure;
	}
	return code;
}

} // namespace cdcol::cli
