#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "partization.hpp"
#include "recog3.hpp"
#include "tds.hpp"

namespace cdcol {

using json = nlohmann::ordered_json;

namespace detail {

inline json labels_of(const Graph& g, const VertexSet& s) {
	json out = json::array();
	for (vertex v : s)
		out.push_back(g.label(v));
	return out;
}

inline json labels_of(const Graph& g, const std::vector<vertex>& vs) {
	json out = json::array();
	for (vertex v : vs)
		out.push_back(g.label(v));
	return out;
}

// Classes and dominators of a colouring of induced(g, kept), as labels of g.
inline void put_coloring(json& out, const Graph& g, const CdColoring& c, const std::vector<vertex>& kept) {
	json classes = json::array(), doms = json::array();
	for (const auto& cls : c.classes()) {
		json one = json::array();
		for (vertex v : cls)
			one.push_back(g.label(kept[v]));
		classes.push_back(std::move(one));
	}
	for (vertex d : c.dominator)
		doms.push_back(g.label(kept[d]));
	out["classes"] = std::move(classes);
	out["dominators"] = std::move(doms);
}

inline std::vector<vertex> identity(std::size_t n) {
	std::vector<vertex> out(n);
	for (vertex v = 0; v < n; ++v)
		out[v] = v;
	return out;
}

inline json witness_json(const Graph& g, const TypeWitness& w, const VertexSet& component) {
	json parts = json::object();
	for (const auto& [name, s] : w.parts)
		parts[name] = labels_of(g, s);
	return json{{"type", w.type_id},
	            {"dominators", labels_of(g, w.dominators)},
	            {"parts", std::move(parts)},
	            {"vertices", labels_of(g, component)}};
}

} // namespace detail

inline json coloring_certificate(const Graph& g, const CdColoring& c) {
	json out{{"kind", "coloring"}, {"q", c.num_colors()}};
	detail::put_coloring(out, g, c, detail::identity(g.order()));
	return out;
}

inline json tds_certificate(const Graph& g, const TdsCertificate& t) {
	return json{{"kind", "tds"}, {"size", t.size()}, {"set", detail::labels_of(g, t.set)}};
}

inline json recognition_certificate(const Graph& g, const Recognition& r) {
	json comps = json::array();
	for (const auto& c : r.components) {
		auto w = detail::witness_json(g, c.witness, c.component);
		w["q"] = c.q;
		comps.push_back(std::move(w));
	}
	json out{{"kind", "recognition"}, {"q", r.q}, {"components", std::move(comps)}};
	detail::put_coloring(out, g, r.coloring, detail::identity(g.order()));
	return out;
}

inline json partization_certificate(const Graph& g, const DeletionSolution& s, std::size_t k, std::size_t q) {
	json plan = json::array();
	for (const auto& part : s.remainder_plan) {
		json w{{"pattern", pattern_name(part.pattern)}};
		w.update(detail::witness_json(g, part.witness, part.component));
		plan.push_back(std::move(w));
	}
	json out{{"kind", "partization"},
	         {"k", k},
	         {"q", q},
	         {"deleted", detail::labels_of(g, s.deleted)},
	         {"remainder", std::move(plan)}};
	detail::put_coloring(out, g, s.coloring, s.kept);
	out["colors"] = s.coloring.num_colors();
	return out;
}

namespace detail {

class LabelIndex {
public:
	explicit LabelIndex(const Graph& g) {
		for (vertex v = 0; v < g.order(); ++v)
			index_.emplace(g.label(v), v);
	}
	// Vertex with this label, or nothing (after recording a complaint).
	std::optional<vertex> find(const json& label, std::string& complaint) const {
		if (!label.is_number_integer()) {
			complaint = "vertex label " + label.dump() + " is not an integer";
			return std::nullopt;
		}
		auto it = index_.find(label.get<std::int64_t>());
		if (it == index_.end()) {
			complaint = "unknown vertex label " + label.dump();
			return std::nullopt;
		}
		return it->second;
	}

private:
	std::map<std::int64_t, vertex> index_;
};

inline ValidationReport check_tds(const Graph& g, const json& cert, const LabelIndex& idx) {
	auto fail = [](std::string why) { return ValidationReport{false, std::move(why)}; };
	if (!cert["set"].is_array())
		return fail("field 'set' is not an array");
	VertexSet s(g.order());
	std::string why;
	for (const auto& l : cert["set"]) {
		auto v = idx.find(l, why);
		if (!v)
			return fail(why);
		s.insert(*v);
	}
	if (cert.contains("size") && cert["size"] != s.size())
		return fail("declared size " + cert["size"].dump() + " but the set has " + std::to_string(s.size()) +
		            " distinct vertices");
	VertexSet covered(g.order());
	for (vertex v : s)
		covered |= g.neighbors(v);
	if (auto miss = (g.vertices() - covered).first())
		return fail("vertex " + std::to_string(g.label(*miss)) + " has no neighbour in the set");
	return {};
}

inline ValidationReport check_coloring(const Graph& g, const json& cert, const LabelIndex& idx) {
	auto fail = [](std::string why) { return ValidationReport{false, std::move(why)}; };
	std::string why;
	VertexSet deleted(g.order());
	if (cert.contains("deleted")) {
		if (!cert["deleted"].is_array())
			return fail("field 'deleted' is not an array");
		for (const auto& l : cert["deleted"]) {
			auto v = idx.find(l, why);
			if (!v)
				return fail(why);
			deleted.insert(*v);
		}
		if (cert.contains("k") && cert["k"].is_number_integer() && deleted.size() > cert["k"].get<std::size_t>())
			return fail(std::to_string(deleted.size()) + " deleted vertices exceed k = " + cert["k"].dump());
	}
	if (!cert["classes"].is_array() || !cert.contains("dominators") || !cert["dominators"].is_array())
		return fail("fields 'classes' and 'dominators' must be arrays");
	if (cert["classes"].size() != cert["dominators"].size())
		return fail("number of classes and dominators differ");
	auto rest = remove_vertices(g, deleted);
	std::vector<vertex> local(g.order(), g.order());
	for (vertex i = 0; i < rest.to_parent.size(); ++i)
		local[rest.to_parent[i]] = i;
	const std::size_t q = cert["classes"].size();
	CdColoring c;
	c.color.assign(rest.graph.order(), q);
	for (std::size_t i = 0; i < q; ++i) {
		if (!cert["classes"][i].is_array())
			return fail("class " + std::to_string(i) + " is not an array");
		for (const auto& l : cert["classes"][i]) {
			auto v = idx.find(l, why);
			if (!v)
				return fail(why);
			if (deleted.contains(*v))
				return fail("deleted vertex " + l.dump() + " is coloured");
			if (c.color[local[*v]] != q)
				return fail("vertex " + l.dump() + " appears in two classes");
			c.color[local[*v]] = i;
		}
		auto d = idx.find(cert["dominators"][i], why);
		if (!d)
			return fail(why);
		if (deleted.contains(*d))
			return fail("dominator " + cert["dominators"][i].dump() + " was deleted");
		c.dominator.push_back(local[*d]);
	}
	auto declared = [&](const char* field) {
		return cert.contains(field) && cert[field].is_number_integer() ? std::optional{cert[field].get<std::size_t>()}
		                                                                : std::nullopt;
	};
	// Partization certificates carry the bound q and the colour count separately.
	if (cert.contains("colors")) {
		if (declared("colors") != q)
			return fail("declared colors = " + cert["colors"].dump() + " but " + std::to_string(q) +
			            " classes are given");
		if (auto bound = declared("q"); bound && q > *bound)
			return fail(std::to_string(q) + " classes exceed q = " + cert["q"].dump());
	} else if (cert.contains("q") && declared("q") != q) {
		return fail("declared q = " + cert["q"].dump() + " but " + std::to_string(q) + " classes are given");
	}
	return validate_cd_coloring(rest.graph, c);
}

} // namespace detail

// Checks a certificate against the graph: a 'set' field is a total dominating
// set, a 'classes' field a cd-colouring of the graph minus 'deleted'.
inline ValidationReport validate_certificate(const Graph& g, const json& cert) {
	if (!cert.is_object())
		return {false, "certificate is not a JSON object"};
	detail::LabelIndex idx(g);
	if (cert.contains("set"))
		return detail::check_tds(g, cert, idx);
	if (cert.contains("classes"))
		return detail::check_coloring(g, cert, idx);
	return {false, "certificate has neither 'set' nor 'classes'"};
}

} // namespace cdcol
