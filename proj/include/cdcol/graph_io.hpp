#pragma once

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace cdcol {

enum class GraphFormat { autodetect, dimacs, edgelist };

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
	std::vector<std::string_view> out;
	std::size_t i = 0;
	while (i < line.size()) {
		while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
			++i;
		std::size_t j = i;
		while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
			++j;
		if (j > i)
			out.push_back(line.substr(i, j - i));
		i = j;
	}
	return out;
}

inline std::int64_t parse_int(std::string_view tok, std::size_t line) {
	std::int64_t v = 0;
	auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
	if (ec != std::errc{} || p != tok.data() + tok.size())
		throw parse_error(line, "expected an integer, got '" + std::string(tok) + "'");
	return v;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
	std::size_t line_no = 0, pos = 0;
	while (pos <= text.size()) {
		std::size_t nl = text.find('\n', pos);
		if (nl == std::string_view::npos)
			nl = text.size();
		++line_no;
		f(line_no, split_ws(text.substr(pos, nl - pos)));
		pos = nl + 1;
	}
}

inline bool is_comment(const std::vector<std::string_view>& toks) {
	return toks.empty() || toks[0] == "c";
}

inline Graph parse_dimacs(std::string_view text) {
	Graph g;
	bool have_header = false;
	std::vector<std::pair<std::size_t, std::int64_t>> labels;
	for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& t) {
		if (t.size() == 4 && t[0] == "c" && t[1] == "label") {
			labels.emplace_back(static_cast<std::size_t>(parse_int(t[2], line)), parse_int(t[3], line));
			return;
		}
		if (is_comment(t))
			return;
		if (t[0] == "p") {
			if (have_header)
				throw parse_error(line, "duplicate problem line");
			if (t.size() != 4 || (t[1] != "edge" && t[1] != "col"))
				throw parse_error(line, "malformed header, expected 'p edge <n> <m>'");
			auto n = parse_int(t[2], line);
			parse_int(t[3], line);
			if (n < 0)
				throw parse_error(line, "negative vertex count");
			g = Graph(static_cast<std::size_t>(n));
			have_header = true;
		} else if (t[0] == "e") {
			if (!have_header)
				throw parse_error(line, "edge before 'p edge' header");
			if (t.size() != 3)
				throw parse_error(line, "malformed edge line, expected 'e <u> <v>'");
			auto u = parse_int(t[1], line), v = parse_int(t[2], line);
			auto n = static_cast<std::int64_t>(g.order());
			if (u < 1 || u > n || v < 1 || v > n)
				throw parse_error(line, "vertex index out of range 1.." + std::to_string(n));
			if (u == v)
				throw parse_error(line, "self-loop on vertex " + std::to_string(u));
			g.add_edge(static_cast<vertex>(u - 1), static_cast<vertex>(v - 1));
		} else {
			throw parse_error(line, "unrecognised line type '" + std::string(t[0]) + "'");
		}
	});
	if (!have_header)
		throw parse_error(1, "missing 'p edge <n> <m>' header");
	for (auto [i, l] : labels) {
		if (i < 1 || i > g.order())
			throw parse_error(0, "label for vertex out of range");
		g.set_label(i - 1, l);
	}
	return g;
}

inline Graph parse_edgelist(std::string_view text) {
	std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
	std::vector<std::int64_t> names;
	for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& t) {
		if (is_comment(t))
			return;
		if (t.size() != 2)
			throw parse_error(line, "expected 'u v'");
		auto u = parse_int(t[0], line), v = parse_int(t[1], line);
		if (u < 1 || v < 1)
			throw parse_error(line, "vertex names must be positive integers");
		if (u == v)
			throw parse_error(line, "self-loop on vertex " + std::to_string(u));
		pairs.emplace_back(u, v);
		names.push_back(u);
		names.push_back(v);
	});
	std::sort(names.begin(), names.end());
	names.erase(std::unique(names.begin(), names.end()), names.end());
	auto index = [&](std::int64_t name) {
		return static_cast<vertex>(std::lower_bound(names.begin(), names.end(), name) - names.begin());
	};
	Graph g(names.size());
	for (vertex i = 0; i < names.size(); ++i)
		g.set_label(i, names[i]);
	for (auto [u, v] : pairs)
		g.add_edge(index(u), index(v));
	return g;
}

} // namespace detail

inline GraphFormat detect_format(std::string_view text) {
	GraphFormat found = GraphFormat::edgelist;
	bool done = false;
	detail::for_each_line(text, [&](std::size_t, const std::vector<std::string_view>& t) {
		if (done || detail::is_comment(t))
			return;
		found = (t[0] == "p" || t[0] == "e") ? GraphFormat::dimacs : GraphFormat::edgelist;
		done = true;
	});
	return found;
}

// Vertices are ordered by DIMACS index, or by ascending name for edge lists.
// Duplicate edges collapse; self-loops are rejected.
inline Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::autodetect) {
	if (format == GraphFormat::autodetect)
		format = detect_format(text);
	return format == GraphFormat::dimacs ? detail::parse_dimacs(text) : detail::parse_edgelist(text);
}

// Canonical DIMACS form. Labels that differ from the 1-based index are kept
// as `c label <index> <name>` lines, which parse_graph reads back.
inline std::string write_dimacs(const Graph& g, const std::vector<std::string>& comments = {}) {
	std::ostringstream os;
	for (const auto& c : comments)
		os << "c " << c << '\n';
	for (vertex v = 0; v < g.order(); ++v)
		if (g.label(v) != static_cast<std::int64_t>(v + 1))
			os << "c label " << v + 1 << ' ' << g.label(v) << '\n';
	os << "p edge " << g.order() << ' ' << g.size() << '\n';
	for (auto [u, v] : g.edges())
		os << "e " << u + 1 << ' ' << v + 1 << '\n';
	return os.str();
}

} // namespace cdcol
