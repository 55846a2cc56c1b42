#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cdcol {

using vertex = std::size_t;

struct error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct parse_error : error {
	parse_error(std::size_t line, const std::string& what)
	    : error("line " + std::to_string(line) + ": " + what), line(line) {}
	std::size_t line;
};

struct capacity_error : error {
	using error::error;
};

// A solver was called outside the graph class it is correct for. `witness`
// carries the offending structure (triangle, short cycle, ...) when there is one.
struct precondition_error : error {
	explicit precondition_error(const std::string& what, std::vector<vertex> witness = {})
	    : error(what), witness(std::move(witness)) {}
	std::vector<vertex> witness;
};

struct not_chordal_error : precondition_error {
	explicit not_chordal_error(std::vector<vertex> cycle)
	    : precondition_error("graph is not chordal: chordless cycle of length " +
	                             std::to_string(cycle.size()),
	                         std::move(cycle)) {}
};

} // namespace cdcol
