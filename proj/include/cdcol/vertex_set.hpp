#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <vector>

#include "errors.hpp"

namespace cdcol {

// Fixed-width bit vector over the vertices 0..n-1 of one graph.
class VertexSet {
public:
	class iterator {
	public:
		using iterator_category = std::forward_iterator_tag;
		using value_type = vertex;
		using difference_type = std::ptrdiff_t;
		using pointer = const vertex*;
		using reference = vertex;

		iterator() = default;
		iterator(const std::uint64_t* words, std::size_t nwords, std::size_t index)
		    : words_(words), nwords_(nwords), index_(index) {
			bits_ = index_ < nwords_ ? words_[index_] : 0;
			skip();
		}

		vertex operator*() const { return index_ * 64 + std::countr_zero(bits_); }
		iterator& operator++() {
			bits_ &= bits_ - 1;
			skip();
			return *this;
		}
		iterator operator++(int) {
			auto old = *this;
			++*this;
			return old;
		}
		friend bool operator==(const iterator& a, const iterator& b) {
			return a.index_ == b.index_ && a.bits_ == b.bits_;
		}

	private:
		void skip() {
			while (bits_ == 0 && index_ < nwords_) {
				++index_;
				bits_ = index_ < nwords_ ? words_[index_] : 0;
			}
		}
		const std::uint64_t* words_ = nullptr;
		std::size_t nwords_ = 0;
		std::size_t index_ = 0;
		std::uint64_t bits_ = 0;
	};

	VertexSet() = default;
	explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

	static VertexSet full(std::size_t n) {
		VertexSet s(n);
		for (auto& w : s.words_)
			w = ~std::uint64_t{0};
		s.trim();
		return s;
	}

	static VertexSet of(std::size_t n, std::initializer_list<vertex> vs) {
		VertexSet s(n);
		for (vertex v : vs)
			s.insert(v);
		return s;
	}

	template <class Range>
	static VertexSet from(std::size_t n, const Range& vs) {
		VertexSet s(n);
		for (vertex v : vs)
			s.insert(v);
		return s;
	}

	static VertexSet from_mask(std::size_t n, std::uint64_t mask) {
		assert(n <= 64);
		VertexSet s(n);
		if (n > 0)
			s.words_[0] = mask;
		s.trim();
		return s;
	}

	std::size_t universe() const { return n_; }

	bool contains(vertex v) const { return v < n_ && (words_[v >> 6] >> (v & 63) & 1U); }
	void insert(vertex v) {
		assert(v < n_);
		words_[v >> 6] |= std::uint64_t{1} << (v & 63);
	}
	void erase(vertex v) {
		assert(v < n_);
		words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
	}

	std::size_t size() const {
		std::size_t c = 0;
		for (auto w : words_)
			c += static_cast<std::size_t>(std::popcount(w));
		return c;
	}
	bool empty() const {
		return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
	}

	std::optional<vertex> first() const {
		for (std::size_t i = 0; i < words_.size(); ++i)
			if (words_[i])
				return i * 64 + std::countr_zero(words_[i]);
		return std::nullopt;
	}

	iterator begin() const { return iterator(words_.data(), words_.size(), 0); }
	iterator end() const { return iterator(words_.data(), words_.size(), words_.size()); }

	VertexSet& operator|=(const VertexSet& o) {
		check(o);
		for (std::size_t i = 0; i < words_.size(); ++i)
			words_[i] |= o.words_[i];
		return *this;
	}
	VertexSet& operator&=(const VertexSet& o) {
		check(o);
		for (std::size_t i = 0; i < words_.size(); ++i)
			words_[i] &= o.words_[i];
		return *this;
	}
	VertexSet& operator-=(const VertexSet& o) {
		check(o);
		for (std::size_t i = 0; i < words_.size(); ++i)
			words_[i] &= ~o.words_[i];
		return *this;
	}
	friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
	friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
	friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

	VertexSet complement() const {
		VertexSet s(n_);
		for (std::size_t i = 0; i < words_.size(); ++i)
			s.words_[i] = ~words_[i];
		s.trim();
		return s;
	}

	bool is_subset_of(const VertexSet& o) const {
		check(o);
		for (std::size_t i = 0; i < words_.size(); ++i)
			if (words_[i] & ~o.words_[i])
				return false;
		return true;
	}
	bool intersects(const VertexSet& o) const {
		check(o);
		for (std::size_t i = 0; i < words_.size(); ++i)
			if (words_[i] & o.words_[i])
				return true;
		return false;
	}

	std::vector<vertex> to_vector() const { return {begin(), end()}; }

	std::uint64_t to_mask() const {
		assert(n_ <= 64);
		return words_.empty() ? 0 : words_[0];
	}

	friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

	// Lexicographic order on the sorted element lists.
	friend bool lex_less(const VertexSet& a, const VertexSet& b) {
		auto x = a.to_vector(), y = b.to_vector();
		return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
	}

private:
	void check([[maybe_unused]] const VertexSet& o) const { assert(o.n_ == n_); }
	void trim() {
		if (n_ % 64 && !words_.empty())
			words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
	}

	std::size_t n_ = 0;
	std::vector<std::uint64_t> words_;
};

} // namespace cdcol
