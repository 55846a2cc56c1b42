#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "errors.hpp"
#include "parallel.hpp"

namespace cdcol {

using mask_t = std::uint32_t;

inline constexpr unsigned max_table_universe = 30;

// Boolean coefficient vector of a polynomial in z with exponents in [0, 2^n):
// bit d is set iff z^d occurs. A family of subsets of an n-element universe is
// stored through its characteristic vectors (vertex j <-> bit j).
class CoefficientTable {
public:
	CoefficientTable() = default;
	explicit CoefficientTable(unsigned n) : n_(n) {
		if (n > max_table_universe)
			throw capacity_error("coefficient table universe " + std::to_string(n) + " exceeds " +
			                     std::to_string(max_table_universe));
		words_.assign(((std::uint64_t{1} << n) + 63) / 64, 0);
	}

	static CoefficientTable of(unsigned n, std::initializer_list<mask_t> masks) {
		CoefficientTable t(n);
		for (auto m : masks)
			t.set(m);
		return t;
	}

	unsigned universe() const { return n_; }
	std::uint64_t length() const { return std::uint64_t{1} << n_; }
	mask_t full_mask() const { return static_cast<mask_t>(length() - 1); }

	bool test(std::uint64_t m) const { return m < length() && (words_[m >> 6] >> (m & 63) & 1U); }
	void set(std::uint64_t m) { words_[m >> 6] |= std::uint64_t{1} << (m & 63); }

	std::uint64_t count() const {
		std::uint64_t c = 0;
		for (auto w : words_)
			c += static_cast<std::uint64_t>(std::popcount(w));
		return c;
	}
	bool empty() const { return count() == 0; }

	// Hamming projections: slices()[h] lists the set exponents of weight h.
	std::vector<std::vector<mask_t>> slices() const {
		std::vector<std::vector<mask_t>> out(n_ + 1);
		for (std::size_t i = 0; i < words_.size(); ++i)
			for (auto w = words_[i]; w; w &= w - 1) {
				auto m = static_cast<mask_t>(i * 64 + std::countr_zero(w));
				out[std::popcount(m)].push_back(m);
			}
		return out;
	}

	std::vector<mask_t> members() const {
		std::vector<mask_t> out;
		for (std::size_t i = 0; i < words_.size(); ++i)
			for (auto w = words_[i]; w; w &= w - 1)
				out.push_back(static_cast<mask_t>(i * 64 + std::countr_zero(w)));
		return out;
	}

	CoefficientTable& operator|=(const CoefficientTable& o) {
		for (std::size_t i = 0; i < words_.size(); ++i)
			words_[i] |= o.words_[i];
		return *this;
	}

	friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;

private:
	unsigned n_ = 0;
	std::vector<std::uint64_t> words_;
};

enum class StarBackend { automatic, layered, ranked_zeta };

namespace detail {

// Ranked zeta transform: out[i][S] = #{A ⊆ S : |A| = i, A in t}, modulo 2^32.
inline std::vector<std::vector<std::uint32_t>> ranked_zeta(const CoefficientTable& t, unsigned threads) {
	const unsigned n = t.universe();
	const std::uint64_t len = t.length();
	auto sl = t.slices();
	std::vector<std::vector<std::uint32_t>> out(n + 1);
	parallel_for(n + 1, threads, [&](std::size_t rank) {
		auto& f = out[rank];
		f.assign(len, 0);
		if (sl[rank].empty())
			return;
		for (auto m : sl[rank])
			f[m] = 1;
		for (unsigned b = 0; b < n; ++b) {
			const std::uint64_t bit = std::uint64_t{1} << b;
			for (std::uint64_t s = 0; s < len; ++s)
				if (s & bit)
					f[s] += f[s ^ bit];
		}
	});
	return out;
}

// Combines two ranked transforms and inverts rank by rank; S is in the result
// iff the number of ordered disjoint pairs (A, B) with A ∪ B = S is nonzero.
// That count is at most 2^n < 2^32, so the wrapped arithmetic is exact.
inline CoefficientTable ranked_combine(const std::vector<std::vector<std::uint32_t>>& f,
                                       const std::vector<std::vector<std::uint32_t>>& g, unsigned n,
                                       unsigned threads) {
	const std::uint64_t len = std::uint64_t{1} << n;
	std::vector<std::vector<mask_t>> hits(n + 1);
	parallel_for(n + 1, threads, [&](std::size_t k) {
		std::vector<std::uint32_t> h(len, 0);
		bool any = false;
		for (std::size_t i = 0; i <= k; ++i) {
			if (f[i].empty() || g[k - i].empty())
				continue;
			any = true;
			const auto& a = f[i];
			const auto& c = g[k - i];
			for (std::uint64_t s = 0; s < len; ++s)
				h[s] += a[s] * c[s];
		}
		if (!any)
			return;
		for (unsigned b = 0; b < n; ++b) {
			const std::uint64_t bit = std::uint64_t{1} << b;
			for (std::uint64_t s = 0; s < len; ++s)
				if (s & bit)
					h[s] -= h[s ^ bit];
		}
		for (std::uint64_t s = 0; s < len; ++s)
			if (h[s] != 0 && static_cast<std::size_t>(std::popcount(s)) == k)
				hits[k].push_back(static_cast<mask_t>(s));
	});
	CoefficientTable t(n);
	for (const auto& row : hits)
		for (auto m : row)
			t.set(m);
	return t;
}

// Memory ceiling for the ranked backend: two ranked tables of (n+1) 2^n words.
inline bool ranked_fits(unsigned n) {
	return 2.0 * (n + 1) * static_cast<double>(std::uint64_t{1} << n) * 4.0 < 1.5 * (1ULL << 30);
}

inline double layered_cost(const std::vector<std::vector<mask_t>>& sp, const std::vector<std::vector<mask_t>>& sr) {
	double cost = 0;
	for (std::size_t i = 0; i < sp.size(); ++i)
		for (std::size_t j = 0; i + j < sp.size(); ++j)
			cost += static_cast<double>(sp[i].size()) * static_cast<double>(sr[j].size());
	return cost;
}

inline double ranked_cost(unsigned n) {
	return 2.0 * (n + 1) * (n + 1) * static_cast<double>(std::uint64_t{1} << n);
}

// Weight-layered product: for every (i, j) with i + j <= n, multiply the
// weight-i slice of p by the weight-j slice of r and keep exponents of weight
// i + j. Exponent sums with a carry lose weight and are dropped, so exactly
// the disjoint pairs survive.
inline CoefficientTable layered_product(const std::vector<std::vector<mask_t>>& sp,
                                        const std::vector<std::vector<mask_t>>& sr, unsigned n,
                                        unsigned threads) {
	std::vector<std::pair<std::size_t, std::size_t>> pairs;
	for (std::size_t i = 0; i <= n; ++i)
		for (std::size_t j = 0; i + j <= n; ++j)
			if (!sp[i].empty() && !sr[j].empty())
				pairs.emplace_back(i, j);
	auto work = [&](CoefficientTable& t, std::size_t idx) {
		auto [i, j] = pairs[idx];
		for (mask_t a : sp[i])
			for (mask_t b : sr[j]) {
				std::uint64_t sum = std::uint64_t{a} + b;
				if (static_cast<std::size_t>(std::popcount(sum)) == i + j)
					t.set(sum);
			}
	};
	CoefficientTable t(n);
	if (threads <= 1) {
		for (std::size_t idx = 0; idx < pairs.size(); ++idx)
			work(t, idx);
		return t;
	}
	std::vector<CoefficientTable> partial(pairs.size());
	parallel_for(pairs.size(), threads, [&](std::size_t idx) {
		partial[idx] = CoefficientTable(n);
		work(partial[idx], idx);
	});
	for (const auto& p : partial)
		t |= p;
	return t;
}

} // namespace detail

// p ⋆ r: the family {S1 ∪ S2 : S1 in p, S2 in r, S1 ∩ S2 = ∅}.
inline CoefficientTable star_product(const CoefficientTable& p, const CoefficientTable& r,
                                     StarBackend backend = StarBackend::automatic, Parallelism par = {}) {
	if (p.universe() != r.universe())
		throw error("star product of tables over different universes (" + std::to_string(p.universe()) + " vs " +
		            std::to_string(r.universe()) + ")");
	const unsigned n = p.universe();
	auto sp = p.slices(), sr = r.slices();
	if (backend == StarBackend::automatic)
		backend = (detail::ranked_fits(n) && detail::ranked_cost(n) < detail::layered_cost(sp, sr))
		              ? StarBackend::ranked_zeta
		              : StarBackend::layered;
	if (backend == StarBackend::layered)
		return detail::layered_product(sp, sr, n, par.threads);
	return detail::ranked_combine(detail::ranked_zeta(p, par.threads), detail::ranked_zeta(r, par.threads), n,
	                              par.threads);
}

// Successive ⋆-powers p, p^2, p^3, ... of one table. The ranked transform of
// p is computed once and reused.
class StarPowers {
public:
	StarPowers(CoefficientTable base, StarBackend backend = StarBackend::automatic, Parallelism par = {})
	    : base_(std::move(base)), current_(base_), backend_(backend), par_(par) {}

	const CoefficientTable& current() const { return current_; }
	std::size_t exponent() const { return exponent_; }

	const CoefficientTable& next() {
		const unsigned n = base_.universe();
		auto backend = backend_;
		if (backend == StarBackend::automatic)
			backend = (detail::ranked_fits(n) &&
			           detail::ranked_cost(n) < detail::layered_cost(current_.slices(), base_slices()))
			              ? StarBackend::ranked_zeta
			              : StarBackend::layered;
		if (backend == StarBackend::layered) {
			current_ = detail::layered_product(current_.slices(), base_slices(), n, par_.threads);
		} else {
			if (base_ranked_.empty())
				base_ranked_ = detail::ranked_zeta(base_, par_.threads);
			current_ = detail::ranked_combine(detail::ranked_zeta(current_, par_.threads), base_ranked_, n,
			                                  par_.threads);
		}
		++exponent_;
		return current_;
	}

private:
	const std::vector<std::vector<mask_t>>& base_slices() {
		if (base_slices_.empty())
			base_slices_ = base_.slices();
		return base_slices_;
	}

	CoefficientTable base_;
	CoefficientTable current_;
	StarBackend backend_;
	Parallelism par_;
	std::size_t exponent_ = 1;
	std::vector<std::vector<mask_t>> base_slices_;
	std::vector<std::vector<std::uint32_t>> base_ranked_;
};

inline CoefficientTable star_power(const CoefficientTable& p, std::size_t ell,
                                   StarBackend backend = StarBackend::automatic, Parallelism par = {}) {
	if (ell < 1)
		throw error("star power exponent must be at least 1");
	StarPowers powers(p, backend, par);
	while (powers.exponent() < ell)
		powers.next();
	return powers.current();
}

} // namespace cdcol
