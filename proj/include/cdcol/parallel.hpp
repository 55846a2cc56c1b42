#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

namespace cdcol {

// Solver-internal parallelism. threads == 1 runs everything on the caller's
// thread; larger values must not change any result.
struct Parallelism {
	unsigned threads = 1;
};

template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& f) {
	if (threads <= 1 || count <= 1) {
		for (std::size_t i = 0; i < count; ++i)
			f(i);
		return;
	}
	std::atomic<std::size_t> next{0};
	auto worker = [&] {
		for (std::size_t i; (i = next.fetch_add(1)) < count;)
			f(i);
	};
	std::vector<std::jthread> pool;
	for (std::size_t t = 1; t < std::min<std::size_t>(threads, count); ++t)
		pool.emplace_back(worker);
	worker();
}

// Lowest index i in [0, count) for which f(i) yields a value, with that value.
// Parallel runs reduce to the same index the sequential scan would report.
template <class F>
auto first_success(std::size_t count, unsigned threads, F&& f)
    -> std::optional<std::pair<std::size_t, typename std::invoke_result_t<F&, std::size_t>::value_type>> {
	using R = typename std::invoke_result_t<F&, std::size_t>::value_type;
	if (threads <= 1) {
		for (std::size_t i = 0; i < count; ++i)
			if (auto r = f(i))
				return std::pair{i, std::move(*r)};
		return std::nullopt;
	}
	std::vector<std::optional<R>> results(count);
	std::atomic<std::size_t> best{count};
	parallel_for(count, threads, [&](std::size_t i) {
		if (i > best.load())
			return;
		if (auto r = f(i)) {
			results[i] = std::move(r);
			for (auto cur = best.load(); i < cur && !best.compare_exchange_weak(cur, i);)
				;
		}
	});
	auto b = best.load();
	if (b == count)
		return std::nullopt;
	return std::pair{b, std::move(*results[b])};
}

} // namespace cdcol
