#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace zbrace {

enum class Status { pass, fail, sampled };

std::string_view to_string(Status s);

/// One verified statement: how many points were examined and, on failure,
/// the smallest counterexample tuple.
struct Check {
  std::string name;
  Status status = Status::pass;
  std::uint64_t points = 0;
  std::vector<std::uint64_t> witness;
  std::string detail;
  std::vector<std::string> notes;
  double seconds = 0.0;

  bool ok() const noexcept { return status != Status::fail; }
};

struct Section {
  std::string name;
  std::vector<Check> checks;

  bool ok() const noexcept {
    return std::ranges::all_of(checks, [](const Check& c) { return c.ok(); });
  }
  void add(Check c) { checks.push_back(std::move(c)); }
};

struct SweepOptions {
  /// Largest point space swept exhaustively; larger spaces are sampled.
  std::uint64_t budget = std::uint64_t{1} << 26;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 20240101;
  unsigned threads = 1;
};

/// Defaults, overridden by ZBRACE_BUDGET, ZBRACE_SAMPLES, ZBRACE_SEED and
/// ZBRACE_THREADS when set.
SweepOptions sweep_options_from_env();

/// radix^arity, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_power(std::uint64_t radix, unsigned arity);

/// Mixed-radix digits of `point`, most significant first.
std::vector<std::uint64_t> decode_point(std::uint64_t point, std::uint64_t radix, unsigned arity);

Check make_check(std::string name, bool ok, std::uint64_t points, std::string detail = {});

namespace detail {

template <class Holds>
std::optional<std::uint64_t> first_failure(std::uint64_t space, const Holds& holds,
                                           unsigned threads) {
  constexpr auto none = std::numeric_limits<std::uint64_t>::max();
  if (threads <= 1 || space < 4096) {
    for (std::uint64_t i = 0; i < space; ++i) {
      if (!holds(i)) return i;
    }
    return std::nullopt;
  }
  // Chunks scan in ascending order and stop once past the best failure seen,
  // so the minimum is the same for every thread count.
  std::atomic<std::uint64_t> best{none};
  const std::uint64_t chunk = (space + threads - 1) / threads;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = t * chunk, hi = std::min(space, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        for (std::uint64_t i = lo; i < hi; ++i) {
          if ((i & 1023) == 0 && i > best.load(std::memory_order_relaxed)) return;
          if (!holds(i)) {
            std::uint64_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return;
          }
        }
      });
    }
  }
  const std::uint64_t b = best.load();
  return b == none ? std::nullopt : std::optional<std::uint64_t>(b);
}

}  // namespace detail

/// Checks `holds(point)` over every point of the radix^arity space, or over
/// a seeded sample when the space exceeds the budget. A failure reports the
/// smallest failing point, decoded into its digits.
template <class Holds>
Check sweep(std::string name, std::uint64_t radix, unsigned arity, const Holds& holds,
            const SweepOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  Check check;
  check.name = std::move(name);
  const auto space = checked_power(radix, arity);
  std::optional<std::uint64_t> failure;
  if (space && *space <= opts.budget) {
    check.points = *space;
    failure = detail::first_failure(*space, holds, opts.threads);
    check.status = failure ? Status::fail : Status::pass;
  } else {
    check.points = opts.samples;
    if (!space) {
      check.status = Status::fail;
      check.detail = "point space exceeds 64-bit encoding";
      return check;
    }
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> draw(0, *space - 1);
    std::vector<std::uint64_t> points(opts.samples);
    for (auto& p : points) p = draw(rng);
    std::ranges::sort(points);
    for (std::uint64_t p : points) {
      if (!holds(p)) {
        failure = p;
        break;
      }
    }
    check.status = failure ? Status::fail : Status::sampled;
  }
  if (failure) check.witness = decode_point(*failure, radix, arity);
  check.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return check;
}

}  // namespace zbrace
