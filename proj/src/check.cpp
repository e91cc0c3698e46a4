#include "zbrace/check.hpp"

#include <cstdlib>
#include <string>

namespace zbrace {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::sampled: return "sampled";
  }
  return "fail";
}

namespace {
std::optional<std::uint64_t> env_number(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    return std::stoull(raw);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}
}  // namespace

SweepOptions sweep_options_from_env() {
  SweepOptions opts;
  if (auto v = env_number("ZBRACE_BUDGET")) opts.budget = *v;
  if (auto v = env_number("ZBRACE_SAMPLES")) opts.samples = std::max<std::uint64_t>(1, *v);
  if (auto v = env_number("ZBRACE_SEED")) opts.seed = *v;
  if (auto v = env_number("ZBRACE_THREADS")) {
    opts.threads = static_cast<unsigned>(std::max<std::uint64_t>(1, *v));
  } else {
    opts.threads = std::max(1u, std::thread::hardware_concurrency());
  }
  return opts;
}

std::optional<std::uint64_t> checked_power(std::uint64_t radix, unsigned arity) {
  std::uint64_t v = 1;
  for (unsigned k = 0; k < arity; ++k) {
    if (radix != 0 && v > std::numeric_limits<std::uint64_t>::max() / radix) return std::nullopt;
    v *= radix;
  }
  return v;
}

std::vector<std::uint64_t> decode_point(std::uint64_t point, std::uint64_t radix,
                                        unsigned arity) {
  std::vector<std::uint64_t> digits(arity);
  for (unsigned k = arity; k-- > 0;) {
    digits[k] = point % radix;
    point /= radix;
  }
  return digits;
}

Check make_check(std::string name, bool ok, std::uint64_t points, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.status = ok ? Status::pass : Status::fail;
  c.points = points;
  c.detail = std::move(detail);
  return c;
}

}  // namespace zbrace
