#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>

#include "zbrace/check.hpp"

namespace zbrace {

/// A brace on an unbounded exact carrier, given by its operations. Laws can
/// only be checked pointwise on sampled elements, so every check it feeds
/// reports `sampled`, never `pass`.
template <class T>
struct LazyBrace {
  std::string name;
  T one;
  std::function<T(const T&, const T&)> add;
  std::function<T(const T&)> neg;
  std::function<T(const T&, const T&)> circle;
  std::function<T(const T&)> circle_inv;
  std::function<bool(const T&, const T&)> equal;
  std::function<T(std::mt19937_64&)> sample;
  /// Deterministic enumeration of carrier elements, used for witness search.
  std::function<T(std::uint64_t)> enumerate;
  std::function<std::string(const T&)> show;

  T heap(const T& a, const T& b, const T& c) const { return add(add(a, neg(b)), c); }
  T sigma(const T& z, const T& x, const T& y) const {
    return heap(circle(x, y), circle(x, z), z);
  }
  T tau(const T& z, const T& y, const T& x) const {
    return circle(circle_inv(sigma(z, x, y)), circle(x, y));
  }
};

using Rational = mpq_class;

/// Odd := {(2n+1)/(2k+1)} with a - 1 + b and the rational product.
LazyBrace<Rational> odd_fractions(long sample_range = 50);

/// Parses "p/q" or "p" into a reduced odd fraction; throws SchemaError.
Rational parse_odd_fraction(const std::string& text);

/// First enumerated a with -a o z + z != -a o w + w, if any within `limit`.
template <class T>
std::optional<T> distinguishing_element(const LazyBrace<T>& lb, const T& z, const T& w,
                                        std::uint64_t limit = 1000) {
  for (std::uint64_t k = 0; k < limit; ++k) {
    const T a = lb.enumerate(k);
    if (!lb.equal(lb.add(lb.neg(lb.circle(a, z)), z), lb.add(lb.neg(lb.circle(a, w)), w))) {
      return a;
    }
  }
  return std::nullopt;
}

/// Sampled check of the braid constraints, the product identity, the
/// admissibility of z and (non-)involutivity on seeded random triples.
template <class T>
Section sampled_verify_lazy(const LazyBrace<T>& lb, const T& z, std::uint64_t samples,
                            std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  Section sec{"lazy:" + lb.name + " z=" + lb.show(z), {}};
  std::mt19937_64 rng(seed);
  auto sig = [&](const T& x, const T& y) { return lb.sigma(z, x, y); };
  auto tau = [&](const T& y, const T& x) { return lb.tau(z, y, x); };

  struct Tally {
    std::string name;
    std::optional<std::string> witness;
  };
  Tally admissible{"z_right_distributive", {}}, c1{"C1", {}}, c2{"C2", {}}, c3{"C3", {}},
      product{"product_identity", {}}, involutive{"involutive", {}};
  std::optional<std::string> non_involution;

  auto note = [&](Tally& t, std::initializer_list<const T*> xs) {
    if (t.witness) return;
    std::string w;
    for (const T* x : xs) w += (w.empty() ? "" : ", ") + lb.show(*x);
    t.witness = w;
  };

  for (std::uint64_t i = 0; i < samples; ++i) {
    const T e = lb.sample(rng), x = lb.sample(rng), y = lb.sample(rng);
    if (!lb.equal(lb.circle(lb.heap(e, x, y), z),
                  lb.heap(lb.circle(e, z), lb.circle(x, z), lb.circle(y, z)))) {
      note(admissible, {&e, &x, &y});
    }
    const T sxy = sig(x, y), txe = tau(x, e), tyx = tau(y, x);
    if (!lb.equal(sig(e, sxy), sig(sig(e, x), sig(txe, y)))) note(c1, {&e, &x, &y});
    if (!lb.equal(tau(y, txe), tau(tyx, tau(sxy, e)))) note(c2, {&e, &x, &y});
    if (!lb.equal(tau(sig(txe, y), sig(e, x)), sig(tau(sxy, e), tyx))) note(c3, {&e, &x, &y});
    if (!lb.equal(lb.circle(sxy, tyx), lb.circle(x, y))) note(product, {&x, &y});
    const T back_x = sig(sxy, tyx), back_y = tau(tyx, sxy);
    if (!lb.equal(back_x, x) || !lb.equal(back_y, y)) {
      note(involutive, {&x, &y});
      if (!non_involution) {
        non_involution = "r(" + lb.show(x) + ", " + lb.show(y) + ") = (" + lb.show(sxy) +
                         ", " + lb.show(tyx) + ") -> (" + lb.show(back_x) + ", " +
                         lb.show(back_y) + ")";
      }
    }
  }

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (Tally* t : {&admissible, &c1, &c2, &c3, &product}) {
    Check c;
    c.name = t->name;
    c.points = samples;
    c.status = t->witness ? Status::fail : Status::sampled;
    if (t->witness) c.detail = "witness " + *t->witness;
    c.seconds = secs;
    sec.add(std::move(c));
  }
  Check inv;
  inv.points = samples;
  inv.seconds = secs;
  if (lb.equal(z, lb.one)) {
    inv.name = "involutive";
    inv.status = involutive.witness ? Status::fail : Status::sampled;
    if (involutive.witness) inv.detail = "witness " + *involutive.witness;
  } else {
    inv.name = "non_involutive_witness";
    inv.status = non_involution ? Status::sampled : Status::fail;
    inv.detail = non_involution ? *non_involution : "no sampled pair moved under r_z o r_z";
  }
  sec.add(std::move(inv));
  return sec;
}

}  // namespace zbrace
