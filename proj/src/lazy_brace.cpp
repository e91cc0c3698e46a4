#include "zbrace/lazy_brace.hpp"

#include "zbrace/error.hpp"

namespace zbrace {

namespace {
bool is_odd(const mpz_class& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }
}  // namespace

LazyBrace<Rational> odd_fractions(long sample_range) {
  LazyBrace<Rational> lb;
  lb.name = "odd_fractions";
  lb.one = 1;
  lb.add = [](const Rational& a, const Rational& b) { return Rational(a - 1 + b); };
  lb.neg = [](const Rational& a) { return Rational(2 - a); };
  lb.circle = [](const Rational& a, const Rational& b) { return Rational(a * b); };
  lb.circle_inv = [](const Rational& a) { return Rational(1 / a); };
  lb.equal = [](const Rational& a, const Rational& b) { return a == b; };
  lb.sample = [sample_range](std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-sample_range, sample_range);
    std::uniform_int_distribution<long> den(0, sample_range);
    Rational q(2 * num(rng) + 1, 2 * den(rng) + 1);
    q.canonicalize();
    return q;
  };
  lb.enumerate = [](std::uint64_t k) { return Rational(static_cast<long>(2 * k + 1)); };
  lb.show = [](const Rational& a) { return a.get_str(); };
  return lb;
}

Rational parse_odd_fraction(const std::string& text) {
  Rational q;
  try {
    q = Rational(text);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::SchemaError, "not a fraction: '" + text + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorKind::SchemaError, "zero denominator: '" + text + "'");
  q.canonicalize();
  if (!is_odd(q.get_num()) || !is_odd(q.get_den())) {
    throw Error(ErrorKind::SchemaError, "'" + text + "' is not an odd fraction");
  }
  return q;
}

}  // namespace zbrace
