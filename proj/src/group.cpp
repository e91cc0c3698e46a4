#include "zbrace/group.hpp"

#include <algorithm>
#include <numeric>

namespace zbrace {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::MissingInverse: return "MissingInverse";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::IdentityMismatch: return "IdentityMismatch";
    case ErrorKind::NotLeftDistributive: return "NotLeftDistributive";
    case ErrorKind::NotRing: return "NotRing";
    case ErrorKind::NotRadical: return "NotRadical";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::InadmissibleZ: return "InadmissibleZ";
    case ErrorKind::InverseCheckFailed: return "InverseCheckFailed";
    case ErrorKind::CriterionMismatch: return "CriterionMismatch";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::UnknownObject: return "UnknownObject";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string message, std::vector<std::uint64_t> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return n_ == other.n_ && std::ranges::equal(table(), other.table());
}

FiniteGroup validate_group(Elem n, std::vector<Elem> table, std::vector<std::string> labels) {
  if (n == 0) throw Error(ErrorKind::SchemaError, "group order must be positive");
  const std::size_t nn = std::size_t{n} * n;
  if (table.size() != nn) {
    throw Error(ErrorKind::SchemaError, "table has " + std::to_string(table.size()) +
                                            " entries, expected " + std::to_string(nn));
  }
  if (labels.empty()) {
    labels.reserve(n);
    for (Elem a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  } else if (labels.size() != n) {
    throw Error(ErrorKind::SchemaError, "expected " + std::to_string(n) + " labels");
  }

  for (std::size_t i = 0; i < nn; ++i) {
    if (table[i] >= n) {
      throw Error(ErrorKind::NotClosed,
                  "entry (" + std::to_string(i / n) + "," + std::to_string(i % n) + ") = " +
                      std::to_string(table[i]) + " is outside the carrier",
                  {i / n, i % n});
    }
  }
  auto at = [&](Elem a, Elem b) { return table[std::size_t{a} * n + b]; };

  std::optional<Elem> identity;
  for (Elem e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorKind::NoIdentity, "no two-sided identity element");
  const Elem e = *identity;

  std::vector<Elem> inverses(n);
  for (Elem a = 0; a < n; ++a) {
    std::optional<Elem> found;
    for (Elem b = 0; b < n && !found; ++b) {
      if (at(a, b) == e && at(b, a) == e) found = b;
    }
    if (!found) {
      throw Error(ErrorKind::MissingInverse, "element " + std::to_string(a) + " has no inverse",
                  {a});
    }
    inverses[a] = *found;
  }

  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = at(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (at(ab, c) != at(a, at(b, c))) {
          throw Error(ErrorKind::NotAssociative,
                      "(a*b)*c != a*(b*c) at a=" + std::to_string(a) + ", b=" +
                          std::to_string(b) + ", c=" + std::to_string(c),
                      {a, b, c});
        }
      }
    }
  }

  auto data = std::make_shared<FiniteGroup::Data>();
  data->table = std::move(table);
  data->inverses = std::move(inverses);
  data->labels = std::move(labels);
  data->identity = e;
  return FiniteGroup(n, std::move(data));
}

FiniteGroup validate_group(const std::vector<std::vector<Elem>>& rows,
                           std::vector<std::string> labels) {
  const std::size_t n = rows.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorKind::SchemaError, "row " + std::to_string(i) + " has " +
                                              std::to_string(rows[i].size()) +
                                              " entries, expected " + std::to_string(n));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return validate_group(static_cast<Elem>(n), std::move(flat), std::move(labels));
}

bool is_abelian(const FiniteGroup& g) {
  const Elem n = g.order();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (g.op(a, b) != g.op(b, a)) return false;
    }
  }
  return true;
}

namespace {
void check_index(const FiniteGroup& g, Elem a) {
  if (a >= g.order()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "index " + std::to_string(a) + " not below order " + std::to_string(g.order()),
                {a});
  }
}
}  // namespace

Elem group_op(const FiniteGroup& g, Elem a, Elem b) {
  check_index(g, a);
  check_index(g, b);
  return g.op(a, b);
}

Elem group_inv(const FiniteGroup& g, Elem a) {
  check_index(g, a);
  return g.inv(a);
}

std::optional<Elem> find_label(const FiniteGroup& g, const std::string& label) {
  const auto& labels = g.labels();
  auto it = std::ranges::find(labels, label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Elem>(it - labels.begin());
}

FiniteGroup cyclic_group(Elem n) {
  std::vector<Elem> table(std::size_t{n} * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) table[std::size_t{a} * n + b] = (a + b) % n;
  }
  return validate_group(n, std::move(table));
}

FiniteGroup symmetric_group(unsigned degree) {
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(degree);
  std::iota(p.begin(), p.end(), 0u);
  do {
    perms.push_back(p);
  } while (std::ranges::next_permutation(p).found);

  const auto n = static_cast<Elem>(perms.size());
  std::vector<std::string> labels;
  for (const auto& q : perms) {
    std::string s;
    for (unsigned v : q) s += std::to_string(v + 1);
    labels.push_back(s);
  }
  std::vector<Elem> table(std::size_t{n} * n);
  std::vector<unsigned> r(degree);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      // (a*b)(i) = a(b(i))
      for (unsigned i = 0; i < degree; ++i) r[i] = perms[a][perms[b][i]];
      table[std::size_t{a} * n + b] =
          static_cast<Elem>(std::ranges::find(perms, r) - perms.begin());
    }
  }
  return validate_group(n, std::move(table), std::move(labels));
}

}  // namespace zbrace
