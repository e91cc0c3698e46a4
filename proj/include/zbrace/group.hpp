#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zbrace/error.hpp"

namespace zbrace {

/// Dense element index into a finite carrier.
using Elem = std::uint32_t;

/// A finite group given by its Cayley table.
///
/// Elements are the indices 0..n-1; labels are for presentation only.
/// Instances are always validated and immutable, and copies share storage,
/// so a group can be passed by value into parallel sweeps.
class FiniteGroup {
 public:
  Elem order() const noexcept { return n_; }
  Elem identity() const noexcept { return data_->identity; }

  // Unchecked lookups for hot loops.
  Elem op(Elem a, Elem b) const noexcept { return data_->table[std::size_t{a} * n_ + b]; }
  Elem inv(Elem a) const noexcept { return data_->inverses[a]; }

  std::span<const Elem> table() const noexcept { return data_->table; }
  std::span<const Elem> inverses() const noexcept { return data_->inverses; }
  const std::vector<std::string>& labels() const noexcept { return data_->labels; }
  const std::string& label(Elem a) const { return data_->labels.at(a); }

  bool same_table(const FiniteGroup& other) const;

 private:
  struct Data {
    std::vector<Elem> table;
    std::vector<Elem> inverses;
    std::vector<std::string> labels;
    Elem identity = 0;
  };

  FiniteGroup(Elem n, std::shared_ptr<const Data> data) : n_(n), data_(std::move(data)) {}

  Elem n_;
  std::shared_ptr<const Data> data_;

  friend FiniteGroup validate_group(Elem, std::vector<Elem>, std::vector<std::string>);
};

/// Validates a row-major n*n Cayley table and computes identity and inverses.
///
/// Throws Error with kind NotClosed, NoIdentity, NotAssociative (witness
/// a,b,c) or MissingInverse (witness a); each witness is the first one hit
/// in row-major order. Missing labels default to the decimal index.
FiniteGroup validate_group(Elem n, std::vector<Elem> table, std::vector<std::string> labels = {});

/// Same, from a list of rows. Throws SchemaError if the table is not square.
FiniteGroup validate_group(const std::vector<std::vector<Elem>>& rows,
                           std::vector<std::string> labels = {});

bool is_abelian(const FiniteGroup& g);

/// Checked table lookup; throws IndexOutOfRange.
Elem group_op(const FiniteGroup& g, Elem a, Elem b);
/// Checked inverse lookup; throws IndexOutOfRange.
Elem group_inv(const FiniteGroup& g, Elem a);

/// Index of the element carrying `label`, if any.
std::optional<Elem> find_label(const FiniteGroup& g, const std::string& label);

// Small named groups used as test instances and CLI families.
FiniteGroup cyclic_group(Elem n);
FiniteGroup symmetric_group(unsigned degree);

}  // namespace zbrace
