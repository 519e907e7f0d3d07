#pragma once

#include <cstddef>
#include <vector>

#include "symgor/monomial.hpp"

namespace symgor {

/// Monomial ideal given by its minimal generators on slots
/// 0..num_variables-1. Generators are sorted descending in revlex.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Drops redundant generators; throws on the unit monomial or a slot
  /// outside the variable range.
  MonomialIdeal(std::size_t num_variables, std::vector<Monomial> generators);

  std::size_t num_variables() const { return num_variables_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  bool is_square_free() const;
  /// m lies in the ideal iff some generator divides it.
  bool contains(const Monomial& m) const;
  /// Union of generator supports.
  std::uint64_t support_mask() const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::size_t num_variables_ = 0;
  std::vector<Monomial> generators_;
};

}  // namespace symgor
