#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "symgor/complexes.hpp"

namespace symgor {

/// Sparse matrix row: (column, value) sorted by column.
using SparseRow = std::vector<std::pair<int, mpq_class>>;

/// Exact rank over the rationals by row echelon insertion.
std::size_t rational_rank(std::vector<SparseRow> rows);

/// Rank modulo a prime (p < 2^31), for the optional cross-check.
std::size_t modular_rank(const std::vector<SparseRow>& rows, std::uint32_t prime);

/// Ranks of reduced simplicial homology over the rationals; entry k+1 holds
/// rank H̃_k for k = -1..dim. The void complex yields an empty vector.
std::vector<long long> reduced_homology_ranks(const SimplicialComplex& c);

/// All faces of c grouped by dimension (index k+1 for k-faces), each group
/// sorted ascending.
std::vector<std::vector<VertexSet>> faces_by_dimension(const SimplicialComplex& c);

/// Same as reduced_homology_ranks but over a precomputed face list, restricted
/// to faces inside w. Used by the Hochster kernel.
std::vector<long long> reduced_homology_ranks(const std::vector<std::vector<VertexSet>>& faces, VertexSet w,
                                              std::uint32_t modulus = 0);

}  // namespace symgor
