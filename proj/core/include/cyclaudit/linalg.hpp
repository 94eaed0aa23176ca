#pragma once

#include <vector>

#include "cyclaudit/rational.hpp"

namespace cyclaudit {

using RatMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place, deterministic first-nonzero pivoting.
/// Returns the rank.
std::size_t rref_in_place(RatMatrix& m);

/// Canonical basis of {x : m x = 0}, one basis vector per row, obtained from
/// the RREF free-variable construction and re-normalized by a second RREF so
/// the result is unique for a given row space.
RatMatrix nullspace(const RatMatrix& m, std::size_t cols);

/// True when v lies in the row space of `basis` (exact membership).
bool in_row_space(const RatMatrix& basis, const std::vector<Rational>& v);

}  // namespace cyclaudit
