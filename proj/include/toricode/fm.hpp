#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toricode/intmat.hpp"

namespace toricode {

// Exact Fourier-Motzkin elimination on integer inequality systems
// a * c >= b. Positive combinations of integer rows stay integral, so no
// rational arithmetic is needed; rows are gcd-normalized and deduplicated
// to tame growth.

// Whether the recession cone {c : a c >= 0} is exactly {0}; decided by
// projecting the cone onto every coordinate axis.
bool coneIsTrivial(const IntMat& a, std::size_t rowGuard = 200000);

// Per-variable integer bounds [lo_i, hi_i] enclosing the polyhedron
// {c : a c >= b}. Returns nullopt if some projection is unbounded. An empty
// polyhedron yields some lo_i > hi_i (or is detected as 0 >= positive).
std::optional<std::vector<std::pair<Int, Int>>> fmBox(
    const IntMat& a, const IntVec& b, std::size_t rowGuard = 200000);

}  // namespace toricode
