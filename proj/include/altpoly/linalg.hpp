#pragma once

#include <cstddef>
#include <vector>

#include "altpoly/rational.hpp"

namespace altpoly {

struct KernelResult {
    std::size_t rank = 0;
    // One basis vector per free column, in increasing column order, each
    // scaled so that its first nonzero coordinate equals 1.
    std::vector<std::vector<Rational>> basis;
};

// Exact null space of a rational matrix (rows may be fewer or more than
// ncols).  Rows are cleared to integers and reduced by fraction-free
// (Bareiss) elimination with deterministic first-nonzero pivoting, so the
// result depends only on the input values.
KernelResult rational_kernel(const std::vector<std::vector<Rational>>& rows, std::size_t ncols);

}  // namespace altpoly
