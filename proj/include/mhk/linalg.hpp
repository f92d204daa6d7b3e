#pragma once

#include "mhk/scalar.hpp"

#include <optional>
#include <vector>

namespace mhk {

using Mat = std::vector<std::vector<Scalar>>;

/// Rank via exact Gaussian elimination.
std::size_t rank(Mat m);

/// A nonzero vector v with m*v = 0, or nullopt when the columns are
/// independent.
std::optional<std::vector<Scalar>> nullspace_vector(Mat m, std::size_t cols);

}  // namespace mhk
