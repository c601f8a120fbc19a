#pragma once

#include <cstddef>
#include <vector>

#include "congr/ring.hpp"

namespace congr {

/// Rank over F_p of the given row vectors (entries taken mod p).
std::size_t rank_mod_p(std::vector<std::vector<Coeff>> rows, Coeff p);

}  // namespace congr
