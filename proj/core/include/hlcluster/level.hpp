#pragma once

#include "hlcluster/seed.hpp"
#include "hlcluster/ymono.hpp"

namespace hlc {

/// Highest l-weight monomial of a grid-seed cluster variable: the unique
/// coefficient-free term z^g / F|_P, expanded through z_{i,r} -> the
/// Kirillov-Reshetikhin monomial Y_{i,r} Y_{i,r+2} ... Y_{i,xi(i)}.
///
/// Both routes are computed (the coefficient-free term of the Laurent
/// polynomial, and g with the tropical evaluation of F at the boundary-row
/// specialization of the y's) and must agree; the result must be dominant.
YMonomial hw_level_l(const GridQuiver& grid, const Seed& seed, const LaurentPoly& var);

}  // namespace hlc
