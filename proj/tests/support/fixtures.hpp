#pragma once

// Matrices taken from the worked examples, as text.

#include <string>

#include "trop/normal_matrix.hpp"

namespace fixtures {

// Minimal pairs that lie outside the generic minimal families, n = 3..6.
extern const char* const kOutsideA[4];
extern const char* const kOutsideB[4];

// The four generic pairs of the minimal family at (k, m) = (4, 3), n = 6,
// indexed by variant.
extern const char* const kFamilyA[4];
extern const char* const kFamilyB[4];

// Self-orthogonal 3x3 circulant.
extern const char* const kCirculant3;

// Two WNL vertices at distance 3, n = 3.
extern const char* const kWnlFar[2];

trop::NormalMatrix outside_a(int n);
trop::NormalMatrix outside_b(int n);
trop::NormalMatrix matrix(const char* text);

}  // namespace fixtures
