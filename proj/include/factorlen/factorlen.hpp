#pragma once

// Umbrella header: weighted factorization-length distributions for
// three-generator numerical semigroups, their triangular limit density,
// and the explicit error bounds.

#include "factorlen/bounds.hpp"
#include "factorlen/enumeration.hpp"
#include "factorlen/geometry.hpp"
#include "factorlen/int128.hpp"
#include "factorlen/rational.hpp"
#include "factorlen/report.hpp"
#include "factorlen/semigroup.hpp"
#include "factorlen/statistics.hpp"
#include "factorlen/supersymmetric.hpp"
