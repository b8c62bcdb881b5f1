#pragma once

#include <vector>

#include "macjt/arith/qtrational.hpp"

namespace macjt::expansion {

using arith::QTRational;

// Solves A x = b exactly (A has at least as many rows as columns).
// Pivots are the entries with the smallest stored representation.
// SingularSystem if the columns are dependent or the system is inconsistent.
std::vector<QTRational> solve_exact(std::vector<std::vector<QTRational>> A, std::vector<QTRational> b);

} // namespace macjt::expansion
