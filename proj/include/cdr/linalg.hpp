#pragma once

#include <optional>
#include <vector>

#include "cdr/scalar.hpp"

namespace cdr {

using Matrix = std::vector<std::vector<Rational>>;

/// Reduce m in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
/// Basis of {x : m x = 0}; ncols given explicitly for matrices with no rows.
std::vector<std::vector<Rational>> kernel(const Matrix& m, std::size_t ncols);
/// Some x with m x = rhs, if one exists.
std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& rhs);

}  // namespace cdr
