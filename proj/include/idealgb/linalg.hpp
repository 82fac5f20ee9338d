#ifndef IDEALGB_LINALG_HPP
#define IDEALGB_LINALG_HPP

#include <optional>
#include <span>
#include <vector>

#include "idealgb/polynomial.hpp"
#include "idealgb/rational.hpp"

namespace idealgb {

using Matrix = std::vector<std::vector<Rational>>;

/// Row rank by exact Gaussian elimination. Consumes its argument.
int rank(Matrix m);

/// Whether v lies in the row span of `rows`.
bool in_span(const Matrix& rows, const std::vector<Rational>& v);

bool nonsingular(Matrix m);

/// Solves the square system A x = b; nullopt when A is singular.
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b);

/// Coefficient matrix of the polynomials over the union of their supports
/// (columns in container order of the support set).
Matrix coefficient_matrix(std::span<const Polynomial> ps);

}  // namespace idealgb

#endif
