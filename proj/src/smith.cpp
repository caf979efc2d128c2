#include "cubicay/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "cubicay/errors.hpp"

namespace cubicay {
namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

void swap_rows(Matrix& m, std::size_t i, std::size_t j) { std::swap(m[i], m[j]); }

void swap_cols(Matrix& m, std::size_t i, std::size_t j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}

// Diagonalize m[k..][k..] at pivot k by repeated row/column reduction.
void clear_pivot(Matrix& m, std::size_t k) {
  const std::size_t rows = m.size(), cols = m[0].size();
  for (;;) {
    // Move a least-magnitude nonzero entry to (k,k).
    std::size_t pi = k, pj = k;
    std::int64_t best = 0;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || std::abs(m[i][j]) < best)) {
          best = std::abs(m[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) return;
    swap_rows(m, k, pi);
    swap_cols(m, k, pj);

    bool clean = true;
    for (std::size_t i = k + 1; i < rows; ++i) {
      const std::int64_t q = m[i][k] / m[k][k];
      if (q != 0)
        for (std::size_t j = k; j < cols; ++j) m[i][j] -= q * m[k][j];
      if (m[i][k] != 0) clean = false;
    }
    for (std::size_t j = k + 1; j < cols; ++j) {
      const std::int64_t q = m[k][j] / m[k][k];
      if (q != 0)
        for (std::size_t i = k; i < rows; ++i) m[i][j] -= q * m[i][k];
      if (m[k][j] != 0) clean = false;
    }
    if (!clean) continue;

    // Divisibility: fold any entry the pivot misses back into row k.
    bool divides = true;
    for (std::size_t i = k + 1; i < rows && divides; ++i)
      for (std::size_t j = k + 1; j < cols && divides; ++j)
        if (m[i][j] % m[k][k] != 0) {
          for (std::size_t t = k; t < cols; ++t) m[k][t] += m[i][t];
          divides = false;
        }
    if (divides) return;
  }
}

}  // namespace

std::string AbelianInvariants::str() const {
  std::string out = "rank " + std::to_string(free_rank) + ", torsion [";
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(torsion[i]);
  }
  return out + "]";
}

AbelianInvariants smith_invariants(Matrix matrix, int columns) {
  if (columns <= 0) throw BadParameter("smith: need at least one generator column");
  if (matrix.empty()) matrix.push_back(std::vector<std::int64_t>(static_cast<std::size_t>(columns), 0));
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != columns) throw BadParameter("smith: ragged matrix");

  const std::size_t steps = std::min(matrix.size(), static_cast<std::size_t>(columns));
  for (std::size_t k = 0; k < steps; ++k) clear_pivot(matrix, k);

  AbelianInvariants inv;
  std::vector<std::int64_t> diag;
  for (std::size_t k = 0; k < steps; ++k) {
    const std::int64_t d = std::abs(matrix[k][k]);
    if (d != 0) diag.push_back(d);
  }
  inv.free_rank = columns - static_cast<int>(diag.size());
  for (std::int64_t d : diag)
    if (d >= 2) inv.torsion.push_back(d);
  return inv;
}

std::vector<std::int64_t> exponent_row(const Word& word, int generators) {
  std::vector<std::int64_t> row(static_cast<std::size_t>(generators), 0);
  for (char ch : word) {
    switch (ch) {
      case 'a': row[0] += 1; break;
      case 'A': row[0] -= 1; break;
      case 'b': row[1] += 1; break;
      case 'c':
        if (generators < 3) throw BadParameter("exponent_row: no generator c");
        row[2] += 1;
        break;
      default: throw BadParameter("exponent_row: bad letter");
    }
  }
  return row;
}

AbelianInvariants abelianization(const FamilySpec& spec) {
  spec.validate();
  const int gens = spec.three_generators() ? 3 : 2;
  Matrix matrix;
  for (const Word& r : spec.relators()) matrix.push_back(exponent_row(r, gens));
  return smith_invariants(std::move(matrix), gens);
}

}  // namespace cubicay
