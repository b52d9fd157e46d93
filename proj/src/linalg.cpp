#include "relmix/linalg.hpp"

#include <cstdlib>
#include <utility>

namespace relmix {

namespace {

// Fraction-free (Bareiss) elimination; returns the determinant of a square
// matrix, or computes the rank when `rank_out` is non-null.
Int bareiss(std::vector<std::vector<Int>> m, int* rank_out) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  Int prev = 1;
  int sign = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      std::swap(m[pivot], m[r]);
      sign = -sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        m[i][j] = exact_div(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  if (rank_out) {
    *rank_out = r;
    return 0;
  }
  if (r < rows) return 0;  // singular
  return sign > 0 ? prev : Int(-prev);
}

std::vector<std::vector<Int>> to_matrix(const std::vector<IntVector>& rows) {
  std::vector<std::vector<Int>> m;
  m.reserve(rows.size());
  for (const IntVector& r : rows) m.push_back(r.coords());
  return m;
}

}  // namespace

Int determinant(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 1;
  for (const IntVector& r : rows) {
    if (r.dim() != static_cast<int>(rows.size())) throw DimensionMismatch();
  }
  return bareiss(to_matrix(rows), nullptr);
}

int rank(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  int r = 0;
  bareiss(to_matrix(rows), &r);
  return r;
}

Rat simplex_volume(const std::vector<IntVector>& vertices) {
  if (vertices.empty()) throw DimensionMismatch("simplex_volume: no vertices");
  const int n = vertices[0].dim();
  if (static_cast<int>(vertices.size()) != n + 1) {
    throw DimensionMismatch("simplex_volume: need n+1 points in dimension n");
  }
  std::vector<IntVector> edges;
  edges.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) edges.push_back(vertices[i] - vertices[0]);
  Int d = determinant(edges);
  return Rat(abs(d));
}

std::vector<IntVector> kernel_lattice_basis(const IntVector& gamma) {
  KernelMap map(gamma);
  return map.basis();
}

// Column reduction of the single row gamma to (1, 0, ..., 0) by unimodular
// operations. U collects the column operations, W = U^{-1} the mirrored row
// operations; the kernel lattice is generated by columns 2..n of U and
// coordinates in that basis are read off rows 2..n of W.
KernelMap::KernelMap(const IntVector& gamma) : gamma_(gamma) {
  if (gamma.is_zero()) throw ZeroVector("kernel_lattice_basis: zero covector");
  if (content(gamma) != 1) {
    throw NotPrimitive("kernel_lattice_basis: gcd of entries is " +
                       content(gamma).get_str());
  }
  const int n = gamma.dim();
  std::vector<Int> row = gamma.coords();
  std::vector<std::vector<Int>> u(static_cast<size_t>(n),
                                  std::vector<Int>(static_cast<size_t>(n), 0));
  std::vector<std::vector<Int>> w = u;
  for (int i = 0; i < n; ++i) u[i][i] = w[i][i] = 1;

  auto col_sub = [&](int target, int source, const Int& q) {
    // column_target -= q * column_source; inverse on W: row_source += q * row_target
    row[target] -= q * row[source];
    for (int i = 0; i < n; ++i) u[i][target] -= q * u[i][source];
    for (int j = 0; j < n; ++j) w[source][j] += q * w[target][j];
  };
  auto col_swap = [&](int a, int b) {
    std::swap(row[a], row[b]);
    for (int i = 0; i < n; ++i) std::swap(u[i][a], u[i][b]);
    std::swap(w[a], w[b]);
  };
  auto col_negate = [&](int a) {
    row[a] = -row[a];
    for (int i = 0; i < n; ++i) u[i][a] = -u[i][a];
    for (int j = 0; j < n; ++j) w[a][j] = -w[a][j];
  };

  for (;;) {
    // pivot: nonzero entry of smallest absolute value
    int pivot = -1;
    for (int j = 0; j < n; ++j) {
      if (row[j] != 0 && (pivot < 0 || abs(row[j]) < abs(row[pivot]))) pivot = j;
    }
    bool reduced = true;
    for (int j = 0; j < n; ++j) {
      if (j == pivot || row[j] == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), row[j].get_mpz_t(), row[pivot].get_mpz_t());
      col_sub(j, pivot, q);
      if (row[j] != 0) reduced = false;
    }
    if (reduced) {
      if (pivot != 0) col_swap(0, pivot);
      if (row[0] < 0) col_negate(0);
      break;
    }
  }
  // row is now (1, 0, ..., 0)

  basis_.reserve(static_cast<size_t>(n - 1));
  for (int j = 1; j < n; ++j) {
    std::vector<Int> col(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = u[i][j];
    basis_.emplace_back(std::move(col));
  }
  transport_.reserve(static_cast<size_t>(n - 1));
  for (int i = 1; i < n; ++i) transport_.emplace_back(std::move(w[i]));
}

IntVector KernelMap::coords(const IntVector& p) const {
  if (p.dim() != gamma_.dim()) throw DimensionMismatch();
  if (gamma_.dot(p) != 0) {
    throw NotParallel("point " + p.str() + " is not in the kernel of " +
                      gamma_.str());
  }
  std::vector<Int> y;
  y.reserve(transport_.size());
  for (const IntVector& row : transport_) y.push_back(row.dot(p));
  return IntVector(std::move(y));
}

}  // namespace relmix
