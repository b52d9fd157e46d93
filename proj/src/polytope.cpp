#include "relmix/polytope.hpp"

#include <algorithm>

#include "relmix/feasible.hpp"
#include "relmix/linalg.hpp"

namespace relmix {

namespace {

// Base-vertex triangulation: cones from the lexicographically smallest
// vertex over a recursive triangulation of the facets that avoid it.
void triangulate_rec(const std::vector<IntVector>& points,
                     std::vector<std::vector<IntVector>>& out) {
  HullResult h = convex_hull(points);
  if (h.affine_dim == 0) {
    out.push_back({h.vertices[0]});
    return;
  }
  const IntVector& apex = h.vertices[0];
  for (const HullFacet& f : h.facets) {
    bool has_apex = false;
    std::vector<IntVector> fpts;
    fpts.reserve(f.vertices.size());
    for (int vi : f.vertices) {
      if (h.vertices[static_cast<size_t>(vi)] == apex) has_apex = true;
      fpts.push_back(h.vertices[static_cast<size_t>(vi)]);
    }
    if (has_apex) continue;
    std::vector<std::vector<IntVector>> sub;
    triangulate_rec(fpts, sub);
    for (std::vector<IntVector>& s : sub) {
      s.push_back(apex);
      out.push_back(std::move(s));
    }
  }
}

Int signed_sum_over_subsets(const std::vector<Polytope>& args) {
  const int n = static_cast<int>(args.size());
  // sums[mask] = vertex set of the Minkowski sum over the subset
  std::vector<Polytope> sums;
  sums.reserve(static_cast<size_t>(1) << n);
  sums.emplace_back(std::vector<IntVector>{IntVector::zero(args[0].dim())});
  Int total = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    unsigned low = mask & (mask - 1);
    int bit = __builtin_ctz(mask);
    Polytope sum = low == 0
                       ? args[static_cast<size_t>(bit)]
                       : minkowski_sum_polytopes(sums[low], args[static_cast<size_t>(bit)]);
    Rat vol = lattice_volume(sum);
    Int v(vol.get_num());  // lattice volumes of lattice polytopes are integers
    if ((n - __builtin_popcount(mask)) % 2 == 0) {
      total += v;
    } else {
      total -= v;
    }
    sums.push_back(std::move(sum));
  }
  return total;
}

}  // namespace

Polytope::Polytope(std::vector<IntVector> points) {
  HullResult h = convex_hull(points);
  vertices_ = std::move(h.vertices);
  dim_ = vertices_[0].dim();
}

bool Polytope::operator<(const Polytope& other) const {
  if (dim_ != other.dim_) return dim_ < other.dim_;
  return vertices_ < other.vertices_;
}

Rat lattice_volume(const Polytope& k) {
  if (static_cast<int>(k.vertices().size()) <= k.dim()) return Rat(0);
  HullResult h = convex_hull(k.vertices());
  if (h.affine_dim < k.dim()) return Rat(0);
  std::vector<std::vector<IntVector>> simplices;
  triangulate_rec(k.vertices(), simplices);
  Rat total(0);
  for (const std::vector<IntVector>& s : simplices) total += simplex_volume(s);
  return total;
}

Rat lattice_volume(const Polytope& k, const Covector& gamma) {
  if (gamma.dim() != k.dim()) throw DimensionMismatch();
  const Int level = gamma.apply(k.vertices()[0]);
  for (const IntVector& v : k.vertices()) {
    if (gamma.apply(v) != level) {
      throw NotParallel("lattice_volume: vertices span several level sets of " +
                        gamma.coords().str());
    }
  }
  KernelMap map(gamma.coords());
  std::vector<IntVector> transported;
  transported.reserve(k.vertices().size());
  for (const IntVector& v : k.vertices()) {
    transported.push_back(map.coords(v - k.vertices()[0]));
  }
  return lattice_volume(Polytope(std::move(transported)));
}

Polytope minkowski_sum_polytopes(const Polytope& k, const Polytope& l) {
  if (k.dim() != l.dim()) throw DimensionMismatch();
  std::vector<IntVector> sums;
  sums.reserve(k.vertices().size() * l.vertices().size());
  for (const IntVector& a : k.vertices())
    for (const IntVector& b : l.vertices()) sums.push_back(a + b);
  return Polytope(std::move(sums));
}

Rat mixed_volume(const std::vector<Polytope>& args) {
  if (args.empty()) throw ArityMismatch("mixed_volume: no arguments");
  const int n = args[0].dim();
  for (const Polytope& k : args) {
    if (k.dim() != n) throw DimensionMismatch();
  }
  if (static_cast<int>(args.size()) != n) {
    throw ArityMismatch("mixed_volume: need n polytopes in dimension n");
  }
  // The signed inclusion-exclusion total over lattice volumes is n! times
  // the mixed volume normalized to lattice_volume on the diagonal.
  Rat result(signed_sum_over_subsets(args));
  result /= Rat(factorial(n));
  return result;
}

Rat mixed_volume(const std::vector<Polytope>& args, const Covector& gamma) {
  const int n = gamma.dim();
  if (static_cast<int>(args.size()) != n - 1) {
    throw ArityMismatch("mixed_volume: need n-1 polytopes parallel to ker");
  }
  std::vector<Polytope> transported;
  transported.reserve(args.size());
  KernelMap map(gamma.coords());
  for (const Polytope& k : args) {
    if (k.dim() != n) throw DimensionMismatch();
    const Int level = gamma.apply(k.vertices()[0]);
    std::vector<IntVector> moved;
    moved.reserve(k.vertices().size());
    for (const IntVector& v : k.vertices()) {
      if (gamma.apply(v) != level) {
        throw NotParallel("mixed_volume: argument not parallel to ker " +
                          gamma.coords().str());
      }
      moved.push_back(map.coords(v - k.vertices()[0]));
    }
    transported.emplace_back(std::move(moved));
  }
  return mixed_volume(transported);
}

bool polytope_contains(const Polytope& k, const IntVector& p) {
  if (k.dim() != p.dim()) throw DimensionMismatch();
  const std::vector<IntVector>& verts = k.vertices();
  const int m = static_cast<int>(verts.size());
  if (m == 1) return verts[0] == p;
  // Convex coefficients with the last one substituted out.
  const int vars = m - 1;
  std::vector<LinearConstraint> cs;
  for (int j = 0; j < vars; ++j) {
    LinearConstraint c{std::vector<Rat>(static_cast<size_t>(vars), Rat(0)), Rat(0)};
    c.coeffs[static_cast<size_t>(j)] = 1;
    cs.push_back(std::move(c));
  }
  {
    LinearConstraint c{std::vector<Rat>(static_cast<size_t>(vars), Rat(-1)), Rat(-1)};
    cs.push_back(std::move(c));
  }
  for (int i = 0; i < k.dim(); ++i) {
    // sum_j lambda_j (v_j - v_last)[i] = p[i] - v_last[i], as two inequalities
    LinearConstraint ge{std::vector<Rat>(static_cast<size_t>(vars)), Rat(p[i] - verts.back()[i])};
    for (int j = 0; j < vars; ++j) {
      ge.coeffs[static_cast<size_t>(j)] = Rat(verts[static_cast<size_t>(j)][i] - verts.back()[i]);
    }
    LinearConstraint le{std::vector<Rat>(static_cast<size_t>(vars)), -ge.rhs};
    for (int j = 0; j < vars; ++j) le.coeffs[static_cast<size_t>(j)] = -ge.coeffs[static_cast<size_t>(j)];
    cs.push_back(std::move(ge));
    cs.push_back(std::move(le));
  }
  return static_cast<bool>(feasible(cs, vars));
}

}  // namespace relmix
