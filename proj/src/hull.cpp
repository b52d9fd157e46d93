#include "relmix/hull.hpp"

#include <algorithm>
#include <cstdint>

#include "relmix/linalg.hpp"

namespace relmix {

namespace {

// Small dynamic bitset for constraint-activity sets.
struct Bits {
  std::vector<std::uint64_t> w;

  explicit Bits(size_t nbits = 0) : w((nbits + 63) / 64, 0) {}
  void set(size_t i) { w[i / 64] |= (std::uint64_t(1) << (i % 64)); }
  bool test(size_t i) const {
    return (w[i / 64] >> (i % 64)) & 1;
  }
  static Bits intersect(const Bits& a, const Bits& b) {
    Bits r;
    r.w.resize(a.w.size());
    for (size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
    return r;
  }
  // this included in other
  bool subset_of(const Bits& other) const {
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] & ~other.w[i]) return false;
    return true;
  }
};

// Incremental row-echelon rank tracker over Q for integer rows.
class RowReducer {
 public:
  explicit RowReducer(int cols) : cols_(cols) {}

  // Returns true (and absorbs the row) if it increases the rank.
  bool add(const IntVector& row) {
    std::vector<Rat> r(static_cast<size_t>(cols_));
    for (int i = 0; i < cols_; ++i) r[static_cast<size_t>(i)] = Rat(row[i]);
    for (size_t k = 0; k < rows_.size(); ++k) {
      const Rat& lead = r[static_cast<size_t>(pivot_[k])];
      if (lead != 0) {
        Rat f = lead / rows_[k][static_cast<size_t>(pivot_[k])];
        for (int i = 0; i < cols_; ++i)
          r[static_cast<size_t>(i)] -= f * rows_[k][static_cast<size_t>(i)];
      }
    }
    for (int i = 0; i < cols_; ++i) {
      if (r[static_cast<size_t>(i)] != 0) {
        pivot_.push_back(i);
        rows_.push_back(std::move(r));
        return true;
      }
    }
    return false;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int cols_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<int> pivot_;
};

// Gaussian elimination solve of a square rational system.
bool solve_square(std::vector<std::vector<Rat>> a, std::vector<Rat> b,
                  std::vector<Rat>& out) {
  const size_t m = a.size();
  for (size_t c = 0; c < m; ++c) {
    size_t pivot = c;
    while (pivot < m && a[pivot][c] == 0) ++pivot;
    if (pivot == m) return false;
    std::swap(a[pivot], a[c]);
    std::swap(b[pivot], b[c]);
    for (size_t i = 0; i < m; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (size_t j = c; j < m; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  out.resize(m);
  for (size_t i = 0; i < m; ++i) out[i] = b[i] / a[i][i];
  return true;
}

struct Ray {
  IntVector vec;
  Bits active;
};

// Extreme rays of the pointed cone {y : row_j . y >= 0 for all j}; the rows
// must have full column rank. Double-description: start from a simplicial
// subcone, insert the remaining constraints one at a time, generating new
// rays from adjacent positive/negative pairs.
std::vector<Ray> dual_rays(const std::vector<IntVector>& rows, int m) {
  const size_t n_rows = rows.size();

  RowReducer reducer(m);
  std::vector<size_t> initial;
  std::vector<bool> is_initial(n_rows, false);
  for (size_t j = 0; j < n_rows && reducer.rank() < m; ++j) {
    if (reducer.add(rows[j])) {
      initial.push_back(j);
      is_initial[j] = true;
    }
  }
  if (static_cast<int>(initial.size()) != m) {
    throw ConsistencyViolation("dual_rays: constraint matrix is rank-deficient");
  }

  std::vector<std::vector<Rat>> a0(static_cast<size_t>(m),
                                   std::vector<Rat>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      a0[static_cast<size_t>(i)][static_cast<size_t>(k)] =
          Rat(rows[initial[static_cast<size_t>(i)]][k]);

  std::vector<Ray> rays;
  for (int i = 0; i < m; ++i) {
    std::vector<Rat> e(static_cast<size_t>(m), Rat(0)), x;
    e[static_cast<size_t>(i)] = 1;
    if (!solve_square(a0, e, x)) {
      throw ConsistencyViolation("dual_rays: singular initial cone");
    }
    Int scale = 1;
    for (const Rat& q : x) scale = scale / gcd(scale, q.get_den()) * q.get_den();
    std::vector<Int> v(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
      v[static_cast<size_t>(k)] =
          x[static_cast<size_t>(k)].get_num() *
          (scale / x[static_cast<size_t>(k)].get_den());
    }
    Ray ray{primitive(IntVector(std::move(v))), Bits(n_rows)};
    for (int k = 0; k < m; ++k) {
      if (k != i) ray.active.set(initial[static_cast<size_t>(k)]);
    }
    rays.push_back(std::move(ray));
  }

  for (size_t j = 0; j < n_rows; ++j) {
    if (is_initial[j]) continue;
    std::vector<Int> s(rays.size());
    std::vector<size_t> pos, neg;
    for (size_t r = 0; r < rays.size(); ++r) {
      s[r] = rows[j].dot(rays[r].vec);
      if (s[r] > 0) {
        pos.push_back(r);
      } else if (s[r] < 0) {
        neg.push_back(r);
      } else {
        rays[r].active.set(j);
      }
    }
    if (neg.empty()) continue;

    std::vector<Ray> created;
    for (size_t p : pos) {
      for (size_t q : neg) {
        Bits z = Bits::intersect(rays[p].active, rays[q].active);
        bool adjacent = true;
        for (size_t r = 0; r < rays.size(); ++r) {
          if (r == p || r == q) continue;
          if (z.subset_of(rays[r].active)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        IntVector v = rays[q].vec * s[p] - rays[p].vec * s[q];
        z.set(j);
        created.push_back(Ray{primitive(v), std::move(z)});
      }
    }

    std::vector<Ray> kept;
    kept.reserve(pos.size() + rays.size() + created.size());
    for (size_t r = 0; r < rays.size(); ++r) {
      if (s[r] >= 0) kept.push_back(std::move(rays[r]));
    }
    for (Ray& ray : created) kept.push_back(std::move(ray));
    rays = std::move(kept);
  }
  return rays;
}

Int denominator_lcm(const std::vector<Rat>& values) {
  Int scale = 1;
  for (const Rat& q : values) scale = scale / gcd(scale, q.get_den()) * q.get_den();
  return scale;
}

}  // namespace

HullResult convex_hull(const std::vector<IntVector>& points) {
  if (points.empty()) {
    throw DimensionMismatch("convex_hull: empty point set");
  }
  const int n = points[0].dim();
  for (const IntVector& p : points) {
    if (p.dim() != n) throw DimensionMismatch("convex_hull: mixed dimensions");
  }

  std::vector<IntVector> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  HullResult result;
  if (pts.size() == 1) {
    result.vertices = pts;
    result.affine_dim = 0;
    return result;
  }

  // Affine span: greedy independent difference directions from the base.
  const IntVector& base = pts[0];
  RowReducer span(n);
  std::vector<IntVector> dirs;
  for (size_t j = 1; j < pts.size(); ++j) {
    IntVector d = pts[j] - base;
    if (span.add(d)) dirs.push_back(std::move(d));
  }
  const int d = static_cast<int>(dirs.size());

  const bool full_dim = (d == n);

  // Pivot coordinates and the d x d transport matrix for the degenerate case.
  std::vector<int> pivots;
  std::vector<std::vector<Rat>> mt;  // M with M[i][k] = dirs[k][pivots[i]]
  if (!full_dim) {
    RowReducer cols(d);
    for (int coord = 0; coord < n && static_cast<int>(pivots.size()) < d; ++coord) {
      std::vector<Int> col(static_cast<size_t>(d));
      for (int k = 0; k < d; ++k) col[static_cast<size_t>(k)] = dirs[static_cast<size_t>(k)][coord];
      if (cols.add(IntVector(std::move(col)))) pivots.push_back(coord);
    }
    mt.assign(static_cast<size_t>(d), std::vector<Rat>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k)
        mt[static_cast<size_t>(i)][static_cast<size_t>(k)] =
            Rat(dirs[static_cast<size_t>(k)][pivots[static_cast<size_t>(i)]]);
  }

  // Lifted homogeneous constraints (u_j, 1), cleared to primitive integers.
  std::vector<IntVector> lifted;
  lifted.reserve(pts.size());
  for (const IntVector& p : pts) {
    IntVector diff = p - base;
    std::vector<Int> row;
    row.reserve(static_cast<size_t>(d) + 1);
    if (full_dim) {
      for (int i = 0; i < n; ++i) row.push_back(diff[i]);
      row.emplace_back(1);
    } else {
      std::vector<Rat> rhs(static_cast<size_t>(d)), u;
      for (int i = 0; i < d; ++i) rhs[static_cast<size_t>(i)] = Rat(diff[pivots[static_cast<size_t>(i)]]);
      if (!solve_square(mt, rhs, u)) {
        throw ConsistencyViolation("convex_hull: span projection failed");
      }
      u.emplace_back(1);
      Int scale = denominator_lcm(u);
      for (const Rat& q : u) row.push_back(Int(q.get_num() * (scale / q.get_den())));
    }
    lifted.push_back(primitive(IntVector(std::move(row))));
  }

  std::vector<Ray> rays = dual_rays(lifted, d + 1);

  // Vertex detection: a point is extreme iff its active facet normals span
  // the projected space.
  std::vector<std::vector<size_t>> point_facets(pts.size());
  std::vector<IntVector> proj_normals;
  std::vector<size_t> facet_rays;
  for (size_t r = 0; r < rays.size(); ++r) {
    std::vector<Int> nd(rays[r].vec.coords().begin(),
                        rays[r].vec.coords().end() - 1);
    IntVector pn(std::move(nd));
    if (pn.is_zero()) continue;  // the trivial valid inequality, not a facet
    for (size_t j = 0; j < pts.size(); ++j) {
      if (rays[r].active.test(j)) point_facets[j].push_back(proj_normals.size());
    }
    proj_normals.push_back(std::move(pn));
    facet_rays.push_back(r);
  }

  std::vector<int> vertex_index(pts.size(), -1);
  for (size_t j = 0; j < pts.size(); ++j) {
    if (static_cast<int>(point_facets[j].size()) < d) continue;
    std::vector<IntVector> normals;
    normals.reserve(point_facets[j].size());
    for (size_t f : point_facets[j]) normals.push_back(proj_normals[f]);
    if (rank(normals) == d) {
      vertex_index[j] = static_cast<int>(result.vertices.size());
      result.vertices.push_back(pts[j]);
    }
  }

  for (size_t f = 0; f < proj_normals.size(); ++f) {
    const Ray& ray = rays[facet_rays[f]];
    const IntVector& pn = proj_normals[f];
    const Int& t = ray.vec[d];

    HullFacet facet;
    if (full_dim) {
      Int g = content(pn);
      std::vector<Int> nv(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) nv[static_cast<size_t>(i)] = exact_div(pn[i], g);
      facet.normal = IntVector(std::move(nv));
      Rat offset(pn.dot(base) - t, g);
      offset.canonicalize();
      facet.offset = offset;
    } else {
      // Ambient normal N with N[pivots[i]] = z_i, solving M^T z = pn.
      std::vector<std::vector<Rat>> m(static_cast<size_t>(d),
                                      std::vector<Rat>(static_cast<size_t>(d)));
      for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k)
          m[static_cast<size_t>(i)][static_cast<size_t>(k)] =
              mt[static_cast<size_t>(k)][static_cast<size_t>(i)];
      std::vector<Rat> rhs(static_cast<size_t>(d)), z;
      for (int i = 0; i < d; ++i) rhs[static_cast<size_t>(i)] = Rat(pn[i]);
      if (!solve_square(m, rhs, z)) {
        throw ConsistencyViolation("convex_hull: normal lift failed");
      }
      Int scale = denominator_lcm(z);
      std::vector<Int> nv(static_cast<size_t>(n), Int(0));
      for (int i = 0; i < d; ++i)
        nv[static_cast<size_t>(pivots[static_cast<size_t>(i)])] =
            z[static_cast<size_t>(i)].get_num() *
            (scale / z[static_cast<size_t>(i)].get_den());
      IntVector nf(std::move(nv));
      Int g = content(nf);
      facet.normal = primitive(nf);
      Rat offset = Rat(nf.dot(base)) - Rat(t * scale, 1);
      offset /= Rat(g);
      facet.offset = offset;
    }
    for (size_t j = 0; j < pts.size(); ++j) {
      if (ray.active.test(j) && vertex_index[j] >= 0) {
        facet.vertices.push_back(vertex_index[j]);
      }
    }
    result.facets.push_back(std::move(facet));
  }

  std::sort(result.facets.begin(), result.facets.end(),
            [](const HullFacet& a, const HullFacet& b) {
              if (a.normal != b.normal) return a.normal < b.normal;
              return a.offset < b.offset;
            });
  result.affine_dim = d;
  return result;
}

}  // namespace relmix
