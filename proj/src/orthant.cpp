#include "relmix/orthant.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "relmix/feasible.hpp"
#include "relmix/linalg.hpp"

namespace relmix {

namespace {

// B intersected with {sum x_i <= clip} equals conv(generators u {clip e_i})
// whenever clip is at least the largest generator coordinate sum, because the
// slice B n {sum = clip} is then the full simplex conv{clip e_i}.
std::vector<IntVector> clip_points(int dim, const std::vector<IntVector>& gens,
                                   const Int& clip) {
  std::vector<IntVector> pts = gens;
  for (int i = 0; i < dim; ++i) {
    pts.push_back(IntVector::unit(dim, i) * clip);
  }
  return pts;
}

// Drop points coordinatewise dominated by another point before the exact
// hull runs.
std::vector<IntVector> domination_filter(std::vector<IntVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<IntVector> kept;
  kept.reserve(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < pts.size() && !dominated; ++j) {
      if (j != i && pts[j].dominated_by(pts[i])) dominated = true;
    }
    if (!dominated) kept.push_back(pts[i]);
  }
  return kept;
}

Int max_sum(const std::vector<IntVector>& gens) {
  Int m = 0;
  for (const IntVector& g : gens) {
    Int s = g.coord_sum();
    if (s > m) m = s;
  }
  return m;
}

}  // namespace

OrthantPolyhedron::OrthantPolyhedron(int dim, std::vector<IntVector> generators)
    : dim_(dim) {
  if (dim < 1) throw DimensionMismatch("polyhedron dimension must be >= 1");
  if (generators.empty()) {
    throw UnboundedComplement("a polyhedron needs at least one generator");
  }
  for (const IntVector& g : generators) {
    if (g.dim() != dim) {
      throw DimensionMismatch("generator " + g.str() + " has wrong dimension");
    }
    if (!g.all_nonnegative()) {
      throw NegativeCoordinate("generator " + g.str() +
                               " has a negative coordinate");
    }
  }
  // Bounded complement: every axis must carry a generator a*e_i.
  for (int i = 0; i < dim; ++i) {
    bool found = false;
    for (const IntVector& g : generators) {
      bool on_axis = true;
      for (int j = 0; j < dim && on_axis; ++j) {
        if (j != i && g[j] != 0) on_axis = false;
      }
      if (on_axis) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw UnboundedComplement(
          "unbounded complement: no generator on coordinate axis " +
          std::to_string(i + 1));
    }
  }

  // Canonical generators: the vertices of B, i.e. the non-clip vertices of
  // the clipped hull.
  std::vector<IntVector> pts = domination_filter(std::move(generators));
  if (pts.size() == 1) {
    generators_ = std::move(pts);
    return;
  }
  Int clip = max_sum(pts) + 1;
  HullResult h = convex_hull(clip_points(dim, pts, clip));
  for (const IntVector& v : h.vertices) {
    if (v.coord_sum() < clip) generators_.push_back(v);
  }
}

Int OrthantPolyhedron::max_generator_sum() const { return max_sum(generators_); }

bool OrthantPolyhedron::operator<(const OrthantPolyhedron& other) const {
  if (dim_ != other.dim_) return dim_ < other.dim_;
  return generators_ < other.generators_;
}

OrthantPolyhedron c_simplex(const std::vector<Int>& legs) {
  const int n = static_cast<int>(legs.size());
  std::vector<IntVector> gens;
  gens.reserve(legs.size());
  for (int i = 0; i < n; ++i) {
    if (legs[static_cast<size_t>(i)] < 1) {
      throw NonPositiveLeg("leg " + std::to_string(i + 1) + " is " +
                           legs[static_cast<size_t>(i)].get_str());
    }
    gens.push_back(IntVector::unit(n, i) * legs[static_cast<size_t>(i)]);
  }
  return OrthantPolyhedron(n, std::move(gens));
}

OrthantPolyhedron minkowski_sum(const OrthantPolyhedron& b1,
                                const OrthantPolyhedron& b2) {
  if (b1.dim() != b2.dim()) throw DimensionMismatch();
  std::vector<IntVector> sums;
  sums.reserve(b1.generators().size() * b2.generators().size());
  for (const IntVector& a : b1.generators())
    for (const IntVector& b : b2.generators()) sums.push_back(a + b);
  return OrthantPolyhedron(b1.dim(), std::move(sums));
}

Int support_value(const OrthantPolyhedron& b, const Covector& gamma) {
  if (b.dim() != gamma.dim()) throw DimensionMismatch();
  Int best = gamma.apply(b.generators()[0]);
  for (const IntVector& g : b.generators()) {
    Int v = gamma.apply(g);
    if (v < best) best = v;
  }
  return best;
}

Polytope support_face(const OrthantPolyhedron& b, const Covector& gamma) {
  Int value = support_value(b, gamma);
  std::vector<IntVector> face;
  for (const IntVector& g : b.generators()) {
    if (gamma.apply(g) == value) face.push_back(g);
  }
  return Polytope(std::move(face));
}

bool contains(const OrthantPolyhedron& b, const IntVector& p) {
  if (b.dim() != p.dim()) throw DimensionMismatch();
  const std::vector<IntVector>& gens = b.generators();
  for (const IntVector& g : gens) {
    if (g.dominated_by(p)) return true;
  }
  const int m = static_cast<int>(gens.size());
  if (m == 1) return false;
  // Convex coefficients lambda_0..lambda_{m-2}, the last substituted out:
  // q = g_last + sum lambda_j (g_j - g_last) must satisfy q <= p.
  const int vars = m - 1;
  std::vector<LinearConstraint> cs;
  for (int j = 0; j < vars; ++j) {
    LinearConstraint c{std::vector<Rat>(static_cast<size_t>(vars), Rat(0)), Rat(0)};
    c.coeffs[static_cast<size_t>(j)] = 1;
    cs.push_back(std::move(c));
  }
  cs.push_back(LinearConstraint{std::vector<Rat>(static_cast<size_t>(vars), Rat(-1)), Rat(-1)});
  for (int i = 0; i < b.dim(); ++i) {
    LinearConstraint c{std::vector<Rat>(static_cast<size_t>(vars)), Rat(gens.back()[i] - p[i])};
    for (int j = 0; j < vars; ++j) {
      c.coeffs[static_cast<size_t>(j)] = Rat(gens.back()[i] - gens[static_cast<size_t>(j)][i]);
    }
    cs.push_back(std::move(c));
  }
  return static_cast<bool>(feasible(cs, vars));
}

Int complement_volume_clipped(const OrthantPolyhedron& b, const Int& clip) {
  if (clip < b.max_generator_sum()) {
    throw ConsistencyViolation(
        "complement_volume: clipping constant below the generator sums");
  }
  const int n = b.dim();
  if (clip == 0) return 0;  // B equals the whole orthant
  Polytope clipped(clip_points(n, b.generators(), clip));
  Rat vol = lattice_volume(clipped);
  Int result = ipow(clip, n) - Int(vol.get_num());
  return result;
}

Int complement_volume(const OrthantPolyhedron& b) {
  return complement_volume_clipped(b, b.max_generator_sum());
}

std::vector<Covector> positive_facet_normals(const OrthantPolyhedron& b) {
  const int n = b.dim();
  Int clip = b.max_generator_sum() + 1;
  HullResult h = convex_hull(clip_points(n, b.generators(), clip));
  std::vector<Covector> normals;
  for (const HullFacet& f : h.facets) {
    bool positive = true;
    for (int i = 0; i < n && positive; ++i) {
      if (f.normal[i] <= 0) positive = false;
    }
    if (!positive) continue;
    bool touches_clip = false;
    for (int vi : f.vertices) {
      if (h.vertices[static_cast<size_t>(vi)].coord_sum() == clip) {
        touches_clip = true;
        break;
      }
    }
    if (touches_clip) continue;
    normals.emplace_back(f.normal);
  }
  std::sort(normals.begin(), normals.end());
  return normals;
}

std::vector<BoundedFace> bounded_faces(const OrthantPolyhedron& b) {
  const int n = b.dim();
  Int clip = b.max_generator_sum() + 1;
  HullResult h = convex_hull(clip_points(n, b.generators(), clip));
  const size_t nv = h.vertices.size();

  // Proper faces of the clipped polytope are the meet-closure of the facet
  // vertex sets; the bounded faces of B are those avoiding the clipping
  // hyperplane.
  using Word = std::uint64_t;
  const size_t words = (nv + 63) / 64;
  auto key_of = [&](const std::vector<int>& ids) {
    std::vector<Word> key(words, 0);
    for (int id : ids) key[static_cast<size_t>(id) / 64] |= Word(1) << (id % 64);
    return key;
  };
  std::set<std::vector<Word>> faces;
  std::vector<std::vector<Word>> worklist;
  for (const HullFacet& f : h.facets) {
    std::vector<Word> key = key_of(f.vertices);
    if (faces.insert(key).second) worklist.push_back(std::move(key));
  }
  std::vector<std::vector<Word>> all(worklist);
  while (!worklist.empty()) {
    std::vector<std::vector<Word>> next;
    for (const std::vector<Word>& a : worklist) {
      for (const std::vector<Word>& b2 : all) {
        std::vector<Word> meet(words);
        bool empty = true;
        for (size_t w = 0; w < words; ++w) {
          meet[w] = a[w] & b2[w];
          if (meet[w]) empty = false;
        }
        if (empty) continue;
        if (faces.insert(meet).second) next.push_back(std::move(meet));
      }
    }
    for (const std::vector<Word>& f : next) all.push_back(f);
    worklist = std::move(next);
  }

  std::vector<BoundedFace> result;
  for (const std::vector<Word>& key : faces) {
    std::vector<IntVector> verts;
    bool bounded = true;
    for (size_t v = 0; v < nv && bounded; ++v) {
      if ((key[v / 64] >> (v % 64)) & 1) {
        if (h.vertices[v].coord_sum() == clip) {
          bounded = false;
        } else {
          verts.push_back(h.vertices[v]);
        }
      }
    }
    if (!bounded || verts.empty()) continue;
    std::vector<IntVector> diffs;
    for (size_t i = 1; i < verts.size(); ++i) diffs.push_back(verts[i] - verts[0]);
    int k = diffs.empty() ? 0 : rank(diffs);
    result.push_back(BoundedFace{Polytope(std::move(verts)), k});
  }
  std::sort(result.begin(), result.end(),
            [](const BoundedFace& a, const BoundedFace& b2) {
              if (a.dimension != b2.dimension) return a.dimension < b2.dimension;
              return a.face < b2.face;
            });
  return result;
}

OrthantPolyhedron extend(const OrthantPolyhedron& b, const IntVector& delta) {
  if (delta.dim() != b.dim()) throw DimensionMismatch();
  if (!delta.all_nonnegative()) {
    throw NegativeCoordinate("extension point " + delta.str() +
                             " has a negative coordinate");
  }
  std::vector<IntVector> gens = b.generators();
  gens.push_back(delta);
  return OrthantPolyhedron(b.dim(), std::move(gens));
}

}  // namespace relmix
