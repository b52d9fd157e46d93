#include "relmix/tuple.hpp"

#include <sstream>

#include "relmix/linalg.hpp"

namespace relmix {

PolyTuple::PolyTuple(std::vector<OrthantPolyhedron> members)
    : members_(std::move(members)) {
  if (members_.empty()) throw ArityMismatch("tuple must have n >= 1 members");
  dim_ = members_[0].dim();
  if (static_cast<int>(members_.size()) != dim_) {
    throw ArityMismatch("tuple of " + std::to_string(members_.size()) +
                        " polyhedra in dimension " + std::to_string(dim_));
  }
  for (const OrthantPolyhedron& b : members_) {
    if (b.dim() != dim_) throw DimensionMismatch("mixed dimensions in tuple");
  }
}

PolyTuple PolyTuple::with_member(int i, OrthantPolyhedron b) const {
  std::vector<OrthantPolyhedron> m = members_;
  m[static_cast<size_t>(i)] = std::move(b);
  return PolyTuple(std::move(m));
}

std::string PolyTuple::str() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < size(); ++i) {
    if (i) out << ", ";
    out << '{';
    const std::vector<IntVector>& gens = members_[static_cast<size_t>(i)].generators();
    for (size_t g = 0; g < gens.size(); ++g) {
      if (g) out << ' ';
      out << gens[g].str();
    }
    out << '}';
  }
  out << ']';
  return out.str();
}

// Signed inclusion-exclusion over the pair volumes of Minkowski sub-sums.
// The empty index set contributes the neutral pair (C, C) of volume 0; the
// signed lattice-volume total is n! times the mixed volume.
Int rmv_inclusion_exclusion(const PolyTuple& t) {
  const int n = t.size();
  std::vector<OrthantPolyhedron> sums;
  sums.reserve(static_cast<size_t>(1) << n);
  Int total = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    unsigned low = mask & (mask - 1);
    int bit = __builtin_ctz(mask);
    OrthantPolyhedron sum =
        low == 0 ? t[bit] : minkowski_sum(sums[low - 1], t[bit]);
    Int v = complement_volume(sum);
    if ((n - __builtin_popcount(mask)) % 2 == 0) {
      total += v;
    } else {
      total -= v;
    }
    sums.push_back(std::move(sum));
  }
  return exact_div(total, factorial(n));
}

Int rmv_support_formula(const PolyTuple& t) {
  const int n = t.size();
  if (n == 1) {
    // The unique primitive positive covector is (1) and the empty mixed
    // volume is 1.
    return support_value(t[0], Covector({1}));
  }
  OrthantPolyhedron rest = t[1];
  for (int i = 2; i < n; ++i) rest = minkowski_sum(rest, t[i]);
  Int total = 0;
  for (const Covector& gamma : positive_facet_normals(rest)) {
    Int coeff = support_value(t[0], gamma);
    if (coeff == 0) continue;
    std::vector<Polytope> faces;
    faces.reserve(static_cast<size_t>(n) - 1);
    for (int i = 1; i < n; ++i) faces.push_back(support_face(t[i], gamma));
    Rat mv = mixed_volume(faces, gamma);
    if (mv.get_den() != 1) {
      throw ConsistencyViolation("non-integer face mixed volume " +
                                 mv.get_str() + " at covector " +
                                 gamma.coords().str());
    }
    total += coeff * Int(mv.get_num());
  }
  return total;
}

Int rmv(const PolyTuple& t, RmvMode mode) {
  switch (mode) {
    case RmvMode::InclusionExclusion:
      return rmv_inclusion_exclusion(t);
    case RmvMode::Support:
      return rmv_support_formula(t);
    case RmvMode::Both:
      break;
  }
  Int ie = rmv_inclusion_exclusion(t);
  Int support = rmv_support_formula(t);
  if (ie != support) {
    throw OracleMismatch(ie, support,
                         "mixed-volume algorithms disagree on " + t.str() +
                             ": inclusion-exclusion " + ie.get_str() +
                             ", support formula " + support.get_str());
  }
  return ie;
}

}  // namespace relmix
