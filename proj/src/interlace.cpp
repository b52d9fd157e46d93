#include "relmix/interlace.hpp"

#include "relmix/feasible.hpp"

namespace relmix {

namespace {

// Does the bounded face F meet conv(G) + C? Feasibility of
// sum mu_k v_k >= sum lambda_j g_j with both coefficient vectors convex,
// after substituting the last coefficient of each family.
bool face_meets_member(const Polytope& face, const OrthantPolyhedron& b) {
  const std::vector<IntVector>& vs = face.vertices();
  const std::vector<IntVector>& gs = b.generators();
  const int n = b.dim();
  const int mu = static_cast<int>(vs.size()) - 1;
  const int lam = static_cast<int>(gs.size()) - 1;
  const int vars = mu + lam;

  std::vector<LinearConstraint> cs;
  auto unit_lower = [&](int j) {
    LinearConstraint c{std::vector<Rat>(static_cast<size_t>(vars), Rat(0)), Rat(0)};
    c.coeffs[static_cast<size_t>(j)] = 1;
    cs.push_back(std::move(c));
  };
  for (int j = 0; j < vars; ++j) unit_lower(j);
  if (mu > 0) {
    LinearConstraint c{std::vector<Rat>(static_cast<size_t>(vars), Rat(0)), Rat(-1)};
    for (int j = 0; j < mu; ++j) c.coeffs[static_cast<size_t>(j)] = -1;
    cs.push_back(std::move(c));
  }
  if (lam > 0) {
    LinearConstraint c{std::vector<Rat>(static_cast<size_t>(vars), Rat(0)), Rat(-1)};
    for (int j = 0; j < lam; ++j) c.coeffs[static_cast<size_t>(mu + j)] = -1;
    cs.push_back(std::move(c));
  }
  // coordinatewise: x_i - q_i >= 0 with
  //   x = vs.back() + sum mu_k (vs_k - vs.back()),
  //   q = gs.back() + sum lambda_j (gs_j - gs.back())
  for (int i = 0; i < n; ++i) {
    LinearConstraint c{std::vector<Rat>(static_cast<size_t>(vars)),
                       Rat(gs.back()[i] - vs.back()[i])};
    for (int k = 0; k < mu; ++k) {
      c.coeffs[static_cast<size_t>(k)] = Rat(vs[static_cast<size_t>(k)][i] - vs.back()[i]);
    }
    for (int j = 0; j < lam; ++j) {
      c.coeffs[static_cast<size_t>(mu + j)] =
          Rat(gs.back()[i] - gs[static_cast<size_t>(j)][i]);
    }
    cs.push_back(std::move(c));
  }
  return static_cast<bool>(feasible(cs, vars));
}

}  // namespace

OrthantPolyhedron hull_union(const PolyTuple& t) {
  std::vector<IntVector> gens;
  for (const OrthantPolyhedron& b : t.members()) {
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  }
  return OrthantPolyhedron(t.dim(), std::move(gens));
}

InterlaceResult is_interlaced(const PolyTuple& t) {
  OrthantPolyhedron hull = hull_union(t);
  for (const BoundedFace& f : bounded_faces(hull)) {
    int meets = 0;
    for (const OrthantPolyhedron& b : t.members()) {
      if (face_meets_member(f.face, b)) ++meets;
    }
    if (meets < f.dimension + 1) {
      return InterlaceResult{false, f};
    }
  }
  return InterlaceResult{true, std::nullopt};
}

InterlacingVerdict interlacing_verdict(const PolyTuple& t) {
  InterlacingVerdict verdict{rmv(t, RmvMode::Both),
                             complement_volume(hull_union(t)),
                             is_interlaced(t).interlaced};
  bool equal = verdict.mv == verdict.hull_complement;
  if (equal != verdict.interlaced || verdict.mv < verdict.hull_complement) {
    throw ConsistencyViolation(
        "interlacing identity failed on " + t.str() + ": mv " +
        verdict.mv.get_str() + ", hull complement " +
        verdict.hull_complement.get_str() + ", interlaced " +
        (verdict.interlaced ? "true" : "false"));
  }
  return verdict;
}

}  // namespace relmix
