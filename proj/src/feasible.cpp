#include "relmix/feasible.hpp"

#include <algorithm>
#include <map>

namespace relmix {

namespace {

// Scale a constraint so the coefficient vector is integral with content 1
// (the rhs is carried along); canonical form for deduplication.
struct Row {
  std::vector<Rat> coeffs;
  Rat rhs;
};

void normalize(Row& row) {
  Int scale = 1;
  for (const Rat& c : row.coeffs) scale = scale / gcd(scale, c.get_den()) * c.get_den();
  Int g = 0;
  for (const Rat& c : row.coeffs) g = gcd(g, Int(c.get_num() * (scale / c.get_den())));
  Rat factor(scale, g == 0 ? Int(1) : g);
  factor.canonicalize();
  for (Rat& c : row.coeffs) c *= factor;
  row.rhs *= factor;
}

// Keep, per coefficient vector, only the strongest rhs.
std::vector<Row> dedup(std::vector<Row> rows) {
  std::map<std::vector<Rat>, Rat> best;
  for (Row& r : rows) {
    normalize(r);
    auto [it, inserted] = best.emplace(r.coeffs, r.rhs);
    if (!inserted && r.rhs > it->second) it->second = r.rhs;
  }
  std::vector<Row> out;
  out.reserve(best.size());
  for (auto& [coeffs, rhs] : best) out.push_back(Row{coeffs, rhs});
  return out;
}

}  // namespace

FeasibleResult feasible(const std::vector<LinearConstraint>& constraints,
                        int dim) {
  std::vector<Row> rows;
  rows.reserve(constraints.size());
  for (const LinearConstraint& c : constraints) {
    if (static_cast<int>(c.coeffs.size()) != dim) {
      throw DimensionMismatch("feasible: constraint arity != dimension");
    }
    rows.push_back(Row{c.coeffs, c.rhs});
  }

  // Eliminate variables from the last to the first, keeping each level's
  // system for witness back-substitution.
  std::vector<std::vector<Row>> levels(static_cast<size_t>(dim) + 1);
  levels[static_cast<size_t>(dim)] = dedup(std::move(rows));
  for (int v = dim - 1; v >= 0; --v) {
    const std::vector<Row>& cur = levels[static_cast<size_t>(v) + 1];
    std::vector<Row> next;
    std::vector<const Row*> pos, neg;
    for (const Row& r : cur) {
      int s = sgn(r.coeffs[static_cast<size_t>(v)]);
      if (s > 0) {
        pos.push_back(&r);
      } else if (s < 0) {
        neg.push_back(&r);
      } else {
        Row copy = r;
        copy.coeffs.resize(static_cast<size_t>(v));
        next.push_back(std::move(copy));
      }
    }
    for (const Row* p : pos) {
      for (const Row* q : neg) {
        // p: a x_v + P.y >= b with a > 0; q: -c x_v + Q.y >= d with c > 0.
        // Combine: c*P.y + a*Q.y >= c*b + a*d.
        Rat a = p->coeffs[static_cast<size_t>(v)];
        Rat c = -q->coeffs[static_cast<size_t>(v)];
        Row combined;
        combined.coeffs.resize(static_cast<size_t>(v));
        for (int j = 0; j < v; ++j) {
          combined.coeffs[static_cast<size_t>(j)] =
              c * p->coeffs[static_cast<size_t>(j)] +
              a * q->coeffs[static_cast<size_t>(j)];
        }
        combined.rhs = c * p->rhs + a * q->rhs;
        next.push_back(std::move(combined));
      }
    }
    levels[static_cast<size_t>(v)] = dedup(std::move(next));
  }

  for (const Row& r : levels[0]) {
    if (r.rhs > 0) return {};  // 0 >= positive rhs
  }

  // Back-substitute: at level v the constraints involve x_0..x_v with
  // x_0..x_{v-1} already fixed; pick the tightest lower bound when one
  // exists, else the tightest upper bound, else 0.
  FeasibleResult result;
  result.feasible = true;
  result.witness.assign(static_cast<size_t>(dim), Rat(0));
  for (int v = 0; v < dim; ++v) {
    bool has_lower = false, has_upper = false;
    Rat lower, upper;
    for (const Row& r : levels[static_cast<size_t>(v) + 1]) {
      const Rat& a = r.coeffs[static_cast<size_t>(v)];
      int s = sgn(a);
      if (s == 0) continue;
      Rat rest = r.rhs;
      for (int j = 0; j < v; ++j) {
        rest -= r.coeffs[static_cast<size_t>(j)] * result.witness[static_cast<size_t>(j)];
      }
      Rat bound = rest / a;
      if (s > 0) {
        if (!has_lower || bound > lower) lower = bound;
        has_lower = true;
      } else {
        if (!has_upper || bound < upper) upper = bound;
        has_upper = true;
      }
    }
    if (has_lower) {
      result.witness[static_cast<size_t>(v)] = lower;
    } else if (has_upper) {
      result.witness[static_cast<size_t>(v)] = upper;
    }
  }
  return result;
}

}  // namespace relmix
