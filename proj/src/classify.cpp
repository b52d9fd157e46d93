#include "relmix/classify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace relmix {

namespace {

// Augmenting path for bipartite matching on the incidence matrix. Free
// columns are claimed before any displacement, so the all-ones matrix yields
// the identity.
bool augment(const IncidenceMatrix& m, int row, std::vector<int>& match_col,
             std::vector<bool>& visited) {
  for (int j = 0; j < m.n; ++j) {
    if (m.entries[static_cast<size_t>(row)][static_cast<size_t>(j)] &&
        match_col[static_cast<size_t>(j)] < 0) {
      match_col[static_cast<size_t>(j)] = row;
      return true;
    }
  }
  for (int j = 0; j < m.n; ++j) {
    if (!m.entries[static_cast<size_t>(row)][static_cast<size_t>(j)] ||
        visited[static_cast<size_t>(j)]) {
      continue;
    }
    visited[static_cast<size_t>(j)] = true;
    if (augment(m, match_col[static_cast<size_t>(j)], match_col, visited)) {
      match_col[static_cast<size_t>(j)] = row;
      return true;
    }
  }
  return false;
}

std::vector<IntVector> lattice_points_below(int n, const Int& max_sum) {
  // All p >= 0 with coordinate sum <= max_sum, lexicographic order.
  std::vector<IntVector> out;
  IntVector p = IntVector::zero(n);
  for (;;) {
    if (p.coord_sum() <= max_sum) out.push_back(p);
    int k = n - 1;
    while (k >= 0) {
      p[k] += 1;
      if (p.coord_sum() <= max_sum) break;
      p[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

using TupleKey = std::vector<std::vector<std::vector<Int>>>;

TupleKey tuple_key(const PolyTuple& t, const std::vector<int>& coord_perm,
                   const std::vector<int>& order_perm) {
  const int n = t.size();
  TupleKey key(static_cast<size_t>(n));
  for (int pos = 0; pos < n; ++pos) {
    const OrthantPolyhedron& b = t[order_perm[static_cast<size_t>(pos)]];
    std::vector<std::vector<Int>> gens;
    gens.reserve(b.generators().size());
    for (const IntVector& g : b.generators()) {
      std::vector<Int> permuted(static_cast<size_t>(n));
      for (int k = 0; k < n; ++k) {
        permuted[static_cast<size_t>(k)] = g[coord_perm[static_cast<size_t>(k)]];
      }
      gens.push_back(std::move(permuted));
    }
    std::sort(gens.begin(), gens.end());
    key[static_cast<size_t>(pos)] = std::move(gens);
  }
  return key;
}

}  // namespace

IncidenceMatrix incidence_matrix(const PolyTuple& t) {
  const int n = t.size();
  IncidenceMatrix m;
  m.n = n;
  m.entries.assign(static_cast<size_t>(n),
                   std::vector<bool>(static_cast<size_t>(n), false));
  for (int i = 0; i < n; ++i) {
    IntVector e = IntVector::unit(n, i);
    for (int j = 0; j < n; ++j) {
      m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          contains(t[j], e);
    }
  }
  return m;
}

MatchingCertificate volume_one_certificate(const PolyTuple& t) {
  IncidenceMatrix m = incidence_matrix(t);
  const int n = m.n;
  std::vector<int> match_col(static_cast<size_t>(n), -1);
  int matched = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<bool> visited(static_cast<size_t>(n), false);
    if (augment(m, i, match_col, visited)) ++matched;
  }

  MatchingCertificate cert;
  if (matched == n) {
    std::vector<int> sigma(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) sigma[static_cast<size_t>(j)] = match_col[static_cast<size_t>(j)];
    cert.permutation = std::move(sigma);
    return cert;
  }

  // Koenig cover from the unmatched rows: alternating reachability, rows via
  // any edge, columns back via the matched edge. The uncovered rows times the
  // uncovered columns form a maximal all-zero block with r+s >= n+1.
  std::vector<int> match_row(static_cast<size_t>(n), -1);
  for (int j = 0; j < n; ++j) {
    if (match_col[static_cast<size_t>(j)] >= 0) {
      match_row[static_cast<size_t>(match_col[static_cast<size_t>(j)])] = j;
    }
  }
  std::vector<bool> row_reached(static_cast<size_t>(n), false);
  std::vector<bool> col_reached(static_cast<size_t>(n), false);
  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    if (match_row[static_cast<size_t>(i)] < 0) {
      row_reached[static_cast<size_t>(i)] = true;
      stack.push_back(i);
    }
  }
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (!m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] ||
          col_reached[static_cast<size_t>(j)]) {
        continue;
      }
      col_reached[static_cast<size_t>(j)] = true;
      int next = match_col[static_cast<size_t>(j)];
      if (next >= 0 && !row_reached[static_cast<size_t>(next)]) {
        row_reached[static_cast<size_t>(next)] = true;
        stack.push_back(next);
      }
    }
  }
  ZeroBlock block;
  for (int i = 0; i < n; ++i) {
    if (row_reached[static_cast<size_t>(i)]) block.rows.push_back(i);
  }
  for (int j = 0; j < n; ++j) {
    if (!col_reached[static_cast<size_t>(j)]) block.cols.push_back(j);
  }
  cert.obstruction = std::move(block);
  return cert;
}

bool volume_one_equivalence(const PolyTuple& t) {
  Int volume = rmv(t, RmvMode::Both);
  MatchingCertificate cert = volume_one_certificate(t);
  bool is_one = (volume == 1);
  bool has_matching = cert.permutation.has_value();
  if (is_one != has_matching) {
    throw ConsistencyViolation(
        "volume-one equivalence failed on " + t.str() + ": mv " +
        volume.get_str() + ", matching " + (has_matching ? "exists" : "none"));
  }
  return is_one;
}

MinimalityResult is_minimal(const PolyTuple& t, const Int& volume) {
  if (volume < 1) throw VolumeMismatch("minimality is defined for volume >= 1");
  Int actual = rmv(t, RmvMode::Both);
  if (actual != volume) {
    throw VolumeMismatch("tuple has volume " + actual.get_str() + ", not " +
                         volume.get_str());
  }
  const int n = t.dim();
  // Axis points first: adjoining V*e_j never changes the volume, so any
  // member missing one refutes minimality outright.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      IntVector p = IntVector::unit(n, j) * volume;
      if (!contains(t[i], p)) {
        return MinimalityResult{false, std::make_pair(i, p)};
      }
    }
  }
  // Every V*e_j is inside every member, so each member contains the simplex
  // polyhedron with legs V and the remaining candidate points all have
  // coordinate sum < V.
  std::vector<IntVector> candidates = lattice_points_below(n, volume - 1);
  for (int i = 0; i < n; ++i) {
    for (const IntVector& delta : candidates) {
      if (contains(t[i], delta)) continue;
      PolyTuple extended = t.with_member(i, extend(t[i], delta));
      if (rmv(extended, RmvMode::Both) >= volume) {
        return MinimalityResult{false, std::make_pair(i, delta)};
      }
    }
  }
  return MinimalityResult{true, std::nullopt};
}

TupleClass canonical_form(const PolyTuple& t) {
  const int n = t.size();
  std::vector<int> coord_perm(static_cast<size_t>(n));
  std::iota(coord_perm.begin(), coord_perm.end(), 0);
  bool first = true;
  TupleKey best;
  std::vector<int> best_coord, best_order;
  do {
    std::vector<int> order_perm(static_cast<size_t>(n));
    std::iota(order_perm.begin(), order_perm.end(), 0);
    do {
      TupleKey key = tuple_key(t, coord_perm, order_perm);
      if (first || key < best) {
        best = std::move(key);
        best_coord = coord_perm;
        best_order = order_perm;
        first = false;
      }
    } while (std::next_permutation(order_perm.begin(), order_perm.end()));
  } while (std::next_permutation(coord_perm.begin(), coord_perm.end()));

  std::vector<OrthantPolyhedron> members;
  members.reserve(static_cast<size_t>(n));
  for (const std::vector<std::vector<Int>>& gens : best) {
    std::vector<IntVector> vs;
    vs.reserve(gens.size());
    for (const std::vector<Int>& g : gens) vs.emplace_back(g);
    members.emplace_back(n, std::move(vs));
  }
  return TupleClass{PolyTuple(std::move(members)), best_coord, best_order};
}

std::vector<TupleClass> enumerate_minimal(int n, int volume,
                                          const EnumerationOptions& options) {
  if (n < 1 || volume < 1) {
    throw Error(ErrorKind::Input, "enumeration needs n >= 1 and volume >= 1");
  }
  std::vector<IntVector> pool = lattice_points_below(n, Int(volume) - 1);
  pool.erase(std::remove_if(pool.begin(), pool.end(),
                            [](const IntVector& p) { return p.is_zero(); }),
             pool.end());
  const size_t pool_size = pool.size();
  if (pool_size >= 63) throw SearchTooLarge("2^" + std::to_string(pool_size) +
                                            " generator subsets per member");
  const std::uint64_t per_member = std::uint64_t(1) << pool_size;
  std::uint64_t raw = 1;
  bool overflow = false;
  for (int i = 0; i < n && !overflow; ++i) {
    if (raw > options.cap / per_member) {
      overflow = true;
    } else {
      raw *= per_member;
    }
  }
  if (overflow || raw > options.cap) {
    throw SearchTooLarge(std::to_string(per_member) + "^" + std::to_string(n) +
                         " raw candidates exceed cap " +
                         std::to_string(options.cap));
  }

  // Candidate members: {V e_1, ..., V e_n} plus any subset of the pool.
  std::vector<OrthantPolyhedron> members;
  members.reserve(per_member);
  for (std::uint64_t mask = 0; mask < per_member; ++mask) {
    std::vector<IntVector> gens;
    for (int j = 0; j < n; ++j) gens.push_back(IntVector::unit(n, j) * Int(volume));
    for (size_t k = 0; k < pool_size; ++k) {
      if ((mask >> k) & 1) gens.push_back(pool[k]);
    }
    members.emplace_back(n, std::move(gens));
  }

  // Iterate member multisets (tuple order is factored out by the canonical
  // form) and deduplicate candidates up to coordinate and order permutation
  // before any volume computation.
  std::set<PolyTuple> unique;
  std::vector<std::uint64_t> odo(static_cast<size_t>(n), 0);
  for (;;) {
    std::vector<OrthantPolyhedron> tuple_members;
    tuple_members.reserve(static_cast<size_t>(n));
    for (std::uint64_t m : odo) tuple_members.push_back(members[m]);
    unique.insert(canonical_form(PolyTuple(std::move(tuple_members))).representative);

    int k = n - 1;
    while (k >= 0 && odo[static_cast<size_t>(k)] + 1 == per_member) --k;
    if (k < 0) break;
    ++odo[static_cast<size_t>(k)];
    for (int j = k + 1; j < n; ++j) odo[static_cast<size_t>(j)] = odo[static_cast<size_t>(k)];
  }

  std::vector<PolyTuple> candidates(unique.begin(), unique.end());
  std::vector<char> keep(candidates.size(), 0);
  std::mutex cache_mutex;
  std::map<PolyTuple, Int> rmv_cache;

  auto evaluate = [&](size_t index) {
    const PolyTuple& cand = candidates[index];
    Int v;
    bool cached = false;
    {
      std::lock_guard<std::mutex> lock(cache_mutex);
      auto it = rmv_cache.find(cand);
      if (it != rmv_cache.end()) {
        v = it->second;
        cached = true;
      }
    }
    if (!cached) {
      v = rmv(cand, RmvMode::Both);
      std::lock_guard<std::mutex> lock(cache_mutex);
      rmv_cache.emplace(cand, v);
    }
    if (v != volume) return;
    if (is_minimal(cand, Int(volume)).minimal) keep[index] = 1;
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || candidates.size() < 2) {
    for (size_t i = 0; i < candidates.size(); ++i) evaluate(i);
  } else {
    std::vector<std::thread> workers;
    std::atomic<size_t> next{0};
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&]() {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= candidates.size()) return;
          evaluate(i);
        }
      });
    }
    for (std::thread& w : workers) w.join();
  }

  std::vector<TupleClass> result;
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (keep[i]) result.push_back(canonical_form(candidates[i]));
  }
  return result;
}

bool axis_extension_check(const PolyTuple& t, int axis) {
  if (axis < 0 || axis >= t.dim()) {
    throw DimensionMismatch("axis out of range");
  }
  Int volume = rmv(t, RmvMode::Both);
  IntVector point = IntVector::unit(t.dim(), axis) * volume;
  PolyTuple extended = t.with_member(0, extend(t[0], point));
  Int after = rmv(extended, RmvMode::Both);
  if (after != volume) {
    throw ConsistencyViolation("axis extension changed the volume on " +
                               t.str() + ": " + volume.get_str() + " -> " +
                               after.get_str() + " at axis " +
                               std::to_string(axis + 1));
  }
  return true;
}

}  // namespace relmix
