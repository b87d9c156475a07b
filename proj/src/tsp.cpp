#include "uttp/tsp.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace uttp {

std::string format_true_units(Half h) {
  std::string s = std::to_string(h / 2);
  if (h % 2 != 0) s += ".5";
  return s;
}

CostMatrix CostMatrix::zeros(int size) {
  if (size <= 0) throw std::invalid_argument("matrix size must be positive");
  CostMatrix m;
  m.size = size;
  m.entries.assign(static_cast<size_t>(size) * size, 0);
  return m;
}

void CostMatrix::set(int i, int j, Half value) {
  entries[static_cast<size_t>(i) * size + j] = value;
  entries[static_cast<size_t>(j) * size + i] = value;
}

void CostMatrix::require_well_formed() const {
  if (size <= 0) throw std::invalid_argument("matrix size must be positive");
  if (entries.size() != static_cast<size_t>(size) * size)
    throw std::invalid_argument("matrix entry count does not match its size");
  for (int i = 0; i < size; ++i) {
    if (at(i, i) != 0) throw std::invalid_argument("matrix diagonal must be zero");
    for (int j = 0; j < i; ++j) {
      if (at(i, j) < 0) throw std::invalid_argument("matrix entries must be nonnegative");
      if (at(i, j) != at(j, i)) throw std::invalid_argument("matrix must be symmetric");
    }
  }
}

TspInstance as_12_instance(CostMatrix matrix) {
  matrix.require_well_formed();
  if (matrix.size < 3) throw std::invalid_argument("a {1,2}-cost instance needs at least 3 vertices");
  for (int i = 0; i < matrix.size; ++i)
    for (int j = 0; j < i; ++j)
      if (matrix.at(i, j) != 2 && matrix.at(i, j) != 4)
        throw std::invalid_argument("off-diagonal true costs must be 1 or 2");
  // Holds automatically for {1,2} costs; checked all the same.
  if (!validate_metric(matrix)) throw std::logic_error("{1,2} matrix failed the metric check");
  return TspInstance{std::move(matrix)};
}

bool validate_metric(const CostMatrix& matrix) {
  matrix.require_well_formed();
  const int s = matrix.size;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      for (int k = 0; k < s; ++k)
        if (matrix.at(i, k) > matrix.at(i, j) + matrix.at(j, k)) return false;
  return true;
}

namespace {

void require_permutation(int size, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != size)
    throw std::invalid_argument("tour must visit every vertex exactly once");
  std::vector<char> seen(size, 0);
  for (int v : order) {
    if (v < 0 || v >= size) throw std::invalid_argument("tour vertex out of range");
    if (seen[v]) throw std::invalid_argument("tour repeats a vertex");
    seen[v] = 1;
  }
}

}  // namespace

Half tour_cost(const CostMatrix& matrix, const std::vector<int>& order) {
  require_permutation(matrix.size, order);
  Half cost = 0;
  for (size_t i = 0; i < order.size(); ++i)
    cost += matrix.at(order[i], order[(i + 1) % order.size()]);
  return cost;
}

Half walk_cost(const CostMatrix& matrix, const std::vector<int>& sequence) {
  if (sequence.empty()) throw std::invalid_argument("walk must not be empty");
  for (int v : sequence)
    if (v < 0 || v >= matrix.size) throw std::invalid_argument("walk vertex out of range");
  Half cost = 0;
  for (size_t i = 0; i + 1 < sequence.size(); ++i)
    cost += matrix.at(sequence[i], sequence[i + 1]);
  return cost;
}

Tour make_tour(const CostMatrix& matrix, std::vector<int> order) {
  Half cost = tour_cost(matrix, order);
  return Tour{std::move(order), cost};
}

ClosedWalk make_walk(const CostMatrix& matrix, std::vector<int> sequence) {
  Half cost = walk_cost(matrix, sequence);
  if (sequence.front() != sequence.back())
    throw std::invalid_argument("closed walk must end where it starts");
  return ClosedWalk{std::move(sequence), cost};
}

Tour shortcut_walk(const CostMatrix& matrix, const ClosedWalk& walk) {
  if (!validate_metric(matrix)) throw std::invalid_argument("shortcutting needs a metric matrix");
  if (walk.sequence.empty() || walk.sequence.front() != walk.sequence.back())
    throw std::invalid_argument("closed walk must end where it starts");
  // Dropping each revisited vertex splices (x,z),(z,y) into (x,y); removing
  // the leftmost revisit first is the same as keeping every vertex's first
  // occurrence, so one pass with a seen-set suffices.
  std::vector<char> seen(matrix.size, 0);
  std::vector<int> order;
  order.reserve(matrix.size);
  for (size_t i = 0; i + 1 < walk.sequence.size(); ++i) {
    int v = walk.sequence[i];
    if (v < 0 || v >= matrix.size) throw std::invalid_argument("walk vertex out of range");
    if (!seen[v]) {
      seen[v] = 1;
      order.push_back(v);
    }
  }
  if (walk.sequence.size() == 1) order.push_back(walk.sequence.front());
  if (static_cast<int>(order.size()) != matrix.size)
    throw std::invalid_argument("walk does not visit every vertex");
  return make_tour(matrix, std::move(order));
}

int oracle_size_limit() {
  if (const char* env = std::getenv("UTTP_ORACLE_SIZE_LIMIT")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  return 20;
}

Tour solve_tsp_exact(const CostMatrix& matrix) {
  matrix.require_well_formed();
  const int s = matrix.size;
  const int limit = oracle_size_limit();
  if (s > limit)
    throw std::invalid_argument("exact solver limited to " + std::to_string(limit) +
                                " vertices (got " + std::to_string(s) + ")");
  if (s == 1) return Tour{{0}, 0};
  if (s == 2) return make_tour(matrix, {0, 1});

  // Held-Karp over subsets of the non-start vertices; vertex 0 is the start.
  const int k = s - 1;
  const size_t masks = size_t{1} << k;
  const Half inf = std::numeric_limits<Half>::max() / 4;
  std::vector<Half> dp(masks * k, inf);
  std::vector<std::int8_t> parent(masks * k, -1);
  for (int j = 0; j < k; ++j) dp[(size_t{1} << j) * k + j] = matrix.at(0, j + 1);
  for (size_t mask = 1; mask < masks; ++mask) {
    for (int j = 0; j < k; ++j) {
      if (!(mask & (size_t{1} << j))) continue;
      const size_t idx = mask * k + j;
      if (mask == (size_t{1} << j)) continue;  // base case set above
      const size_t rest = mask ^ (size_t{1} << j);
      Half best = inf;
      int best_i = -1;
      for (int i = 0; i < k; ++i) {
        if (!(rest & (size_t{1} << i))) continue;
        Half cand = dp[rest * k + i] + matrix.at(i + 1, j + 1);
        if (cand < best) {
          best = cand;
          best_i = i;
        }
      }
      dp[idx] = best;
      parent[idx] = static_cast<std::int8_t>(best_i);
    }
  }
  const size_t full = masks - 1;
  Half best = inf;
  int last = -1;
  for (int j = 0; j < k; ++j) {
    Half cand = dp[full * k + j] + matrix.at(j + 1, 0);
    if (cand < best) {
      best = cand;
      last = j;
    }
  }
  std::vector<int> rev;
  size_t mask = full;
  while (last >= 0) {
    rev.push_back(last + 1);
    int p = parent[mask * k + last];
    mask ^= size_t{1} << last;
    last = p;
  }
  std::vector<int> order{0};
  order.insert(order.end(), rev.rbegin(), rev.rend());
  Tour tour = make_tour(matrix, std::move(order));
  if (tour.cost != best) throw std::logic_error("exact solver cost reconstruction mismatch");
  return tour;
}

TspInstance gen_12_instance(int n, double density, std::uint32_t seed) {
  if (n < 3) throw std::invalid_argument("instance needs at least 3 vertices");
  if (density < 0.0 || density > 1.0) throw std::invalid_argument("density must be in [0, 1]");
  CostMatrix m = CostMatrix::zeros(n);
  std::mt19937 rng(seed);
  // Threshold comparison keeps the draw deterministic across platforms.
  const std::uint64_t threshold =
      static_cast<std::uint64_t>(density * 4294967296.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      m.set(i, j, rng() < threshold ? 2 : 4);
  return TspInstance{std::move(m)};
}

}  // namespace uttp
