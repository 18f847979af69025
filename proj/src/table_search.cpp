// Copyright 2026 The posemi Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "posemi/table_search.hpp"

#include <array>
#include <atomic>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace posemi {

TableProblem TableProblem::unconstrained(std::size_t n, bool with_addition) {
  if (n == 0 || n > 64) {
    throw std::invalid_argument("table search supports 1..64 elements");
  }
  TableProblem p;
  p.size = n;
  p.with_addition = with_addition;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n) - 1;
  p.mul_domain.assign(n * n, all);
  if (with_addition) p.add_domain.assign(n * n, all);
  return p;
}

void TableProblem::restrict(TableOp op, ElementId i, ElementId j,
                            std::uint64_t mask) {
  auto& d = op == TableOp::kMul ? mul_domain : add_domain;
  d[i * size + j] &= mask;
  d[j * size + i] &= mask;
}

void TableProblem::fix(TableOp op, ElementId i, ElementId j, ElementId value) {
  restrict(op, i, j, std::uint64_t{1} << value);
}

std::uint64_t TableProblem::domain(TableOp op, ElementId i, ElementId j) const {
  const auto& d = op == TableOp::kMul ? mul_domain : add_domain;
  return d[i * size + j];
}

bool is_commutative(std::span<const ElementId> t, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (t[a * n + b] != t[b * n + a]) return false;
    }
  }
  return true;
}

bool is_associative(std::span<const ElementId> t, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = t[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (t[ab * n + c] != t[a * n + t[b * n + c]]) return false;
      }
    }
  }
  return true;
}

bool is_distributive(std::span<const ElementId> mul,
                     std::span<const ElementId> add, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t lhs = mul[a * n + add[b * n + c]];
        const std::size_t rhs = add[mul[a * n + b] * n + mul[a * n + c]];
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

namespace {

constexpr int kUnknown = -1;

struct Cell {
  std::uint8_t op;
  std::uint8_t i;
  std::uint8_t j;
};

struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> failures{0};
  std::atomic<bool> stop{false};
  std::optional<std::uint64_t> limit;
  std::mutex mutex;
  bool limit_hit = false;
  bool found = false;
  std::vector<ElementId> mul;
  std::vector<ElementId> add;
};

class Engine {
 public:
  Engine(const TableProblem& problem, bool symmetry_breaking, Shared* shared)
      : n_(static_cast<int>(problem.size)),
        with_add_(problem.with_addition),
        shared_(shared) {
    const std::size_t cells = problem.size * problem.size;
    dom_[0] = problem.mul_domain;
    val_[0].assign(cells, kUnknown);
    byval_[0].assign(problem.size, {});
    known_[0].assign(problem.size, 0);
    if (with_add_) {
      dom_[1] = problem.add_domain;
      val_[1].assign(cells, kUnknown);
      byval_[1].assign(problem.size, {});
      known_[1].assign(problem.size, 0);
    }
    touched_.assign(problem.size, 0);
    class_of_.assign(problem.size, -1);
    if (symmetry_breaking) {
      for (std::size_t c = 0; c < problem.symmetry_classes.size(); ++c) {
        if (problem.symmetry_classes[c].size() < 2) continue;
        for (ElementId e : problem.symmetry_classes[c]) {
          class_of_[e] = static_cast<int>(c);
        }
        num_classes_ = static_cast<int>(c) + 1;
      }
    }
    for (int op = 0; op < (with_add_ ? 2 : 1); ++op) {
      for (int i = 0; i < n_; ++i) {
        for (int j = i; j < n_; ++j) {
          cells_.push_back({static_cast<std::uint8_t>(op),
                            static_cast<std::uint8_t>(i),
                            static_cast<std::uint8_t>(j)});
        }
      }
    }
  }

  // Root propagation: singleton domains, then the laws. False on conflict.
  bool initialize(std::vector<ForcedAssignment>* log) {
    log_ = log;
    at_root_ = true;
    for (const Cell& c : cells_) {
      const std::uint64_t d = dom(c.op, c.i, c.j);
      if (d == 0) return false;
      if (std::has_single_bit(d)) {
        if (!assign(c.op, c.i, c.j, std::countr_zero(d), "singleton domain")) {
          return false;
        }
      }
    }
    const bool ok = propagate();
    at_root_ = false;
    log_ = nullptr;
    return ok;
  }

  std::optional<Cell> pick() const {
    std::optional<Cell> best;
    std::tuple<int, int, int> best_key{};
    for (const Cell& c : cells_) {
      if (get(c.op, c.i, c.j) != kUnknown) continue;
      const int size = std::popcount(dom(c.op, c.i, c.j));
      const int score = known_[c.op][c.i] + known_[c.op][c.j];
      std::tuple<int, int, int> key{c.op, -score, size};
      if (!best || key < best_key) {
        best = c;
        best_key = key;
      }
    }
    return best;
  }

  // Candidate values for c; among interchangeable untouched elements only
  // the first is kept.
  std::vector<int> candidates(const Cell& c) const {
    std::vector<int> out;
    std::array<bool, 64> class_seen{};
    std::uint64_t d = dom(c.op, c.i, c.j);
    while (d) {
      const int v = std::countr_zero(d);
      d &= d - 1;
      const int cls = class_of_[v];
      if (cls >= 0 && touched_[v] == 0 && v != c.i && v != c.j) {
        if (class_seen[cls]) continue;
        class_seen[cls] = true;
      }
      out.push_back(v);
    }
    return out;
  }

  std::size_t mark() const { return trail_.size(); }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Cell c = trail_.back();
      trail_.pop_back();
      const int v = get(c.op, c.i, c.j);
      val_[c.op][c.i * n_ + c.j] = kUnknown;
      val_[c.op][c.j * n_ + c.i] = kUnknown;
      byval_[c.op][v].pop_back();
      --known_[c.op][c.i];
      if (c.i != c.j) --known_[c.op][c.j];
      if (!at_root_ && root_done_) {
        --touched_[c.i];
        --touched_[c.j];
        --touched_[v];
      }
    }
    queue_.clear();
    qhead_ = 0;
  }

  bool try_value(const Cell& c, int v) {
    return assign(c.op, c.i, c.j, v, nullptr) && propagate();
  }

  void finish_root() { root_done_ = true; }

  // Depth-first search below the current state. Returns true when the whole
  // search should stop (witness recorded, limit hit or stop requested).
  bool dfs() {
    if (shared_->stop.load(std::memory_order_relaxed)) return true;
    const auto cell = pick();
    if (!cell) return record_leaf();
    for (int v : candidates(*cell)) {
      const std::uint64_t count =
          shared_->nodes.fetch_add(1, std::memory_order_relaxed) + 1;
      if (shared_->limit && count > *shared_->limit) {
        std::lock_guard lock(shared_->mutex);
        shared_->limit_hit = true;
        shared_->stop = true;
        return true;
      }
      const std::size_t m = mark();
      if (try_value(*cell, v)) {
        if (dfs()) return true;
      } else {
        shared_->failures.fetch_add(1, std::memory_order_relaxed);
      }
      undo(m);
    }
    return false;
  }

  std::vector<ElementId> table(int op) const {
    std::vector<ElementId> out(val_[op].size());
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = static_cast<ElementId>(val_[op][k]);
    }
    return out;
  }

 private:
  int get(int op, int i, int j) const { return val_[op][i * n_ + j]; }
  std::uint64_t dom(int op, int i, int j) const { return dom_[op][i * n_ + j]; }

  bool assign(int op, int i, int j, int v, const char* reason) {
    const int cur = get(op, i, j);
    if (cur != kUnknown) return cur == v;
    if (!((dom(op, i, j) >> v) & 1u)) return false;
    if (i > j) std::swap(i, j);
    val_[op][i * n_ + j] = v;
    val_[op][j * n_ + i] = v;
    const Cell c{static_cast<std::uint8_t>(op), static_cast<std::uint8_t>(i),
                 static_cast<std::uint8_t>(j)};
    trail_.push_back(c);
    queue_.push_back(c);
    byval_[op][v].push_back({static_cast<std::uint8_t>(i),
                             static_cast<std::uint8_t>(j)});
    ++known_[op][i];
    if (i != j) ++known_[op][j];
    if (!at_root_ && root_done_) {
      ++touched_[i];
      ++touched_[j];
      ++touched_[v];
    }
    if (log_) {
      log_->push_back({static_cast<TableOp>(op), static_cast<ElementId>(i),
                       static_cast<ElementId>(j), static_cast<ElementId>(v),
                       reason ? reason : pending_reason_});
    }
    return true;
  }

  // Forces cell (op, i, j) to v while explaining it with law instance x,y,z.
  bool force(int op, int i, int j, int v, const char* law, int x, int y, int z) {
    if (log_ && get(op, i, j) == kUnknown) {
      pending_reason_ = std::string(law) + " on (" + std::to_string(x) + "," +
                        std::to_string(y) + "," + std::to_string(z) + ")";
    }
    return assign(op, i, j, v, nullptr);
  }

  // (xy)z = x(yz) for op (0 = mul, 1 = add).
  bool check_assoc(int op, int x, int y, int z) {
    const int xy = get(op, x, y);
    const int yz = get(op, y, z);
    if (xy == kUnknown || yz == kUnknown) return true;
    const int lhs = get(op, xy, z);
    const int rhs = get(op, x, yz);
    if (lhs != kUnknown && rhs != kUnknown) return lhs == rhs;
    const char* law = op == 0 ? "mul-assoc" : "add-assoc";
    if (lhs != kUnknown) return force(op, x, yz, lhs, law, x, y, z);
    if (rhs != kUnknown) return force(op, xy, z, rhs, law, x, y, z);
    return true;
  }

  // x(y+z) = xy + xz.
  bool check_distrib(int x, int y, int z) {
    const int s = get(1, y, z);
    const int p = get(0, x, y);
    const int q = get(0, x, z);
    const int lhs = s != kUnknown ? get(0, x, s) : kUnknown;
    const int rhs = (p != kUnknown && q != kUnknown) ? get(1, p, q) : kUnknown;
    if (lhs != kUnknown && rhs != kUnknown) return lhs == rhs;
    if (lhs != kUnknown && p != kUnknown && q != kUnknown) {
      return force(1, p, q, lhs, "distrib", x, y, z);
    }
    if (rhs != kUnknown && s != kUnknown) {
      return force(0, x, s, rhs, "distrib", x, y, z);
    }
    return true;
  }

  bool on_assigned(const Cell& c) {
    const int op = c.op;
    for (int side = 0; side < (c.i == c.j ? 1 : 2); ++side) {
      const int a = side == 0 ? c.i : c.j;
      const int b = side == 0 ? c.j : c.i;
      if (!assoc_triggers(op, a, b)) return false;
      if (with_add_ && !distrib_triggers(op, a, b)) return false;
    }
    return true;
  }

  template <typename F>
  bool for_cells_with_value(int op, int v, F&& f) {
    // Index-based: f may append to the same list through forced assignments.
    auto& list = byval_[op][v];
    for (std::size_t k = 0; k < list.size(); ++k) {
      const auto [i, j] = list[k];
      if (!f(i, j)) return false;
      if (i != j && !f(j, i)) return false;
    }
    return true;
  }

  bool assoc_triggers(int op, int a, int b) {
    for (int t = 0; t < n_; ++t) {
      if (!check_assoc(op, a, b, t)) return false;  // (ab)t
      if (!check_assoc(op, t, a, b)) return false;  // t(ab)
    }
    // Outer reads: [xy]b with xy = a, and a[yz] with yz = b.
    if (!for_cells_with_value(op, a, [&](int x, int y) {
          return check_assoc(op, x, y, b);
        })) {
      return false;
    }
    return for_cells_with_value(op, b, [&](int y, int z) {
      return check_assoc(op, a, y, z);
    });
  }

  bool distrib_triggers(int op, int a, int b) {
    if (op == 0) {
      // a*b as xy or xz, and a*[y+z] with y+z = b.
      for (int t = 0; t < n_; ++t) {
        if (!check_distrib(a, b, t)) return false;
        if (!check_distrib(a, t, b)) return false;
      }
      return for_cells_with_value(1, b, [&](int y, int z) {
        return check_distrib(a, y, z);
      });
    }
    // a+b as y+z, and as xy + xz with xy = a, xz = b.
    for (int t = 0; t < n_; ++t) {
      if (!check_distrib(t, a, b)) return false;
    }
    return for_cells_with_value(0, a, [&](int x, int y) {
      for (int z = 0; z < n_; ++z) {
        if (get(0, x, z) == b && !check_distrib(x, y, z)) return false;
      }
      return true;
    });
  }

  bool propagate() {
    while (qhead_ < queue_.size()) {
      const Cell c = queue_[qhead_++];
      if (!on_assigned(c)) {
        queue_.clear();
        qhead_ = 0;
        return false;
      }
    }
    queue_.clear();
    qhead_ = 0;
    return true;
  }

  bool record_leaf() {
    const auto mul = table(0);
    if (!is_associative(mul, n_)) return false;
    std::vector<ElementId> add;
    if (with_add_) {
      add = table(1);
      if (!is_associative(add, n_) || !is_distributive(mul, add, n_)) {
        return false;
      }
    }
    std::lock_guard lock(shared_->mutex);
    if (!shared_->found) {
      shared_->found = true;
      shared_->mul = mul;
      shared_->add = std::move(add);
    }
    shared_->stop = true;
    return true;
  }

  int n_;
  bool with_add_;
  Shared* shared_;
  std::array<std::vector<std::uint64_t>, 2> dom_;
  std::array<std::vector<int>, 2> val_;
  std::array<std::vector<std::vector<std::pair<std::uint8_t, std::uint8_t>>>, 2>
      byval_;
  std::array<std::vector<int>, 2> known_;
  std::vector<int> touched_;
  std::vector<int> class_of_;
  int num_classes_ = 0;
  std::vector<Cell> cells_;
  std::vector<Cell> trail_;
  std::vector<Cell> queue_;
  std::size_t qhead_ = 0;
  bool at_root_ = false;
  bool root_done_ = false;
  std::vector<ForcedAssignment>* log_ = nullptr;
  std::string pending_reason_;
};

std::uint64_t factorial(std::size_t k) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

TableSearchResult run_table_search(const TableProblem& problem,
                                   const SearchOptions& options) {
  if (problem.size == 0 || problem.size > 64) {
    throw std::invalid_argument("table search supports 1..64 elements");
  }
  Shared shared;
  shared.limit = options.node_limit;
  TableSearchResult result;
  if (options.symmetry_breaking) {
    for (const auto& cls : problem.symmetry_classes) {
      result.symmetry_factor *= factorial(cls.size());
    }
  }

  Engine root(problem, options.symmetry_breaking, &shared);
  const bool consistent = root.initialize(&result.root_log);
  root.finish_root();
  if (consistent) {
    const unsigned threads =
        options.deterministic ? 1u : std::max(1u, options.threads);
    const auto first = root.pick();
    if (threads == 1 || !first) {
      root.dfs();
    } else {
      // Workers split the values of the first branching cell.
      const auto values = root.candidates(*first);
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, worker = root]() mutable {
          while (!shared.stop.load()) {
            const std::size_t k = next.fetch_add(1);
            if (k >= values.size()) break;
            const std::uint64_t count = shared.nodes.fetch_add(1) + 1;
            if (shared.limit && count > *shared.limit) {
              std::lock_guard lock(shared.mutex);
              shared.limit_hit = true;
              shared.stop = true;
              break;
            }
            const std::size_t m = worker.mark();
            if (worker.try_value(*first, values[k])) {
              if (worker.dfs()) break;
            } else {
              shared.failures.fetch_add(1);
            }
            worker.undo(m);
          }
        });
      }
      for (auto& th : pool) th.join();
    }
  }

  result.nodes = shared.nodes.load();
  result.propagation_failures = shared.failures.load();
  if (!consistent) ++result.propagation_failures;
  if (shared.found) {
    result.status = SearchStatus::kWitness;
    result.mul = std::move(shared.mul);
    result.add = std::move(shared.add);
  } else if (shared.limit_hit) {
    result.status = SearchStatus::kLimitReached;
  } else {
    result.status = SearchStatus::kExhausted;
  }
  return result;
}

}  // namespace posemi
