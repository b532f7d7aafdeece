#include "diffset/adsearch.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "diffset/diffcore.hpp"
#include "diffset/groups.hpp"
#include "parallel.hpp"

namespace diffset {

ForcedParams forced_params(std::uint64_t v, std::uint64_t k) {
  if (v < 3 || k < 1 || k > v) throw std::invalid_argument("forced_params: need v >= 3 and 1 <= k <= v");
  ForcedParams f;
  const std::uint64_t pairs = k * (k - 1);
  f.lambda = pairs / (v - 1);
  f.t = (f.lambda + 1) * (v - 1) - pairs;
  f.t_hat = std::min(f.t, v - 1 - f.t);
  return f;
}

namespace {

/// A subtree root: the first gaps, the current prenecklace period, and their sum.
struct GapTask {
  std::vector<std::uint32_t> gaps;  // a[1..depth]
  std::uint32_t p = 1;
  std::uint32_t sum = 0;
};

/// FKM prenecklace recursion over the gap sequence a[1..k] (sum v). Hooks see
/// one push per fixed gap at levels 1..k-1 (the new mark is the running sum)
/// and one leaf per necklace.
template <typename Hooks>
class GapWalker {
 public:
  using Task = GapTask;

  GapWalker(std::uint32_t v, std::uint32_t k, Hooks& hooks) : v_(v), k_(k), a_(k + 1, 1), hooks_(hooks) {}

  /// Full walk from the root; returns false if a hook stopped it.
  bool walk() { return descend(1, 1, 0); }

  /// Every node at level depth+1 in walk order (depth < k), without calling hooks.
  std::vector<Task> collect(std::uint32_t depth) {
    cut_ = depth;
    tasks_.clear();
    descend(1, 1, 0);
    cut_ = 0;
    return std::move(tasks_);
  }

  /// Replays a task prefix through the hooks and walks below it.
  bool walk_task(const Task& task) {
    std::uint32_t sum = 0;
    std::size_t pushed = 0;
    bool keep = true;
    for (std::size_t i = 0; i < task.gaps.size(); ++i) {
      a_[i + 1] = task.gaps[i];
      sum += task.gaps[i];
      hooks_.push(sum);
      ++pushed;
      if (!hooks_.keep()) {
        keep = false;
        break;
      }
    }
    bool cont = true;
    if (keep) cont = descend(static_cast<std::uint32_t>(task.gaps.size()) + 1, task.p, task.sum);
    for (; pushed > 0; --pushed) hooks_.pop();
    return cont;
  }

 private:
  bool descend(std::uint32_t t, std::uint32_t p, std::uint32_t sum) {
    if (cut_ != 0 && t == cut_ + 1) {
      tasks_.push_back({std::vector<std::uint32_t>(a_.begin() + 1, a_.begin() + t), p, sum});
      return true;
    }
    if (t == k_) {
      const std::uint32_t last = v_ - sum;
      const std::uint32_t ref = a_[t - p];
      if (last < ref) return true;
      const std::uint32_t q = last == ref ? p : t;
      if (k_ % q != 0) return true;
      a_[t] = last;
      return cut_ != 0 || hooks_.leaf();
    }
    std::uint32_t lo = 1;
    std::uint32_t hi = v_ / k_;
    if (t > 1) {
      lo = a_[t - p];
      const std::uint64_t reserve = static_cast<std::uint64_t>(k_ - t) * a_[1];
      if (sum + reserve >= v_) return true;
      hi = v_ - sum - static_cast<std::uint32_t>(reserve);
    }
    for (std::uint32_t val = lo; val <= hi; ++val) {
      a_[t] = val;
      const std::uint32_t q = (t == 1 || val == a_[t - p]) ? p : t;
      if (cut_ != 0) {
        descend(t + 1, q, sum + val);
        continue;
      }
      if (!hooks_.tick()) return false;
      hooks_.push(sum + val);
      const bool cont = !hooks_.keep() || descend(t + 1, q, sum + val);
      hooks_.pop();
      if (!cont) return false;
    }
    return true;
  }

  std::uint32_t v_;
  std::uint32_t k_;
  std::vector<std::uint32_t> a_;  // a_[0] = 1 acts as the period reference for level 1
  Hooks& hooks_;
  std::uint32_t cut_ = 0;
  std::vector<Task> tasks_;
};

struct CursorHooks {
  NecklaceCursor& cursor;
  const std::function<bool(const NecklaceCursor&)>& visit;
  std::uint64_t visited = 0;

  bool tick() { return true; }
  void push(std::uint32_t x) { cursor.push_mark(x); }
  void pop() { cursor.pop_mark(); }
  bool keep() { return true; }
  bool leaf() {
    ++visited;
    return !visit || visit(cursor);
  }
};

}  // namespace

NecklaceCursor::NecklaceCursor(std::uint32_t v, std::uint32_t k) : v_(v), k_(k), counts_(v, 0) {
  if (v < 1 || k > v) throw std::invalid_argument("NecklaceCursor: need v >= 1 and 0 <= k <= v");
  marks_.reserve(k);
}

std::vector<std::uint8_t> NecklaceCursor::word() const {
  std::vector<std::uint8_t> w(v_, 0);
  for (const auto m : marks_) w[m] = 1;
  return w;
}

void NecklaceCursor::push_mark(std::uint32_t x) {
  for (const auto m : marks_) {
    ++counts_[(x + v_ - m) % v_];
    ++counts_[(m + v_ - x) % v_];
  }
  marks_.push_back(x);
}

void NecklaceCursor::pop_mark() {
  const std::uint32_t x = marks_.back();
  marks_.pop_back();
  for (const auto m : marks_) {
    --counts_[(x + v_ - m) % v_];
    --counts_[(m + v_ - x) % v_];
  }
}

std::uint64_t NecklaceCursor::for_each(const std::function<bool(const NecklaceCursor&)>& visit) {
  while (!marks_.empty()) pop_mark();
  if (k_ == 0) {
    if (visit) visit(*this);
    return 1;
  }
  push_mark(0);
  CursorHooks hooks{*this, visit};
  GapWalker<CursorHooks> walker(v_, k_, hooks);
  walker.walk();
  pop_mark();
  return hooks.visited;
}

std::uint64_t enumerate_fixed_density(std::uint32_t v, std::uint32_t k,
                                      const std::function<bool(const NecklaceCursor&)>& visit) {
  NecklaceCursor cursor(v, k);
  return cursor.for_each(visit);
}

std::vector<std::uint32_t> least_rotation(std::span<const std::uint32_t> set, std::uint32_t v) {
  const std::vector<std::uint32_t> d = normalized_set(set, v);
  std::vector<std::uint32_t> best = d;
  std::vector<std::uint32_t> img(d.size());
  for (const auto shift : d) {
    for (std::size_t i = 0; i < d.size(); ++i) img[i] = (d[i] + v - shift) % v;
    std::sort(img.begin(), img.end());
    if (img < best) best = img;
  }
  return best;
}

namespace {

/// Incremental profile with the counters the two-value test needs.
class AdsState {
 public:
  AdsState(std::uint32_t v, std::uint32_t k, const ForcedParams& f)
      : v_(v),
        lambda_(static_cast<std::uint32_t>(f.lambda)),
        max_high_(v - 1 - f.t),
        total_pairs_(static_cast<std::uint64_t>(k) * (k - 1)),
        counts_(v, 0),
        deficit_(static_cast<std::uint64_t>(v - 1) * f.lambda) {
    marks_.reserve(k);
  }

  void push(std::uint32_t x) {
    for (const auto m : marks_) {
      inc((x + v_ - m) % v_);
      inc((m + v_ - x) % v_);
    }
    marks_.push_back(x);
  }

  void pop() {
    const std::uint32_t x = marks_.back();
    marks_.pop_back();
    for (const auto m : marks_) {
      dec((x + v_ - m) % v_);
      dec((m + v_ - x) % v_);
    }
  }

  /// Necessary for some completion to have every count in {lambda, lambda+1}.
  bool feasible() const {
    const std::uint64_t m = marks_.size();
    const std::uint64_t remaining = total_pairs_ - m * (m - 1);
    return over_ == 0 && high_ <= max_high_ && deficit_ <= remaining;
  }

  bool complete() const { return over_ == 0 && deficit_ == 0; }

  const std::vector<std::uint32_t>& marks() const { return marks_; }

 private:
  void inc(std::uint32_t d) {
    const std::uint32_t c = counts_[d]++;
    if (c < lambda_) --deficit_;
    if (c == lambda_) ++high_;
    if (c == lambda_ + 1) {
      --high_;
      ++over_;
    }
  }

  void dec(std::uint32_t d) {
    const std::uint32_t c = --counts_[d];
    if (c < lambda_) ++deficit_;
    if (c == lambda_) --high_;
    if (c == lambda_ + 1) {
      ++high_;
      --over_;
    }
  }

  std::uint32_t v_;
  std::uint32_t lambda_;
  std::uint64_t max_high_;
  std::uint64_t total_pairs_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint32_t> marks_;
  std::uint64_t over_ = 0;   // residues with count > lambda+1
  std::uint64_t high_ = 0;   // residues with count == lambda+1
  std::uint64_t deficit_;    // sum of (lambda - count) over residues below lambda
};

struct TaskResult {
  bool found = false;
  bool timed_out = false;
  std::vector<std::uint32_t> witness;
  std::vector<std::vector<std::uint32_t>> all;
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
};

struct SearchHooks {
  std::uint32_t v;
  const AdsSearchOptions& opts;
  AdsState state;
  detail::BudgetGuard guard;
  const std::atomic<std::size_t>& best_task;
  std::size_t task_index;
  TaskResult result;
  bool budget_hit = false;

  bool tick() {
    if (!guard.tick()) {
      budget_hit = true;
      return false;
    }
    return !(opts.mode == SearchMode::Exists && best_task.load(std::memory_order_relaxed) < task_index);
  }
  void push(std::uint32_t x) { state.push(x); }
  void pop() { state.pop(); }
  bool keep() const { return !opts.prune || state.feasible(); }
  bool leaf() {
    if (!state.complete()) return true;
    ++result.count;
    if (!result.found) {
      result.found = true;
      result.witness = least_rotation(state.marks(), v);
    }
    if (opts.mode == SearchMode::All) result.all.push_back(least_rotation(state.marks(), v));
    return opts.mode != SearchMode::Exists;
  }
};

struct NullHooks {
  bool tick() { return true; }
  void push(std::uint32_t) {}
  void pop() {}
  bool keep() { return true; }
  bool leaf() { return true; }
};

}  // namespace

SearchReport search_ads(std::uint32_t v, std::uint32_t k, const AdsSearchOptions& options) {
  if (v < 4 || k < 2 || k > v - 2) throw std::invalid_argument("search_ads: need 2 <= k <= v - 2");
  const auto start = std::chrono::steady_clock::now();
  const ForcedParams forced = forced_params(v, k);

  NullHooks null_hooks;
  const auto tasks = GapWalker<NullHooks>(v, k, null_hooks).collect(std::min<std::uint32_t>(2, k - 1));

  detail::SharedBudget budget(options.budget);
  std::atomic<std::size_t> best_task{std::numeric_limits<std::size_t>::max()};
  std::vector<TaskResult> results(tasks.size());
  detail::parallel_for(tasks.size(), options.jobs, [&](std::size_t i) {
    if (options.mode == SearchMode::Exists && best_task.load() < i) return;
    SearchHooks hooks{v, options, AdsState(v, k, forced), detail::BudgetGuard(budget), best_task, i, {}};
    hooks.state.push(0);
    GapWalker<SearchHooks>(v, k, hooks).walk_task(tasks[i]);
    hooks.guard.flush();
    hooks.result.nodes = hooks.guard.nodes();
    hooks.result.timed_out = hooks.budget_hit;
    results[i] = std::move(hooks.result);
    if (results[i].found && options.mode == SearchMode::Exists) {
      std::size_t cur = best_task.load();
      while (i < cur && !best_task.compare_exchange_weak(cur, i)) {
      }
    }
  });

  SearchReport report;
  bool timed_out = false;
  for (auto& r : results) {
    report.nodes += r.nodes;
    timed_out = timed_out || r.timed_out;
    if (r.found && report.witness.empty()) report.witness = r.witness;
    report.count += r.count;
    if (options.mode == SearchMode::All)
      for (auto& w : r.all) report.witnesses.push_back(std::move(w));
  }
  const bool found = !report.witness.empty();
  if (options.mode == SearchMode::Exists) report.count = found ? 1 : 0;
  if (found && (options.mode == SearchMode::Exists || !timed_out))
    report.status = forced.ds_only(v) ? SearchStatus::DsOnly : SearchStatus::Exists;
  else
    report.status = timed_out ? SearchStatus::Timeout : SearchStatus::None;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<GridCell> existence_grid(const GridOptions& options) {
  if (options.v_min < 4 || options.v_max < options.v_min) throw std::invalid_argument("existence_grid: bad v range");
  if (options.k_min < 2) throw std::invalid_argument("existence_grid: k_min must be >= 2");
  std::vector<GridCell> cells;
  for (std::uint32_t v = options.v_min; v <= options.v_max; ++v) {
    const std::uint32_t k_hi = options.k_max == 0 ? v - 2 : std::min(options.k_max, v - 2);
    const std::size_t row_start = cells.size();
    for (std::uint32_t k = options.k_min; k <= k_hi; ++k) {
      GridCell cell;
      cell.v = v;
      cell.k = k;
      cell.forced = forced_params(v, k);
      const std::uint32_t dual = v - k;
      if (!options.search_both_halves && k > v / 2 && dual >= options.k_min) {
        const GridCell& base = cells[row_start + (dual - options.k_min)];
        cell.status = base.status;
        cell.via_complement = true;
        if (!base.witness.empty()) {
          std::vector<std::uint32_t> comp;
          std::size_t j = 0;
          for (std::uint32_t x = 0; x < v; ++x) {
            if (j < base.witness.size() && base.witness[j] == x)
              ++j;
            else
              comp.push_back(x);
          }
          cell.witness = least_rotation(comp, v);
        }
      } else {
        const SearchReport r = search_ads(v, k, options.search);
        cell.status = r.status;
        cell.witness = r.witness;
        cell.nodes = r.nodes;
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

std::string grid_to_csv(std::span<const GridCell> cells) {
  std::ostringstream out;
  out << "v,k,lambda,t,t_hat,status,witness\n";
  for (const auto& c : cells) {
    out << c.v << ',' << c.k << ',' << c.forced.lambda << ',' << c.forced.t << ',' << c.forced.t_hat << ','
        << to_string(c.status) << ',';
    for (std::size_t i = 0; i < c.witness.size(); ++i) out << (i ? " " : "") << c.witness[i];
    out << '\n';
  }
  return out.str();
}

std::string grid_to_text(std::span<const GridCell> cells) {
  if (cells.empty()) return {};
  std::uint32_t v_lo = cells.front().v, v_hi = cells.front().v, k_lo = cells.front().k, k_hi = cells.front().k;
  for (const auto& c : cells) {
    v_lo = std::min(v_lo, c.v);
    v_hi = std::max(v_hi, c.v);
    k_lo = std::min(k_lo, c.k);
    k_hi = std::max(k_hi, c.k);
  }
  const std::size_t width = v_hi - v_lo + 1;
  std::vector<std::string> marks((k_hi - k_lo + 1) * width, ".");
  for (const auto& c : cells) {
    std::string s;
    switch (c.status) {
      case SearchStatus::Exists: s = "E"; break;
      case SearchStatus::DsOnly: s = "D"; break;
      case SearchStatus::Timeout: s = "?"; break;
      case SearchStatus::None: s = std::to_string(c.forced.t_hat); break;
    }
    marks[(c.k - k_lo) * width + (c.v - v_lo)] = s;
  }
  std::ostringstream out;
  out << "k\\v";
  for (std::uint32_t v = v_lo; v <= v_hi; ++v) out << ' ' << std::string(v < 10 ? 2 : (v < 100 ? 1 : 0), ' ') << v;
  out << '\n';
  for (std::uint32_t k = k_lo; k <= k_hi; ++k) {
    const std::string label = std::to_string(k);
    out << std::string(label.size() < 3 ? 3 - label.size() : 0, ' ') << label;
    for (std::uint32_t v = v_lo; v <= v_hi; ++v) {
      const std::string& s = marks[(k - k_lo) * width + (v - v_lo)];
      out << ' ' << std::string(s.size() < 3 ? 3 - s.size() : 0, ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace diffset
