#include "diffset/mgr.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "diffset/diffcore.hpp"
#include "diffset/numtheory.hpp"
#include "parallel.hpp"

namespace diffset {

bool is_mgr(std::span<const std::uint32_t> marks, std::uint32_t v) {
  std::vector<char> seen(v, 0);
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (marks[i] >= v) return false;
    for (std::size_t j = 0; j < marks.size(); ++j) {
      if (i == j) continue;
      const std::uint32_t d = (marks[i] + v - marks[j]) % v;
      if (d == 0 || seen[d]) return false;
      seen[d] = 1;
    }
  }
  return true;
}

namespace {

/// Affine canonicity test over a multiplication table for one modulus.
class AffineCanonicity {
 public:
  explicit AffineCanonicity(std::uint32_t v) : v_(v), units_(units(v)) {
    if (v == 1) units_ = {0};
    table_.resize(static_cast<std::size_t>(units_.size()) * v);
    for (std::size_t u = 0; u < units_.size(); ++u)
      for (std::uint32_t d = 0; d < v; ++d)
        table_[u * v + d] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(units_[u]) * d % v);
  }

  /// False iff some map a(x - p) sends the sorted prefix below itself.
  bool prefix_ok(const std::uint32_t* prefix, std::size_t len) const {
    if (len < 2) return true;
    std::array<std::uint32_t, 64> img{};
    std::array<std::uint32_t, 64> diff{};
    for (std::size_t u = 0; u < units_.size(); ++u) {
      const std::uint32_t* row = &table_[u * v_];
      for (std::size_t pi = 0; pi < len; ++pi) {
        if (u == 0 && pi == 0 && units_[0] == 1) continue;  // identity map
        const std::uint32_t p = prefix[pi];
        std::size_t n = 0;
        for (std::size_t x = 0; x < len; ++x) {
          if (x == pi) continue;
          diff[n] = prefix[x] >= p ? prefix[x] - p : prefix[x] + v_ - p;
          img[n] = row[diff[n]];
          ++n;
        }
        // Selection-compare the sorted image against prefix[1..]; stop at the first difference.
        for (std::size_t r = 0; r < n; ++r) {
          std::size_t best = r;
          for (std::size_t s = r + 1; s < n; ++s)
            if (img[s] < img[best]) best = s;
          std::swap(img[r], img[best]);
          if (img[r] < prefix[r + 1]) return false;
          if (img[r] > prefix[r + 1]) break;
        }
      }
    }
    return true;
  }

 private:
  std::uint32_t v_;
  std::vector<std::uint32_t> units_;
  std::vector<std::uint32_t> table_;
};

}  // namespace

bool is_canonical_prefix(std::span<const std::uint32_t> prefix, std::uint32_t v) {
  if (prefix.size() > 64) throw std::invalid_argument("prefix too long");
  if (!std::is_sorted(prefix.begin(), prefix.end())) throw std::invalid_argument("prefix must be sorted");
  if (!prefix.empty() && prefix[0] != 0) return false;
  return AffineCanonicity(v).prefix_ok(prefix.data(), prefix.size());
}

bool is_canonical_affine(std::span<const std::uint32_t> marks, std::uint32_t v) {
  return is_canonical_prefix(marks, v);
}

std::vector<std::uint32_t> affine_canonical_form(std::span<const std::uint32_t> set, std::uint32_t v) {
  std::vector<std::uint32_t> best;
  if (set.empty()) return best;
  for (const auto a : units(v == 1 ? 2 : v)) {
    for (const auto p : set) {
      std::vector<std::uint32_t> img;
      img.reserve(set.size());
      for (const auto x : set)
        img.push_back(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * ((x + v - p) % v) % v));
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best) best = std::move(img);
    }
  }
  return best;
}

namespace {

struct TaskResult {
  bool found = false;
  bool timed_out = false;
  std::vector<std::uint32_t> witness;
  std::vector<std::vector<std::uint32_t>> all;
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
};

class MgrSearcher {
 public:
  MgrSearcher(std::uint32_t v, std::uint32_t k, const MgrSearchOptions& opts, const AffineCanonicity* canon,
              detail::SharedBudget& budget, const std::atomic<std::size_t>& best_task, std::size_t task_index)
      : v_(v),
        k_(k),
        opts_(opts),
        canon_(canon),
        guard_(budget),
        best_task_(best_task),
        task_index_(task_index),
        used_(v, 0) {
    marks_.reserve(k);
  }

  /// Runs the subtree below a fixed prefix (which must already be a valid partial ruler).
  TaskResult run(std::span<const std::uint32_t> prefix) {
    for (const auto x : prefix) {
      if (!place(x)) throw std::logic_error("invalid task prefix");
    }
    dfs();
    guard_.flush();
    result_.nodes = guard_.nodes();
    result_.timed_out = budget_hit_;
    return std::move(result_);
  }

 private:
  // Adds x to the ruler if all new differences are unused; otherwise leaves state untouched.
  bool place(std::uint32_t x) {
    std::size_t i = 0;
    for (; i < marks_.size(); ++i) {
      const std::uint32_t d = x - marks_[i];  // marks are increasing
      const std::uint32_t e = v_ - d;
      if (used_[d] || used_[e] || d == e) break;
      used_[d] = used_[e] = 1;
    }
    if (i < marks_.size()) {
      for (std::size_t r = 0; r < i; ++r) {
        const std::uint32_t d = x - marks_[r];
        used_[d] = used_[v_ - d] = 0;
      }
      return false;
    }
    marks_.push_back(x);
    return true;
  }

  void unplace() {
    const std::uint32_t x = marks_.back();
    marks_.pop_back();
    for (const auto m : marks_) {
      const std::uint32_t d = x - m;
      used_[d] = used_[v_ - d] = 0;
    }
  }

  bool should_stop() {
    if (stopped_) return true;
    if (!guard_.tick()) {
      stopped_ = budget_hit_ = true;
    } else if (opts_.mode == SearchMode::Exists && best_task_.load(std::memory_order_relaxed) < task_index_) {
      stopped_ = true;
    }
    return stopped_;
  }

  void record_leaf() {
    ++result_.count;
    if (!result_.found) {
      result_.found = true;
      result_.witness = marks_;
    }
    if (opts_.mode == SearchMode::All) result_.all.push_back(marks_);
    if (opts_.mode == SearchMode::Exists) stopped_ = true;
  }

  void dfs() {
    if (marks_.size() == k_) {
      record_leaf();
      return;
    }
    const std::uint32_t remaining = k_ - static_cast<std::uint32_t>(marks_.size());
    const std::uint32_t hi = v_ - remaining;  // leave room for the marks still to come
    for (std::uint32_t x = marks_.back() + 1; x <= hi; ++x) {
      if (should_stop()) return;
      if (!place(x)) continue;
      if (canon_ == nullptr || canon_->prefix_ok(marks_.data(), marks_.size())) dfs();
      unplace();
      if (stopped_) return;
    }
  }

  std::uint32_t v_;
  std::uint32_t k_;
  const MgrSearchOptions& opts_;
  const AffineCanonicity* canon_;
  detail::BudgetGuard guard_;
  const std::atomic<std::size_t>& best_task_;
  std::size_t task_index_;
  std::vector<char> used_;
  std::vector<std::uint32_t> marks_;
  TaskResult result_;
  bool stopped_ = false;
  bool budget_hit_ = false;
};

// Task prefixes: {0, m1, m2} for k >= 3, {0, m1} for k == 2. Order fixes the EXISTS witness.
std::vector<std::vector<std::uint32_t>> make_tasks(std::uint32_t v, std::uint32_t k, const AffineCanonicity* canon) {
  std::vector<std::vector<std::uint32_t>> tasks;
  const std::uint32_t depth = std::min<std::uint32_t>(k, 3);
  std::vector<std::uint32_t> prefix{0};
  std::vector<char> used(v, 0);
  // Tiny recursive builder over the first `depth` marks.
  auto rec = [&](auto&& self) -> void {
    if (prefix.size() == depth) {
      tasks.push_back(prefix);
      return;
    }
    const std::uint32_t remaining = k - static_cast<std::uint32_t>(prefix.size());
    for (std::uint32_t x = prefix.back() + 1; x + remaining <= v; ++x) {
      bool ok = true;
      std::vector<std::uint32_t> set_now;
      for (const auto m : prefix) {
        const std::uint32_t d = x - m, e = v - d;
        if (used[d] || used[e] || d == e) {
          ok = false;
          break;
        }
        used[d] = used[e] = 1;
        set_now.push_back(d);
      }
      if (ok) {
        prefix.push_back(x);
        if (canon == nullptr || canon->prefix_ok(prefix.data(), prefix.size())) self(self);
        prefix.pop_back();
      }
      for (const auto d : set_now) used[d] = used[v - d] = 0;
    }
  };
  rec(rec);
  return tasks;
}

}  // namespace

SearchReport search_mgr(std::uint32_t v, std::uint32_t k, const MgrSearchOptions& options) {
  if (k < 1 || k > v) throw std::invalid_argument("search_mgr: need 1 <= k <= v");
  if (k > 64) throw std::invalid_argument("search_mgr: k too large");
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  auto finish = [&] {
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  };
  if (k == 1) {
    report.status = SearchStatus::Exists;
    report.witness = {0};
    report.count = 1;
    if (options.mode == SearchMode::All) report.witnesses = {{0}};
    return finish();
  }
  if (static_cast<std::uint64_t>(k) * (k - 1) > v - 1) {
    report.status = SearchStatus::None;
    return finish();
  }

  std::optional<AffineCanonicity> canon;
  if (options.canonical) canon.emplace(v);
  const auto tasks = make_tasks(v, k, canon ? &*canon : nullptr);

  detail::SharedBudget budget(options.budget);
  std::atomic<std::size_t> best_task{std::numeric_limits<std::size_t>::max()};
  std::vector<TaskResult> results(tasks.size());
  detail::parallel_for(tasks.size(), options.jobs, [&](std::size_t i) {
    if (options.mode == SearchMode::Exists && best_task.load() < i) return;
    MgrSearcher searcher(v, k, options, canon ? &*canon : nullptr, budget, best_task, i);
    results[i] = searcher.run(tasks[i]);
    if (results[i].found && options.mode == SearchMode::Exists) {
      std::size_t cur = best_task.load();
      while (i < cur && !best_task.compare_exchange_weak(cur, i)) {
      }
    }
  });

  bool timed_out = false;
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto& r = results[i];
    report.nodes += r.nodes;
    if (r.timed_out) timed_out = true;
    if (r.found && report.witness.empty()) report.witness = r.witness;
    report.count += r.count;
    if (options.mode == SearchMode::All)
      for (auto& w : r.all) report.witnesses.push_back(std::move(w));
  }
  if (options.mode == SearchMode::Exists) {
    report.count = report.witness.empty() ? 0 : 1;
    report.status = !report.witness.empty() ? SearchStatus::Exists
                    : timed_out             ? SearchStatus::Timeout
                                            : SearchStatus::None;
  } else {
    report.status = timed_out ? SearchStatus::Timeout : (report.count > 0 ? SearchStatus::Exists : SearchStatus::None);
  }
  return finish();
}

std::uint32_t golomb_length(std::uint32_t k) {
  // Optimal Golomb ruler lengths (published OGR tables).
  static constexpr std::array<std::uint32_t, 16> kLengths = {0,  0,  1,  3,  6,  11,  17,  25,
                                                             34, 44, 55, 72, 85, 106, 127, 151};
  if (k < 1 || k > 15) throw std::out_of_range("golomb_length: k must be in [1, 15]");
  return kLengths[k];
}

Spectrum spectrum(std::uint32_t k, const MgrSearchOptions& options) {
  Spectrum s;
  s.k = k;
  const std::uint32_t length = golomb_length(k);
  s.bound = 2 * length + 1;
  s.first_searched = k * (k - 1) + 1;
  MgrSearchOptions opts = options;
  opts.mode = SearchMode::Exists;
  for (std::uint32_t v = std::max(s.first_searched, k); v < s.bound; ++v) {
    const SearchReport r = search_mgr(v, k, opts);
    s.nodes += r.nodes;
    if (r.status == SearchStatus::Exists) {
      s.members.push_back(v);
      s.witnesses.push_back(r.witness);
    } else if (r.status == SearchStatus::Timeout) {
      s.timeouts.push_back(v);
    }
  }
  return s;
}

RelativeDsCheck mgr_to_relative_ds(std::span<const std::uint32_t> marks, std::uint32_t k) {
  const std::uint32_t v = k * k - k + 2;
  if (marks.size() != k) throw std::invalid_argument("mgr_to_relative_ds: expected k marks");
  if (!is_mgr(marks, v)) throw std::invalid_argument("mgr_to_relative_ds: marks are not a (k^2-k+2, k)-MGR");
  RelativeDsCheck out;
  out.v = v;
  out.m = v / 2;
  out.set = normalized_set(marks, v);
  out.forbidden = {0, v / 2};
  out.verified = verify_relative_ds(GroupSpec::cyclic(v), out.set, out.forbidden, v / 2, 2, k, 1);
  if (!out.verified) throw std::logic_error("mgr_to_relative_ds: relative difference set check failed");
  return out;
}

RyserVerdict ryser_conditions(std::uint64_t m, std::uint64_t k, std::uint64_t lambda) {
  RyserVerdict r;
  if (m % 2 == 0) {
    if (k < 2 * lambda || !is_square_u64(k - 2 * lambda)) {
      r.reason = "m even and k - 2*lambda is not a perfect square";
      return r;
    }
  } else if (!is_square_u64(k)) {
    r.reason = "m odd and k is not a perfect square";
    return r;
  }
  r.pass = true;
  r.reason = m % 2 == 0 ? "k - 2*lambda is a perfect square" : "k is a perfect square";
  return r;
}

std::vector<std::uint32_t> ryser_project(std::span<const std::uint32_t> set, std::uint32_t m) {
  if (m < 2) throw std::invalid_argument("ryser_project: m must be >= 2");
  const std::uint64_t k = set.size();
  const std::uint64_t pairs = k * (k - 1);
  if (k < 2 || pairs % (2ULL * m - 2) != 0) throw std::invalid_argument("ryser_project: not a relative (m,2,k,lambda)-DS");
  const std::uint64_t lambda = pairs / (2ULL * m - 2);
  const std::vector<std::uint32_t> forbidden{0, m};
  if (!verify_relative_ds(GroupSpec::cyclic(2 * m), set, forbidden, m, 2, k, lambda))
    throw std::invalid_argument("ryser_project: input is not a relative difference set w.r.t. {0, m}");
  std::vector<std::uint32_t> out;
  for (const auto x : set) out.push_back(x % m);
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::logic_error("ryser_project: projection is not injective");
  const Classification c = classify(GroupSpec::cyclic(m), out);
  if (!c.is_ds() || c.params.lambda != 2 * lambda) throw std::logic_error("ryser_project: image is not an (m,k,2*lambda)-DS");
  return out;
}

}  // namespace diffset
