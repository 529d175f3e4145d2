#include "solvcrit/criterion.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "solvcrit/numbertheory.hpp"

namespace solvcrit {

namespace {

// Runs task(i) for i in [0, count) on `workers` threads. Tasks are handed out
// in increasing index order.
template <typename Task>
void run_tasks(std::size_t count, unsigned workers, Task&& task) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count)
        return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::jthread> pool;
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back(body);
  pool.clear();
  if (error)
    std::rethrow_exception(error);
}

std::vector<std::size_t> representatives_of_order(const std::vector<ConjugacyClass>& classes,
                                                  std::uint64_t m) {
  std::vector<std::size_t> reps;
  for (const auto& c : classes)
    if (c.order_of_elements == m)
      reps.push_back(c.representative_index);
  return reps;
}

} // namespace

// ---------------------------------------------------------------------------

SubgroupVerdict two_generator_verdict(const Permutation& x, const Permutation& y) {
  Group h({x, y});
  auto series = derived_series(h);
  return {series.series_orders.front(), series.solvable};
}

std::size_t SubgroupVerdictCache::PairHash::operator()(
    const std::pair<Permutation, Permutation>& p) const noexcept {
  PermutationHash h;
  return h(p.first) * 0x9e3779b97f4a7c15ULL ^ h(p.second);
}

SubgroupVerdict SubgroupVerdictCache::verdict(const Permutation& x, const Permutation& y) {
  if (!enabled_)
    return two_generator_verdict(x, y);
  auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
  {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it != table_.end()) {
      ++hits_;
      return it->second;
    }
  }
  SubgroupVerdict v = two_generator_verdict(x, y);
  std::unique_lock lock(mutex_);
  table_.emplace(std::move(key), v);
  return v;
}

std::size_t SubgroupVerdictCache::hits() const { return hits_.load(); }

std::size_t SubgroupVerdictCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

// ---------------------------------------------------------------------------

CriterionReport check_criterion(const ElementTable& table,
                                const std::vector<ConjugacyClass>& classes,
                                SubgroupVerdictCache& cache, const CriterionOptions& options) {
  const std::size_t k = classes.size();
  std::vector<ClassPairWitness> results(k * k);

  run_tasks(k * k, options.workers, [&](std::size_t t) {
    const std::size_t c = t / k, d = t % k;
    ClassPairWitness w{c, d, std::nullopt, 0};
    const Permutation& x = classes[c].representative;
    for (std::size_t yi : classes[d].members) {
      ++w.pairs_scanned;
      if (cache.verdict(x, table[yi]).solvable) {
        w.witness = std::make_pair(x, table[yi]);
        break;
      }
    }
    results[t] = std::move(w);
  });

  CriterionReport report{true, std::nullopt, 0, std::move(results), classes};
  for (const auto& w : report.class_pairs) {
    report.pairs_checked += w.pairs_scanned;
    if (!w.witness && report.holds) {
      report.holds = false;
      report.counterexample = std::make_pair(w.class_c, w.class_d);
    }
  }
  return report;
}

CriterionReport check_criterion(const Group& group, const CriterionOptions& options,
                                std::uint64_t cap) {
  ElementTable table(group, cap);
  auto classes = conjugacy_classes(table);
  SubgroupVerdictCache cache(options.use_cache);
  return check_criterion(table, classes, cache, options);
}

// ---------------------------------------------------------------------------

std::vector<GroupOrder> WitnessReport::outcome_orders() const {
  std::vector<GroupOrder> v;
  for (const auto& [verdict, count] : outcomes)
    v.push_back(verdict.order);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

WitnessReport verify_witness_pair(const ElementTable& table,
                                  const std::vector<ConjugacyClass>& classes, std::uint64_t a,
                                  std::uint64_t b, SubgroupVerdictCache& cache,
                                  const CriterionOptions& options) {
  const auto reps = representatives_of_order(classes, a);
  const auto& ys = table.indices_of_order(b);
  if (reps.empty())
    throw std::invalid_argument(std::to_string(a) + " is not an element order of the group");
  if (ys.empty())
    throw std::invalid_argument(std::to_string(b) + " is not an element order of the group");

  // The pair sequence (rep, y) is cut into fixed blocks; each block scans in
  // order and stops at its first solvable subgroup. Merging blocks in order up
  // to the first failing one reproduces the sequential scan exactly.
  const std::size_t total = reps.size() * ys.size();
  constexpr std::size_t kBlock = 64;
  const std::size_t nblocks = (total + kBlock - 1) / kBlock;

  struct BlockResult {
    std::vector<SubgroupVerdict> seen;
    std::optional<std::size_t> failure; // pair index of the first solvable outcome
    bool skipped = true;
  };
  std::vector<BlockResult> blocks(nblocks);
  std::atomic<std::size_t> first_failed_block{std::numeric_limits<std::size_t>::max()};

  run_tasks(nblocks, options.workers, [&](std::size_t blk) {
    if (blk > first_failed_block.load())
      return;
    BlockResult r;
    r.skipped = false;
    const std::size_t end = std::min(total, (blk + 1) * kBlock);
    for (std::size_t idx = blk * kBlock; idx < end; ++idx) {
      const Permutation& x = table[reps[idx / ys.size()]];
      const Permutation& y = table[ys[idx % ys.size()]];
      SubgroupVerdict v = cache.verdict(x, y);
      r.seen.push_back(v);
      if (v.solvable) {
        r.failure = idx;
        std::size_t cur = first_failed_block.load();
        while (blk < cur && !first_failed_block.compare_exchange_weak(cur, blk)) {
        }
        break;
      }
    }
    blocks[blk] = std::move(r);
  });

  WitnessReport report{a, b, true, {}, std::nullopt, 0};
  for (const auto& r : blocks) {
    if (r.skipped)
      throw std::logic_error("witness scan skipped a block before the first failure");
    for (const auto& v : r.seen)
      ++report.outcomes[v];
    report.pairs_checked += r.seen.size();
    if (r.failure) {
      std::size_t idx = *r.failure;
      report.verified = false;
      report.counterexample =
          std::make_pair(table[reps[idx / ys.size()]], table[ys[idx % ys.size()]]);
      break;
    }
  }
  return report;
}

WitnessReport verify_witness_pair(const Group& group, std::uint64_t a, std::uint64_t b,
                                  const CriterionOptions& options, std::uint64_t cap) {
  ElementTable table(group, cap);
  auto classes = conjugacy_classes(table);
  SubgroupVerdictCache cache(options.use_cache);
  return verify_witness_pair(table, classes, a, b, cache, options);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>>
search_witness_pairs(const ElementTable& table, const std::vector<ConjugacyClass>& classes,
                     bool restrict_to_primes, SubgroupVerdictCache& cache,
                     const CriterionOptions& options) {
  auto spectrum = order_spectrum(table).orders;
  if (restrict_to_primes)
    std::erase_if(spectrum, [](std::uint64_t m) { return !is_prime(m); });
  std::vector<std::pair<std::uint64_t, std::uint64_t>> found;
  for (std::size_t i = 0; i < spectrum.size(); ++i)
    for (std::size_t j = restrict_to_primes ? i + 1 : i; j < spectrum.size(); ++j) {
      if (verify_witness_pair(table, classes, spectrum[i], spectrum[j], cache, options).verified)
        found.emplace_back(spectrum[i], spectrum[j]);
    }
  return found;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>>
search_witness_pairs(const Group& group, bool restrict_to_primes, const CriterionOptions& options,
                     std::uint64_t cap) {
  ElementTable table(group, cap);
  auto classes = conjugacy_classes(table);
  SubgroupVerdictCache cache(options.use_cache);
  return search_witness_pairs(table, classes, restrict_to_primes, cache, options);
}

} // namespace solvcrit
