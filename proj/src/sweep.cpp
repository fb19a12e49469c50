#include "gdwn/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace gdwn {

unsigned worker_count() {
  unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GDWN_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // ignored: fall back to hardware concurrency
    }
  }
  return hw;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const auto workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

std::vector<EquivalenceCase> EquivalenceSweep::failures() const {
  std::vector<EquivalenceCase> out;
  std::ranges::copy_if(cases, std::back_inserter(out), [](const EquivalenceCase& c) { return !c.expectation_met; });
  return out;
}

namespace {

// q/p < phi  <=>  q < p*phi  <=>  q <= floor(p*phi) (p*phi is irrational).
bool below_phi(Int p, Int q) { return q <= beatty_A(p); }

}  // namespace

EquivalenceSweep equivalence_sweep(Int max_p, Int bound) {
  EquivalenceSweep sweep;
  for (Int p = 1; p <= max_p; ++p) {
    for (Int q = p + 1; below_phi(p, q); ++q) {
      const auto cls = classify_pair(p, q);
      if (!cls.splitting()) sweep.cases.push_back({p, q, cls, {}, false});
    }
  }
  sweep.non_splitting_checked = sweep.cases.size();
  // Splitting pairs (A_l, B_l) and (A_l + 1, B_l + 1) with first entry <= max_p.
  for (Int l = 1; beatty_A(l) <= max_p; ++l) {
    sweep.cases.push_back({beatty_A(l), beatty_B(l), classify_pair(beatty_A(l), beatty_B(l)), {}, false});
    if (beatty_A(l) + 1 <= max_p)
      sweep.cases.push_back(
          {beatty_A(l) + 1, beatty_B(l) + 1, classify_pair(beatty_A(l) + 1, beatty_B(l) + 1), {}, false});
  }
  sweep.splitting_checked = sweep.cases.size() - sweep.non_splitting_checked;

  parallel_for(sweep.cases.size(), [&](std::size_t i) {
    auto& c = sweep.cases[i];
    c.equivalence = check_wythoff_equivalence(extension_spec(c.p, c.q), bound);
    c.expectation_met = c.cls.splitting() ? !c.equivalence.equivalent : c.equivalence.equivalent;
  });
  return sweep;
}

std::vector<WitnessMismatch> witness_sweep(Int max_pq) {
  std::vector<std::pair<Int, Int>> pairs;
  for (Int q = 2; q <= max_pq; ++q)
    for (Int p = 1; p < q; ++p) pairs.emplace_back(p, q);
  std::vector<std::uint8_t> bad(pairs.size(), 0);
  std::vector<WitnessMismatch> found(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto [p, q] = pairs[i];
    const auto cls = classify_pair(p, q);
    const bool witness = find_split_witness(p, q).has_value();
    if (witness != cls.splitting()) {
      bad[i] = 1;
      found[i] = {p, q, cls, witness};
    }
  });
  std::vector<WitnessMismatch> out;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (bad[i]) out.push_back(found[i]);
  return out;
}

}  // namespace gdwn
