#pragma once

// Batch sweeps over grids of move-pairs. Work is spread over a small thread
// pool (GDWN_THREADS caps it); results are always reported in pair order.

#include <cstddef>
#include <functional>
#include <vector>

#include "gdwn/analysis.hpp"
#include "gdwn/sturmian.hpp"
#include "gdwn/wythoff.hpp"

namespace gdwn {

/// GDWN_THREADS if set to a positive integer, else hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

struct EquivalenceCase {
  Int p = 0;
  Int q = 0;
  PairClass cls;
  EquivalenceReport equivalence;
  /// Non-splitting with q/p < phi must be equivalent; splitting must not.
  bool expectation_met = false;
};

struct EquivalenceSweep {
  std::vector<EquivalenceCase> cases;
  std::size_t non_splitting_checked = 0;
  std::size_t splitting_checked = 0;
  std::vector<EquivalenceCase> failures() const;
};

/// All non-splitting (p,q) with 1 < q/p < phi and p <= max_p, plus every
/// splitting pair with p <= max_p, each sieved to `bound`.
EquivalenceSweep equivalence_sweep(Int max_p, Int bound);

struct WitnessMismatch {
  Int p = 0;
  Int q = 0;
  PairClass cls;
  bool has_witness = false;
};

/// Disagreements between find_split_witness and classify_pair over
/// 1 <= p < q <= max_pq. Empty means full agreement.
std::vector<WitnessMismatch> witness_sweep(Int max_pq);

}  // namespace gdwn
