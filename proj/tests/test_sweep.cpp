#include <doctest.h>

#include <atomic>
#include <cstdlib>

#include "gdwn/sweep.hpp"

using namespace gdwn;

TEST_CASE("parallel_for visits every index once") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; });
  for (const auto& h : hits) CHECK(h.load() == 1);
  CHECK_THROWS(parallel_for(10, [](std::size_t i) {
    if (i == 7) throw std::runtime_error("boom");
  }));
}

TEST_CASE("sweeps are independent of the thread count") {
  setenv("GDWN_THREADS", "1", 1);
  const auto serial = equivalence_sweep(6, 400);
  CHECK(worker_count() == 1);
  setenv("GDWN_THREADS", "4", 1);
  const auto parallel = equivalence_sweep(6, 400);
  unsetenv("GDWN_THREADS");
  REQUIRE(serial.cases.size() == parallel.cases.size());
  for (std::size_t i = 0; i < serial.cases.size(); ++i) {
    CHECK(serial.cases[i].p == parallel.cases[i].p);
    CHECK(serial.cases[i].q == parallel.cases[i].q);
    CHECK(serial.cases[i].equivalence.equivalent == parallel.cases[i].equivalence.equivalent);
  }
  CHECK(serial.failures().empty());
}

TEST_CASE("witness existence agrees with classification") { CHECK(witness_sweep(150).empty()); }
