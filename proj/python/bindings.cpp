#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gdwn/analysis.hpp"
#include "gdwn/error.hpp"
#include "gdwn/sieve.hpp"
#include "gdwn/sturmian.hpp"
#include "gdwn/wythoff.hpp"

namespace py = pybind11;
using namespace gdwn;

namespace {

using PairList = std::vector<std::pair<Int, Int>>;

GameSpec to_spec(const PairList& pairs) { return GameSpec::validate(pairs); }

WordKind to_kind(const std::string& kind) {
  if (kind == "lower") return WordKind::Lower;
  if (kind == "upper") return WordKind::Upper;
  throw Error(ErrorCode::InvalidInput, "word kind must be 'lower' or 'upper'");
}

py::dict split_to_dict(const SplitReport& r) {
  py::list gaps;
  for (const auto& g : r.gaps) gaps.append(py::make_tuple(g.alpha.to_double(), g.end().to_double()));
  py::list beams;
  for (const auto& b : r.beams) {
    py::dict d;
    d["side"] = to_string(b.side);
    d["slope"] = b.slope;
    d["median"] = b.median;
    d["density"] = b.density;
    d["lower"] = b.lower;
    d["upper"] = b.upper;
    d["count"] = b.count;
    beams.append(d);
  }
  py::dict out;
  out["split"] = r.split;
  out["gaps"] = gaps;
  out["beams"] = beams;
  out["tail_mean"] = r.tail_mean;
  out["tail_size"] = r.tail_size;
  out["exceptional_count"] = r.exceptional_count;
  return out;
}

}  // namespace

PYBIND11_MODULE(_gdwn, m) {
  m.doc() = "Generalized Diagonal Wythoff Nim";

  static py::exception<Error> error(m, "GdwnError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("normalize_spec", [](const PairList& pairs) {
    PairList out;
    for (const auto& d : to_spec(pairs).pairs()) out.emplace_back(d.p, d.q);
    return out;
  }, py::arg("pairs"));

  m.def("compute_pi", [](const PairList& pairs, Int n, const std::string& engine) {
    SieveOptions options;
    if (engine == "naive") options.engine = SieveEngine::Naive;
    else if (engine != "optimized") throw Error(ErrorCode::InvalidInput, "engine must be 'optimized' or 'naive'");
    std::vector<Int> pi;
    {
      py::gil_scoped_release release;
      pi = compute_pi(to_spec(pairs), n, options).pi();
    }
    return pi;
  }, py::arg("pairs"), py::arg("n"), py::arg("engine") = "optimized");

  m.def("p_pairs", [](const PairList& pairs, Int n) {
    const auto t = compute_pi(to_spec(pairs), n);
    PairList out;
    for (std::size_t i = 0; i < t.pair_count(); ++i) out.emplace_back(t.a()[i], t.b()[i]);
    return out;
  }, py::arg("pairs"), py::arg("n"), "(a_i, b_i) for every pair with a_i <= n.");

  m.def("p_positions", [](const PairList& pairs, Int xmax, Int ymax) {
    PairList out;
    for (const auto& p : solve_bruteforce(to_spec(pairs), xmax, ymax).p_positions()) out.emplace_back(p.x, p.y);
    return out;
  }, py::arg("pairs"), py::arg("xmax"), py::arg("ymax"), "Retrograde oracle P-positions on a grid.");

  m.def("classify_pair", [](Int p, Int q) {
    const auto c = classify_pair(p, q);
    return py::make_tuple(to_string(c.kind), c.index);
  }, py::arg("p"), py::arg("q"));

  m.def("split_witness", [](Int p, Int q) -> py::object {
    if (const auto w = find_split_witness(p, q)) return py::make_tuple(w->m, w->n);
    return py::none();
  }, py::arg("p"), py::arg("q"));

  m.def("beatty_a", &beatty_A, py::arg("n"));
  m.def("beatty_b", &beatty_B, py::arg("n"));

  m.def("zeckendorf", [](Int n) {
    std::vector<Int> parts;
    for (int k : zeckendorf(n).indices) parts.push_back(fibonacci(k));
    return parts;
  }, py::arg("n"), "Fibonacci summands in decreasing order.");
  m.def("z_shift", [](Int n) { return z_shift(zeckendorf(n)); }, py::arg("n"));

  m.def("word", [](const std::string& kind, Int n) { return word_prefix(to_kind(kind), n).to_string(); },
        py::arg("kind"), py::arg("n"));

  m.def("wythoff_equivalent", [](const PairList& pairs, Int n) {
    return check_wythoff_equivalence(to_spec(pairs), n).equivalent;
  }, py::arg("pairs"), py::arg("n"));

  m.def("detect_split", [](const PairList& pairs, Int n, int max_gaps, std::optional<Int> min_tail,
                           const std::string& series) {
    SplitReport report;
    {
      py::gil_scoped_release release;
      const auto table = compute_pi(to_spec(pairs), n);
      const auto s = ratio_series(table, series == "full" ? SeriesMode::Full : SeriesMode::Pairs);
      SplitParams params;
      params.min_tail = min_tail;
      report = detect_multi_split(s, max_gaps, params);
    }
    return split_to_dict(report);
  }, py::arg("pairs"), py::arg("n"), py::arg("max_gaps") = 1, py::arg("min_tail") = py::none(),
     py::arg("series") = "pairs");
}
