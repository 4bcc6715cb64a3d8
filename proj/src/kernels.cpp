#include "iet/kernels.hpp"

#include <exception>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "iet/error.hpp"

namespace iet {

namespace {

// Runs body(i) for i in [0, n) and stores results in order. Exceptions are
// parked per index and the first one is rethrown after the loop.
template <typename Result, typename Body>
std::vector<Result> run_indexed(std::size_t n, ExecutionPolicy policy, Body body) {
  std::vector<std::optional<Result>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long>(n);

  if (policy.mode == Execution::Serial) {
    for (long i = 0; i < count; ++i) {
      try {
        slots[i].emplace(body(static_cast<std::size_t>(i)));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
#ifdef _OPENMP
    const int threads = policy.threads > 0 ? policy.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
#endif
    for (long i = 0; i < count; ++i) {
      try {
        slots[i].emplace(body(static_cast<std::size_t>(i)));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Result> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace

std::vector<IntersectionReport> self_intersects_batch(std::span<const SuspensionDiagram> diagrams,
                                                      ExecutionPolicy policy) {
  return run_indexed<IntersectionReport>(diagrams.size(), policy,
                                         [&](std::size_t i) { return self_intersects(diagrams[i]); });
}

std::vector<CriterionReport> convexity_criterion_batch(std::span<const CriterionInput> inputs,
                                                       ExecutionPolicy policy) {
  return run_indexed<CriterionReport>(inputs.size(), policy, [&](std::size_t i) {
    const auto& in = inputs[i];
    return convexity_criterion(in.sigma, in.lengths, in.heights);
  });
}

ScanSummary scan_curve(const CurveSpec& spec, const Permutation& sigma, std::span<const ApproxScalar> grid,
                       ExecutionPolicy policy) {
  if (policy.mode == Execution::Serial) return scan_curve(spec, sigma, grid);
  if (!is_irreducible(sigma)) {
    throw Error(ErrorKind::ReduciblePermutation, "permutation " + sigma.to_string() + " is reducible");
  }
  if (spec.size() != sigma.size()) {
    throw Error(ErrorKind::DimensionMismatch, "curve and permutation sizes differ");
  }
  auto samples = run_indexed<ScanSample>(grid.size(), policy, [&](std::size_t k) {
    Scalar exact = from_double(grid[k]);
    const auto [a, b] = spec.evaluate(exact);
    const CriterionReport r = convexity_criterion(sigma, a, b);
    return ScanSample{grid[k], std::move(exact), r.verdict, r.monotonicity, r.simple};
  });
  ScanSummary summary;
  for (const auto& s : samples) ++summary.counts[static_cast<std::size_t>(s.verdict)];
  summary.samples = std::move(samples);
  return summary;
}

}  // namespace iet
