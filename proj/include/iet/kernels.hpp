#pragma once

#include <span>
#include <vector>

#include "iet/criterion.hpp"
#include "iet/permutation.hpp"
#include "iet/scalar.hpp"
#include "iet/suspension.hpp"

namespace iet {

// OpenMP fan-out over independent instances. Each kernel also has a Serial
// mode that runs the plain loop; results are identical and always in input
// order. If instances throw, the exception of the lowest index is rethrown.

enum class Execution { Serial, Parallel };

/// threads <= 0 lets the OpenMP runtime decide.
struct ExecutionPolicy {
  Execution mode = Execution::Parallel;
  int threads = 0;
};

struct CriterionInput {
  Permutation sigma;
  std::vector<Scalar> lengths;
  std::vector<Scalar> heights;
};

std::vector<IntersectionReport> self_intersects_batch(std::span<const SuspensionDiagram> diagrams,
                                                      ExecutionPolicy policy = {});

std::vector<CriterionReport> convexity_criterion_batch(std::span<const CriterionInput> inputs,
                                                       ExecutionPolicy policy = {});

/// scan_curve with the grid points distributed across threads.
ScanSummary scan_curve(const CurveSpec& spec, const Permutation& sigma, std::span<const ApproxScalar> grid,
                       ExecutionPolicy policy);

}  // namespace iet
