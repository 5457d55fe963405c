#pragma once

#include <nlohmann/json_fwd.hpp>

#include "charp/grading.hpp"
#include "charp/stableiso.hpp"

namespace charp {

/// Everything that influences randomized or bounded behavior of a run.
struct RunConfig {
    std::uint64_t seed = 1;
    std::int64_t degree_bound = 12;
    std::size_t fiber_index = 2;   // 1-based x-index for fiber specialization
    std::int64_t lambda = 1;       // fiber parameter (prime-field value)
};

/// Full counterexample pipeline: line certificate, non-triviality evidence,
/// presentation, phi1/phi2, Derksen lower bound, stable isomorphism. Machine
/// checks carry pass/fail status; conclusions that are theorems rather than
/// computations are listed as cited claims without any status.
nlohmann::json build_counterexample_report(std::uint32_t p, std::uint32_t q, std::size_t m,
                                           const std::vector<std::int64_t>& r,
                                           const RunConfig& config);

/// Replay of the two-step grading chain on phi1 with one fiber
/// specialization: each induced map must verify.
nlohmann::json build_trace_report(const PresPtr& pres,
                                  const std::vector<WeightVector>& weight_chain,
                                  std::size_t fiber_index_1based, const Coeff& lambda);

/// True iff every machine-checked entry in the report passed.
bool report_all_green(const nlohmann::json& report);

/// Human-readable rendering of a report (one line per check).
std::string render_report(const nlohmann::json& report);

}  // namespace charp
