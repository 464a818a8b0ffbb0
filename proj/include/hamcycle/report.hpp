#ifndef HAMCYCLE_REPORT_HPP
#define HAMCYCLE_REPORT_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hamcycle/pipeline.hpp"

namespace hamcycle {

struct SummaryMetric {
    std::string metric;
    std::size_t numerator = 0;
    std::size_t denominator = 0;
};

/// Aggregate agreement counts over a batch, in a fixed order.
[[nodiscard]] std::vector<SummaryMetric> summarize(const std::vector<PipelineRecord>& records);

[[nodiscard]] nlohmann::json trace_to_json(const ReductionTrace& t);
[[nodiscard]] nlohmann::json basis_to_json(const BasisRecord& b);
[[nodiscard]] nlohmann::json record_to_json(const PipelineRecord& r);

/// Header, then per graph one "graph" row followed by its "basis" rows,
/// then the "summary" rows. Records are written in the order given.
void write_csv(std::ostream& out, const std::vector<PipelineRecord>& records);
void write_json(std::ostream& out, const std::vector<PipelineRecord>& records);

/// Records with at least one false agreement flag.
[[nodiscard]] std::vector<const PipelineRecord*> counterexamples(const std::vector<PipelineRecord>& records);

/// Writes results.csv, results.json, counterexamples.g6 and
/// counterexamples.json into dir (created if missing). Throws Error on I/O.
void write_batch_report(const std::filesystem::path& dir, const std::vector<PipelineRecord>& records);

} // namespace hamcycle

#endif // HAMCYCLE_REPORT_HPP
