#pragma once

#include <gpprism/families.hh>
#include <gpprism/graph.hh>
#include <gpprism/metric.hh>
#include <gpprism/solver.hh>
#include <gpprism/theorems.hh>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gpprism
{
    enum class Verdict
    {
        Confirmed,
        BoundRespected,
        Discrepancy,
        Timeout,
        Error
    };

    auto to_string(Verdict v) -> std::string_view;

    /// Exact predictions must match; ranges must contain the value. The
    /// central vertex and block graph ranges are held to their upper end only.
    auto judge(const Prediction & p, int exact_value) -> Verdict;

    /// The value stated for a named family's prism, where one is stated.
    auto claimed_prism_gp(const FamilySpec & spec) -> std::optional<int>;

    struct JudgedPrediction
    {
        Prediction prediction;
        Verdict verdict;
    };

    struct ComputeRecord
    {
        int n = 0;
        int edges = 0;
        std::string graph6;
        bool connected = false;
        bool complement_connected = false;
        std::optional<MetricSummary> metric;
        InvariantBundle invariants;
        int complement_gp3 = 0;
        std::optional<PrismBounds> bounds;
        std::optional<GpResult> prism;
        std::vector<std::string> prism_labels;
        std::vector<JudgedPrediction> predictions;
        std::optional<bool> split_obligation;
        std::optional<std::pair<int, Verdict>> claim;
        bool predictions_consistent = true;
        std::vector<std::string> notes;
    };

    /// Everything the compute subcommand prints. Parts that cannot be
    /// evaluated (a disconnected metric, too many optima) become notes.
    auto compute_record(const Graph & g, const std::optional<FamilySpec> & family, const SolverOptions & options = {})
        -> ComputeRecord;
    auto format_record(const ComputeRecord & record) -> std::string;

    struct IntRange
    {
        int lo = 0;
        int hi = 0;
    };

    /// "a..b" or "a". Throws BadRange.
    auto parse_range(std::string_view text) -> IntRange;

    struct ReportRow
    {
        int id = 0;
        std::string instance;
        std::string theorem;
        std::string predicted;
        std::string exact;
        Verdict verdict = Verdict::Error;
        std::uint64_t nodes = 0;
        double millis = 0.0;
    };

    struct TheoremReport
    {
        std::vector<ReportRow> rows;

        auto summary() const -> std::map<Verdict, int>;
        /// No discrepancy, timeout or error.
        auto clean() const -> bool;
    };

    /// Header row, then one tab-separated row per instance, LF endings.
    auto write_tsv(std::ostream & out, const TheoremReport & report) -> void;

    struct VerifyConfig
    {
        std::string theorem;
        std::optional<IntRange> n;
        std::optional<IntRange> k;
        std::optional<IntRange> grid_n;
        std::optional<IntRange> grid_m;
        std::optional<IntRange> r;
        int samples = 20;
        std::uint64_t seed = 1;
        double timeout_secs = 60.0;
        std::optional<double> budget_secs;
        int threads = 1;
        Limits limits;
    };

    /// cor38 thm37 cor39 cor310 thm35 thm41 thm42 thm312 thm314 gk claim-a
    /// thm23 thm22 lemma33 fig2
    auto theorem_ids() -> const std::vector<std::string> &;

    /// Generates every instance up front from (seed, ranges), solves them on
    /// the requested number of threads, and returns rows in instance order.
    /// Throws BadRange, BadParameters.
    auto run_verify(const VerifyConfig & config) -> TheoremReport;
}
