#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hgm/algorithms.hpp"
#include "hgm/exact.hpp"
#include "hgm/generators.hpp"

namespace hgm {

enum class GeneratorKind { Uniform, Geometric };
enum class BenchmarkKind { Perfect, Maximal, Exact };
enum class AlgoId { Greedy, IteratedSampling, HedcsMatching };

std::string to_string(GeneratorKind g);
std::string to_string(BenchmarkKind b);
std::string to_string(AlgoId a);

struct ExperimentConfig {
    std::string name = "custom";
    GeneratorKind generator = GeneratorKind::Uniform;
    std::size_t n = 0;
    std::size_t m = 0;   // uniform generator
    double r = 0.0;      // geometric generator
    std::size_t d = 3;
    std::size_t k = 1;
    std::size_t s = 0;        // 0 -> 2m/k
    std::size_t s_hedcs = 0;  // 0 -> same as s; raises only the HEDCS union budget
    HedcsParams hedcs;
    BenchmarkKind benchmark = BenchmarkKind::Perfect;
    std::size_t instances = 100;
    std::uint64_t seed = 1;
    std::size_t max_attempts = 5;
    std::uint64_t oracle_budget = kDefaultOracleBudget;
    std::size_t threads = 1;
};

// One benchmark row: one (instance, algorithm) run.
struct ExperimentRecord {
    std::string config;
    GeneratorKind generator;
    std::size_t n, m, d, k, s;
    double r;
    AlgoId algorithm;
    std::uint64_t seed;
    std::size_t matching_size;
    BenchmarkKind benchmark;
    std::size_t benchmark_size;
    double ratio_percent;
    std::size_t rounds;
    std::size_t attempts;
    double wall_ms;
    long long beta;
    long long beta_minus;
};

struct AggregateRow {
    AlgoId algorithm;
    double mean_ratio_percent = 0.0;
    double mean_rounds = 0.0;
    double mean_size = 0.0;
};

struct TableResult {
    std::vector<ExperimentRecord> records;
    std::vector<AggregateRow> aggregates;  // one per algorithm
    double mean_edges = 0.0;               // generated edges (geometric varies)
};

// Archived per-run evidence: enough to re-generate the instance and re-check
// every matching and HEDCS certificate.
struct ArchiveEntry {
    ExperimentConfig config;  // generator params + seed of the instance
    std::uint64_t instance_seed;
    std::vector<EdgeId> greedy_matching;
    std::vector<EdgeId> is_matching;
    std::vector<EdgeId> hedcs_matching;
    std::vector<EdgeId> hedcs_union;  // the multigraph C certificate
};

// Runs #instances independent instances; all three algorithms see the same
// instance. Records come out sorted by seed then algorithm. Throws on oracle
// BudgetExceeded when the benchmark is Exact and an instance is too large.
TableResult run_table(const ExperimentConfig& config,
                      std::vector<ArchiveEntry>* archive = nullptr);

void write_csv(std::ostream& out, const TableResult& table);

// Archive (de)serialization: one JSON object per line.
void write_archive(std::ostream& out, const std::vector<ArchiveEntry>& entries);
std::vector<ArchiveEntry> read_archive(std::istream& in);

struct VerifyReport {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

// Re-generates every archived instance and re-checks matching validity, the
// maximality of iterated-sampling outputs and the HEDCS union stats.
VerifyReport verify_run(const std::vector<ArchiveEntry>& entries);

// Shipped desk-scale benchmark presets.
std::vector<ExperimentConfig> builtin_presets();
std::optional<ExperimentConfig> find_preset(const std::string& name);

}  // namespace hgm
