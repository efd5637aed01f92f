#pragma once

#include "prismdom/eternal.hpp"
#include "prismdom/invariants.hpp"
#include "prismdom/pipeline.hpp"

#include <optional>
#include <string>

namespace prismdom {

const char* tool_version();

// "budget-nodes N rank-cap N work-cap N sweep-cap N|none". Thread count is
// deliberately absent: results do not depend on it.
std::string budget_line(const SearchBudget& search, const GameLimits& game);

std::string graph_line(const std::string& name, const Graph& g);

// One line per claim:
// "claim <name> expected <value> computed <value> status <ok|fail|inconclusive>",
// followed by " side" for claims that do not enter the verdict.
std::string format_claim(const ClaimResult& claim);

std::string format_counterexample_report(const CounterexampleBundle& bundle,
                                         const CounterexampleReport& report,
                                         const PipelineOptions& options);

// Parameters of a single graph with witnesses and the internal consistency
// checks that cmd "params" reports.
struct ParamsReport {
    std::optional<CliqueResult> alpha;
    std::optional<CliqueResult> omega;
    std::optional<ChromaticResult> chi;
    std::optional<CoverResult> theta;
    std::optional<GammaResult> gamma;
    bool consistent = true;     // no violated check
    bool complete = true;       // nothing ran out of budget
    std::string text;
};

ParamsReport compute_params(const Graph& g, const SearchBudget& search, const GameLimits& game,
                            bool with_gamma);

} // namespace prismdom
