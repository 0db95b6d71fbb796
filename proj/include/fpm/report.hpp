#pragma once

#include <string>

#include "fpm/instance.hpp"
#include "fpm/legal_edges.hpp"
#include "fpm/oracle.hpp"
#include "fpm/solver.hpp"

namespace fpm {

enum class OutputFormat { kText, kJson };
enum class EdgeKind { kValid, kPopular, kLegal };

/// JSON: {"outcome", "matching": [[a,b],...], "witness": {v: alpha}, "size",
/// "trace": [...]}; "trace" appears only when asked for. Text lists the same
/// content in vertex-id order.
std::string format_solve_report(const Instance& inst, const SolveReport& report, OutputFormat format,
                                bool with_trace);

std::string format_edges(const Instance& inst, const EdgeClassification& c, EdgeKind kind, OutputFormat format);

std::string format_oracle_report(const Instance& inst, const OracleReport& r, OutputFormat format);

}  // namespace fpm
