#pragma once

#include <iosfwd>

#include "nlse/run_config.hpp"

namespace nlse {

/// Runs one command: data goes to `out`, warnings to `diag`. Errors are
/// thrown (ParseError, EmptyInputError, ItemSetMismatch, ...); the CLI maps
/// them to a nonzero exit.
void run_command(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

void run_rank(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
void run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
void run_threshold(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
void run_states(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
void run_compare(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

}  // namespace nlse
