#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "projkit/diagnostics.hpp"
#include "projkit/engine.hpp"

namespace projkit {

/// Writes the trace as three CSV files next to each other:
///   <stem>.csv      one row per half-step transition of the merged orbit:
///                   k,gap,step,cos_alpha,cos_beta with gap = ||z_k - z_{k+1}||,
///                   step = ||z_k - z_{k+2}|| (one full set-to-same-set move)
///                   and the angle cosines of the triple (z_k, z_{k+1}, z_{k+2});
///                   cells whose quantities are undefined stay empty
///   <stem>_a.csv    k,coord_0,...,coord_{n-1} over the a-iterates
///   <stem>_b.csv    the same over the b-iterates
/// Values are written with 17 significant digits, so doubles round-trip
/// bitwise. Writes are atomic (temp file + rename).
void write_trace(const std::filesystem::path& dir, const std::string& stem, const Trace& trace);

/// Reads a trace written by write_trace, given the main CSV path. The iterate
/// pairing is recovered from the sidecar lengths and gaps/steps/blocks are
/// rebuilt from the iterates; the main file's gap column must match the
/// rebuilt values bitwise or ConfigError is thrown. The run status is not
/// part of the serialized contract; loaded traces report max_iter.
Trace read_trace(const std::filesystem::path& main_csv);

/// Diagnostics report serialization: top-level keys "separability"
/// (array of {omega, gamma_hat, blocks_used}), "holder"
/// ({sigma, c, violations: [...]}) and "rate" ({kind, value, r2, window}),
/// each present only when the corresponding section is supplied.
struct DiagnosticsBundle {
    std::vector<SeparabilityEstimate> separability;
    std::optional<HolderReport> holder;
    std::optional<RateFit> rate;
};

std::string diagnostics_to_json(const DiagnosticsBundle& bundle);
void write_diagnostics(const std::filesystem::path& path, const DiagnosticsBundle& bundle);

/// Atomic text-file write (temp file then rename).
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace projkit
