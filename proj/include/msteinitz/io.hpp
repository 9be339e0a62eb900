// JSON and CSV formats used by the command-line tool.
//
// Instance:  {"d":D,"k":K,"n":N,"norm":{"kind":...,"facets":[[...],...]},
//             "entries":[[[coord, ...] x n] x k]}
// Report:    the RearrangementReport fields plus "instance_digest", the
//            SHA-256 of the instance's canonical JSON.
// Trace CSV: "m,prefix_norm" for m = 1..n.
//
// Doubles are written as the shortest decimal that round-trips.

#ifndef MSTEINITZ_IO_HPP
#define MSTEINITZ_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "msteinitz/instances.hpp"
#include "msteinitz/norms.hpp"
#include "msteinitz/transference.hpp"

namespace msteinitz::io {

using nlohmann::json;

json norm_to_json(const NormSpec& spec);
NormSpec norm_from_json(const json& j);

json instance_to_json(const Instance& inst);
Instance instance_from_json(const json& j);

/// "sha256:<hex>" of the canonical (key-sorted, compact) instance JSON.
std::string instance_digest(const Instance& inst);

json report_to_json(const RearrangementReport& report, const Instance& inst);
RearrangementReport report_from_json(const json& j);

std::string format_double(double x);

/// "m,prefix_norm" rows for m = 1..n of the given (already rearranged) matrix.
std::string prefix_trace_csv(const VectorMatrix& c, const NormSpec& spec);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
json read_json(const std::filesystem::path& path);

}  // namespace msteinitz::io

#endif  // MSTEINITZ_IO_HPP
