#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "dspforge/canonical.hpp"
#include "dspforge/instance.hpp"

namespace dspforge {

inline constexpr std::string_view kInstanceSchema = "dspforge.instance/1";
inline constexpr std::string_view kSolutionSchema = "dspforge.solution/1";

/// Canonical JSON text: sorted keys, no whitespace, vertices in dense order.
std::string instance_to_json(const DspInstance& inst);
/// Throws ErrorCode::Schema on malformed documents.
DspInstance instance_from_json(std::string_view text);

std::string solution_to_json(const DspInstance& inst, const Solution& sol);
Solution solution_from_json(const DspInstance& inst, std::string_view text);

/// FNV-1a 64 over the canonical JSON, as 16 hex digits.
std::string fingerprint(const DspInstance& inst);
std::uint64_t fnv1a64(std::string_view bytes);

enum class ExportFormat { Dot, GraphML, Json };
ExportFormat parse_export_format(std::string_view text);  // throws ErrorCode::Parameter
std::string export_instance(const DspInstance& inst, ExportFormat format);

std::string to_string(VertexColor c);
std::string to_string(EdgeColor c);

}  // namespace dspforge
