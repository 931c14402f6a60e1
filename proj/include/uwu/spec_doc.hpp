#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "uwu/filter_bank.hpp"

namespace uwu {

inline constexpr const char* kToolVersion = "0.1.0";

/// Serialized filter-bank document: family, parameter vector, derived taps,
/// chain gain/delay, tool metadata. JSON with sorted keys; identical inputs
/// produce byte-identical files.
struct SpecDocument {
    FilterBank bank;
    std::uint64_t seed = 42;
    std::string tool_version = kToolVersion;
};

void write_spec(const std::filesystem::path& path, const SpecDocument& doc);

/// Parse a document. With validate set, resynthesizes from the stored
/// parameters and requires every stored tap to agree within 1e-12
/// (throws "document-consistency check failed" otherwise).
SpecDocument read_spec(const std::filesystem::path& path, bool validate = true);

/// Max absolute tap mismatch between the stored filters and resynthesis
/// from the stored parameter vector.
double spec_consistency_deviation(const SpecDocument& doc);

}  // namespace uwu
