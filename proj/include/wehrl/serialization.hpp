#pragma once

#include <string>

#include <json.hpp>

#include "wehrl/conjectures.hpp"
#include "wehrl/spin_core.hpp"

namespace wehrl {

using OrderedJson = nlohmann::ordered_json;

/// {"two_j": int, "amplitudes": [[re, im], ...]} with m ascending.
OrderedJson state_to_json(const SpinState& u);
SpinState state_from_json(const nlohmann::json& doc);
SpinState state_from_text(const std::string& text);

OrderedJson scan_report_to_json(const ScanReport& report);
OrderedJson beta_report_to_json(const BetaScanReport& report);

/// Pretty-printed JSON with insertion-ordered keys and every float written
/// with 17 significant digits; non-finite numbers become null.
std::string dump_json(const OrderedJson& doc);

/// printf("%.17g") for CSV cells.
std::string format_double(double v);

/// Writes via a sibling temporary file and rename, so readers never see a
/// partial file.
void write_file_atomically(const std::string& path, const std::string& content);

}  // namespace wehrl
