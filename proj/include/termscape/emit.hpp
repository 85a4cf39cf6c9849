#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace termscape {

enum class EmitMode { json, html };

// Self-contained page: the viewer script inlined and the payload in a
// <script type="application/json" id="termscape-payload"> block.
// viewer_bundle replaces the built-in viewer script when given.
std::string render_html(const nlohmann::json& payload, const std::optional<std::string>& viewer_bundle = std::nullopt);

// Throws Error with the path on I/O failure.
void emit(const nlohmann::json& payload,
          EmitMode mode,
          const std::filesystem::path& out,
          const std::optional<std::string>& viewer_bundle = std::nullopt);

// Script of the built-in viewer.
std::string_view builtin_viewer();

} // namespace termscape
