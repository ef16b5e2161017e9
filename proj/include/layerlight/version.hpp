#pragma once

namespace layerlight {

inline constexpr const char* kVersion = "0.1.0";

// Bumped when the on-disk layout of the corresponding artifact changes.
inline constexpr int kCheckpointFormatVersion = 1;
inline constexpr int kManifestFormatVersion = 1;
inline constexpr int kReportSchemaVersion = 1;

}  // namespace layerlight
