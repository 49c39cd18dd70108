#pragma once

namespace gauge2d {

inline constexpr const char* kLibraryVersion = "0.1.0";
/// Version of the CSV column layout and the job-file schema.
inline constexpr const char* kFormatVersion = "1";

}  // namespace gauge2d
