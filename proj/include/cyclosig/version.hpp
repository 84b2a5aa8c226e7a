#pragma once

namespace cyclosig {

// Single source of truth for the toolkit version. The survey cache is keyed
// by this string, so bump it whenever a formula or matrix convention changes.
inline constexpr const char* kToolkitVersion = "0.1.0";

}  // namespace cyclosig
