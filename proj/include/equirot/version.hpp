#pragma once

namespace equirot {

inline constexpr const char* kLibraryVersion = "0.1.0";

}  // namespace equirot
