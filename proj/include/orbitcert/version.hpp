#ifndef ORBITCERT_VERSION_HPP
#define ORBITCERT_VERSION_HPP

namespace orbitcert {

inline constexpr const char* kToolName = "orbitcert";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace orbitcert

#endif
