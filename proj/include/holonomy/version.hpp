#ifndef HOLONOMY_VERSION_HPP
#define HOLONOMY_VERSION_HPP

namespace holonomy {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kCertificateSchema = 1;

}  // namespace holonomy

#endif
