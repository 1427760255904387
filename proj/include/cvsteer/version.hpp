#ifndef CVSTEER_VERSION_HPP
#define CVSTEER_VERSION_HPP

namespace cvsteer {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

}  // namespace cvsteer

#endif
