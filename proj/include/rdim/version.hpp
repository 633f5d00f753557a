#ifndef RDIM_VERSION_HPP
#define RDIM_VERSION_HPP

namespace rdim {

inline constexpr const char* kToolName = "rdim-lab";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace rdim

#endif
