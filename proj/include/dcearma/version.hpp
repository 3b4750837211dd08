#ifndef DCEARMA_VERSION_HPP
#define DCEARMA_VERSION_HPP

namespace dcearma {

inline constexpr const char* kVersion = "0.1.0";

} // namespace dcearma

#endif
