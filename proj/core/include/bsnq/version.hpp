#ifndef BSNQ_VERSION_HPP
#define BSNQ_VERSION_HPP

namespace bsnq {

inline constexpr const char* kToolVersion = "0.1.0";

}

#endif
