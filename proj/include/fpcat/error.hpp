#ifndef FPCAT_ERROR_HPP
#define FPCAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fpcat {

// caller bug: bad dimensions, mismatched rings, malformed input
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

// operation not supported by this category / ring
struct capability_error : std::runtime_error {
    explicit capability_error(const std::string& msg) : std::runtime_error(msg) {}
};

// a construction produced something that contradicts its own postcondition
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond)
        throw usage_error(msg);
}

inline void require_capability(bool cond, const std::string& msg) {
    if (!cond)
        throw capability_error(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond)
        throw internal_error(msg);
}

} // namespace fpcat

#endif
