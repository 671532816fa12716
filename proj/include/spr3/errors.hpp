#ifndef SPR3_ERRORS_HPP
#define SPR3_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spr3 {

// Error taxonomy mirrors the CLI exit codes: config 2, admissibility 3, numerical 4.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
    static constexpr int exit_code = 2;
};

struct admissibility_error : std::runtime_error {
    explicit admissibility_error(const std::string& what) : std::runtime_error(what) {}
    static constexpr int exit_code = 3;
};

struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
    static constexpr int exit_code = 4;
};

}  // namespace spr3

#endif
