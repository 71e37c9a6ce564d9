#ifndef MOMENTCARA_ERROR_HPP
#define MOMENTCARA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace momentcara {

// Every domain failure carries a short machine-readable code next to the
// human-readable message.  The CLI maps any Error to exit code 1 and prints
// the code, so tests and scripts can dispatch on it.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* invalid_argument = "invalid_argument";
inline constexpr const char* gcd_not_one = "gcd_not_one";
inline constexpr const char* enumeration_limit = "enumeration_limit";
inline constexpr const char* out_of_regime = "out_of_regime";
inline constexpr const char* grid_cap = "grid_cap";
inline constexpr const char* singular_system = "singular_system";
inline constexpr const char* degree_overflow = "degree_overflow";
inline constexpr const char* parse_error = "parse_error";
inline constexpr const char* stream_exhausted = "stream_exhausted";
inline constexpr const char* nonpositive_weight = "nonpositive_weight";
inline constexpr const char* ill_conditioned = "ill_conditioned";
inline constexpr const char* no_convergence = "no_convergence";
inline constexpr const char* io_error = "io_error";
} // namespace errc

} // namespace momentcara

#endif // MOMENTCARA_ERROR_HPP
