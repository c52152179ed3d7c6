#ifndef WELLHEAT_ERRORS_HPP
#define WELLHEAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wellheat {

/** Invalid, missing or inconsistent configuration input. */
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/** Numerical failure: CFL refusal, non-finite values, divergent solve. */
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

/** Filesystem or output failure. */
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace wellheat

#endif
