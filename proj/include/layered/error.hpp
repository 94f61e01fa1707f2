#ifndef LAYERED_ERROR_HPP
#define LAYERED_ERROR_HPP

#include <stdexcept>
#include <string>

namespace layered {

// Domain error codes. Every throwing operation in the library reports one of
// these; the CLI maps them to exit code 65.
enum class Errc {
    zero_input,
    overflow,
    budget_exceeded,
    duplicate_item,
    target_out_of_range,
    unreachable,
    not_in_class,
    not_coprime,
    not_prime,
    odd_alpha,
    odd_input,
    length_mismatch,
    unknown_prop,
    soundness_alarm,
    invalid_argument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

} // namespace layered

#endif
