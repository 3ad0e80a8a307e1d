#ifndef PERMSIMPLE_ERROR_HPP
#define PERMSIMPLE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace permsimple {

enum class Errc {
  empty_input,
  parse_error,
  not_a_bijection,
  degree_mismatch,
  run_out_of_range,
  not_standard_form,
  domain_error,
  bound_exceeded,
  not_b_simple,
  not_c_simple,
  not_g_simple,
  too_short,
  overflow,
  invariant_violation,
};

const char *errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
  { }

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

/// Raised when two independent routes disagree or a structural invariant
/// fails. The message names the invariant.
inline void ensure(bool condition, const std::string &invariant)
{
  if (!condition)
    throw Error(Errc::invariant_violation, invariant);
}

} // namespace permsimple

#endif
