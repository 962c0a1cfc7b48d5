#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lukeff {

enum class Errc {
  invalid_argument,
  chain_mismatch,
  index_out_of_range,
  out_of_unit_interval,
  not_an_algebra,
  syntax_error,
  unknown_player,
  dialect_violation,
  unknown_proposition,
  budget_exceeded,
  empty_profile_set,
  not_playable_input,
  not_homogeneous,
  not_truly_playable,
  synthesis_budget_exceeded,
  not_playable,
  not_standard,
  premise_violated,
  bad_document,
};

std::string_view to_string(Errc code);

/// Every recoverable failure of the library surfaces as an Error carrying
/// one of the codes above. Internal invariant breaks throw std::logic_error.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(Errc::syntax_error, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace lukeff
