#pragma once

#include <stdexcept>
#include <string>

namespace torarr {

enum class errc {
  wrong_length,
  zero_character,
  empty_character_list,
  inconsistent_constants,
  nested_atoms,
  not_comparable,
  empty_intersection,
  not_corank1,
  not_divisorial,
  degree_mixed,
  basis_defect,
  parse_error,
  unknown_command,
  invalid_argument,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace torarr
