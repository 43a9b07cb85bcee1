#pragma once

#include "flataffine/catalog.hpp"

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>

namespace flataffine {

/// Raised on malformed AlgebraFile input; the message carries the line number.
class AlgebraFileError : public std::runtime_error {
public:
    AlgebraFileError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_ = 0;
};

// Line-oriented UTF-8 text, `#` starts a comment, keys are:
//   name <token>
//   dim <n>
//   basis <label_0> ... <label_{n-1}>
//   bracket i j k p/q        (i < j only; [e_i,e_j] has e_k coefficient p/q)
//   product i j k p/q        (e_i e_j has e_k coefficient p/q)
//   form <name> symmetric|antisymmetric|general   followed by n rows of n rationals
//   bivector                                      followed by n rows of n rationals
// `dim` and `basis` must precede all entry lines; unknown keys are rejected.
catalog::Entry parse_algebra_file(std::istream& in);
catalog::Entry parse_algebra_file_text(const std::string& text);
catalog::Entry load_algebra_file(const std::filesystem::path& path);

std::string write_algebra_file(const catalog::Entry& entry);
void save_algebra_file(const catalog::Entry& entry, const std::filesystem::path& path);

} // namespace flataffine
