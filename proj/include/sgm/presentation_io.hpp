// Line-oriented text formats for presentations and generating sets.
//
//   # comment
//   gens a b
//   rel a^-1 b^2 a b^-3
//
//   gen a b
//   gen a^-1 b^2 a b^-3
#pragma once

#include <filesystem>
#include <istream>
#include <memory>
#include <stdexcept>
#include <string>

#include "sgm/presentations.hpp"

namespace sgm {

class InputError : public std::runtime_error {
 public:
  InputError(std::string source, std::size_t line, std::size_t column,
             std::string const& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        _line(line),
        _column(column) {}
  std::size_t line() const noexcept { return _line; }
  std::size_t column() const noexcept { return _column; }

 private:
  std::size_t _line, _column;
};

Presentation read_presentation(std::istream& in,
                               std::string const& source = "<input>");
Presentation read_presentation_file(std::filesystem::path const& path);

GeneratingSet read_generating_set(std::istream& in,
                                  std::shared_ptr<Presentation const> p,
                                  std::string const& source = "<input>");
GeneratingSet read_generating_set_file(std::filesystem::path const& path,
                                       std::shared_ptr<Presentation const> p);

std::string format_presentation(Presentation const& p);
std::string format_generating_set(GeneratingSet const& s);

}  // namespace sgm
