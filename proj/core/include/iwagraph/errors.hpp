#pragma once

#include <stdexcept>
#include <string>

namespace iwagraph {

// Malformed or out-of-contract input (unreadable file, bad schema, invalid
// graph, non-prime p, ...). The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Two independent computation routes disagreed on a quantity they must agree
// on exactly. Always a bug or a violated identity; the CLI maps this to exit
// code 1 and the message names both values.
class consistency_error : public std::runtime_error {
 public:
  explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace iwagraph
