#pragma once

#include <stdexcept>
#include <string>

namespace oyleaf {

// Error for malformed text encodings; `index` is the 0-based offending
// position in the input, or the input length for truncation errors.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::string msg, std::size_t index)
      : std::runtime_error(msg + " at index " + std::to_string(index)),
        index_(index) {}

  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Error for operations applied outside their domain (e.g. a bijection on
// the empty tree, a formula with out-of-range arguments).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace oyleaf
