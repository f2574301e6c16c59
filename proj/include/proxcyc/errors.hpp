#pragma once

#include <stdexcept>
#include <string>

namespace proxcyc {

/// Malformed instances, point sets, or files: wrong dimension, empty set,
/// unknown schema field, table shape mismatch.
struct instance_format_error : std::runtime_error {
  explicit instance_format_error(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid input outside an operation's documented range
/// (invalid contraction parameters, max_iter too small, gallery knobs).
struct parameter_error : std::runtime_error {
  explicit parameter_error(const std::string& what) : std::runtime_error(what) {}
};

/// (alpha, beta) lies in Delta but in none of Delta1..Delta4 while M2 > M1.
/// The scaling function phi has no defined value there, so the computation
/// refuses instead of guessing.
struct params_unsupported_error : std::runtime_error {
  explicit params_unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace proxcyc
