#ifndef DCEARMA_MODEL_SPEC_HPP
#define DCEARMA_MODEL_SPEC_HPP

#include <string>

#include "dcearma/model.hpp"

namespace dcearma {

/// Plain-text key-value model file:
///
///   p = 1
///   q = 0
///   phi = -0.3333333333333333
///   theta =
///   alpha = 0.5
///   atoms = 0:1
///   continuous = gaussian:0:1      (or uniform:lo:hi)
///
/// Blank lines and lines starting with # are ignored. Throws ConfigError
/// with a line-numbered message on malformed input.
ArmaModel parse_model_string(const std::string& text);
ArmaModel load_model_file(const std::string& path);
std::string model_to_string(const ArmaModel& model);

} // namespace dcearma

#endif
