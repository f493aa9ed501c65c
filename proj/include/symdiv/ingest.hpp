#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symdiv/distribution.hpp"

namespace symdiv {

enum class InputFormat { Auto, Json, Csv };

/// Parses "auto", "json" or "csv"; throws InvalidArgument otherwise.
InputFormat parse_input_format(std::string_view name);

/// Raw weights from a JSON array (`[1, 2, 3]`) or a CSV file with one
/// number per line and an optional `weight` header. Auto picks the format
/// from the extension and falls back to sniffing the first character.
///
/// Errors are symdiv::Error whose message starts with the file name and,
/// where one exists, names the offending atom index.
std::vector<double> read_weights(const std::string& path, InputFormat format = InputFormat::Auto);
std::vector<double> parse_weights(std::string_view text, InputFormat format,
                                  const std::string& source_name);

/// read_weights followed by normalize(), with errors tagged by file name.
ProbabilityDistribution load_distribution(const std::string& path, double smoothing_epsilon,
                                          InputFormat format = InputFormat::Auto);

}  // namespace symdiv
