#include "symdiv/ingest.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "symdiv/error.hpp"

namespace symdiv {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

InputFormat resolve(std::string_view text, InputFormat format, const std::string& source) {
  if (format != InputFormat::Auto) return format;
  if (ends_with(source, ".json")) return InputFormat::Json;
  if (ends_with(source, ".csv")) return InputFormat::Csv;
  return trim(text).starts_with("[") ? InputFormat::Json : InputFormat::Csv;
}

std::vector<double> parse_json(std::string_view text, const std::string& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InvalidArgument, source + ": invalid JSON: " + e.what());
  }
  if (!doc.is_array()) {
    throw Error(ErrorKind::InvalidArgument, source + ": expected a JSON array of numbers");
  }
  std::vector<double> out;
  out.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_number()) {
      throw Error(ErrorKind::InvalidArgument,
                  source + ": atom " + std::to_string(i) + " is not a number");
    }
    out.push_back(doc[i].get<double>());
  }
  return out;
}

std::vector<double> parse_csv(std::string_view text, const std::string& source) {
  std::vector<double> out;
  bool first_line = true;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty()) continue;
    if (first_line && line == "weight") {
      first_line = false;
      continue;
    }
    first_line = false;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc() || ptr != line.data() + line.size()) {
      throw Error(ErrorKind::InvalidArgument, source + ": atom " + std::to_string(out.size()) +
                                                  " is not a number: '" + std::string(line) +
                                                  "'");
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace

InputFormat parse_input_format(std::string_view name) {
  if (name == "auto") return InputFormat::Auto;
  if (name == "json") return InputFormat::Json;
  if (name == "csv") return InputFormat::Csv;
  throw Error(ErrorKind::InvalidArgument, "unknown input format '" + std::string(name) + "'");
}

std::vector<double> parse_weights(std::string_view text, InputFormat format,
                                  const std::string& source_name) {
  return resolve(text, format, source_name) == InputFormat::Json ? parse_json(text, source_name)
                                                                 : parse_csv(text, source_name);
}

std::vector<double> read_weights(const std::string& path, InputFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_weights(buffer.str(), format, path);
}

ProbabilityDistribution load_distribution(const std::string& path, double smoothing_epsilon,
                                          InputFormat format) {
  const auto weights = read_weights(path, format);
  try {
    return normalize(weights, smoothing_epsilon);
  } catch (const Error& e) {
    std::string message = path + ": " + e.what();
    if (e.kind() == ErrorKind::ZeroWithNoSmoothing) message += " (--smooth EPS)";
    throw Error(e.kind(), message);
  }
}

}  // namespace symdiv
