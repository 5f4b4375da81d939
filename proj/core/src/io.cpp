#include "effvec/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "effvec/error.hpp"
#include "json.hpp"

namespace effvec {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorKind::ParseError, what);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Decimal as mantissa * 10^exponent, when the digits fit in 64 bits.
struct ExactDecimal {
  bool negative = false;
  std::uint64_t mantissa = 0;
  int exponent = 0;
};

std::optional<ExactDecimal> exact_decimal(std::string_view s) {
  ExactDecimal d;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) d.negative = s[i++] == '-';
  bool any_digit = false;
  bool overflow = false;
  auto push_digit = [&](char c) {
    any_digit = true;
    if (d.mantissa > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) {
      overflow = true;
      return;
    }
    d.mantissa = d.mantissa * 10 + static_cast<std::uint64_t>(c - '0');
  };
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) push_digit(s[i++]);
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      push_digit(s[i++]);
      --d.exponent;
    }
  }
  if (!any_digit) return std::nullopt;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    int e = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), e);
    if (ec != std::errc{} || ptr == s.data() + i) return std::nullopt;
    i = static_cast<std::size_t>(ptr - s.data());
    d.exponent += e;
  }
  if (i != s.size() || overflow) return std::nullopt;
  return d;
}

double parse_decimal(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    parse_error("not a number: '" + std::string(s) + "'");
  }
  return x;
}

// mantissa * 10^shift as an integer below 2^53, if it is one.
std::optional<std::uint64_t> scaled_integer(std::uint64_t mantissa, int shift) {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 53;
  std::uint64_t v = mantissa;
  for (int k = 0; k < shift; ++k) {
    if (v > kLimit / 10) return std::nullopt;
    v *= 10;
  }
  if (v >= kLimit) return std::nullopt;
  return v;
}

std::optional<double> exact_fraction(std::string_view p, std::string_view q) {
  const auto num = exact_decimal(p);
  const auto den = exact_decimal(q);
  if (!num || !den) return std::nullopt;
  // (mp 10^ep) / (mq 10^eq): move the exponents onto integers first.
  const int lowest = std::min(num->exponent, den->exponent);
  const auto ip = scaled_integer(num->mantissa, num->exponent - lowest);
  const auto iq = scaled_integer(den->mantissa, den->exponent - lowest);
  if (!ip || !iq || *iq == 0) return std::nullopt;
  const double v = static_cast<double>(*ip) / static_cast<double>(*iq);
  return num->negative != den->negative ? -v : v;
}

double json_number(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_number(v.get<std::string>());
  parse_error("expected a number or fraction string, got " + v.dump());
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
}

// Rounds to `digits` significant digits so the JSON writer prints it short.
double rounded(double x, int digits) {
  if (digits >= 17 || !std::isfinite(x)) return x;
  return std::strtod(format_number(x, digits).c_str(), nullptr);
}

}  // namespace

double parse_number(std::string_view token) {
  token = trim(token);
  if (token.empty()) parse_error("empty value");
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return parse_decimal(token);
  const auto p = trim(token.substr(0, slash));
  const auto q = trim(token.substr(slash + 1));
  if (p.empty() || q.empty() || q.find('/') != std::string_view::npos) {
    parse_error("malformed fraction: '" + std::string(token) + "'");
  }
  if (auto exact = exact_fraction(p, q)) return *exact;
  const double den = parse_decimal(q);
  if (den == 0.0) parse_error("zero denominator in '" + std::string(token) + "'");
  return parse_decimal(p) / den;
}

RawMatrix parse_matrix_csv(std::string_view text) {
  RawMatrix rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::vector<double> row;
    while (true) {
      const auto comma = line.find(',');
      try {
        row.push_back(parse_number(line.substr(0, comma)));
      } catch (const Error& e) {
        parse_error("line " + std::to_string(line_no) + ": " + e.what());
      }
      if (comma == std::string_view::npos) break;
      line = line.substr(comma + 1);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) parse_error("no matrix rows found");
  return rows;
}

RawMatrix parse_matrix_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
    parse_error("matrix JSON needs an \"entries\" array");
  }
  RawMatrix rows;
  for (const auto& r : doc["entries"]) {
    if (!r.is_array()) parse_error("each matrix row must be an array");
    std::vector<double> row;
    for (const auto& v : r) row.push_back(json_number(v));
    rows.push_back(std::move(row));
  }
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 0 ||
        static_cast<std::size_t>(doc["n"].get<long long>()) != rows.size()) {
      throw Error(ErrorKind::NotSquare, "\"n\" does not match the number of rows");
    }
  }
  return rows;
}

PriorityVector parse_vector_list(std::string_view text) {
  std::vector<double> w;
  text = trim(text);
  if (text.empty()) parse_error("empty vector");
  while (true) {
    const auto comma = text.find(',');
    w.push_back(parse_number(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return PriorityVector(std::move(w));
}

PriorityVector parse_vector_json(std::string_view text) {
  const json doc = parse_json(text);
  const json* arr = &doc;
  if (doc.is_object()) {
    if (!doc.contains("weights")) parse_error("vector JSON needs a \"weights\" array");
    arr = &doc["weights"];
  }
  if (!arr->is_array()) parse_error("weights must be an array");
  std::vector<double> w;
  for (const auto& v : *arr) w.push_back(json_number(v));
  return PriorityVector(std::move(w));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PCMatrix read_matrix_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  if (path.extension() == ".json") return validate_pc(parse_matrix_json(text));
  return validate_pc(parse_matrix_csv(text));
}

std::string format_number(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string matrix_to_csv(const PCMatrix& a, int digits) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j) out += ',';
      out += format_number(a(i, j), digits);
    }
    out += '\n';
  }
  return out;
}

std::string matrix_to_json(const PCMatrix& a, int digits) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.size(); ++j) row.push_back(rounded(a(i, j), digits));
    rows.push_back(std::move(row));
  }
  return json{{"n", a.size()}, {"entries", std::move(rows)}}.dump();
}

std::string vector_to_json(const PriorityVector& w, int digits) {
  json arr = json::array();
  for (double x : w) arr.push_back(rounded(x, digits));
  return json{{"weights", std::move(arr)}}.dump();
}

}  // namespace effvec
