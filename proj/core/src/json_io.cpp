#include "symcone/json_io.hpp"

#include <cstdint>
#include <iomanip>
#include <limits>
#include <sstream>

namespace symcone {

nlohmann::json rational_to_json(const Rational& q) {
  if (is_integral(q)) {
    Integer n = numerator(q);
    // Stay within JSON's integer range where possible; huge values fall back
    // to the exact string form.
    if (n >= Integer(std::numeric_limits<std::int64_t>::min()) &&
        n <= Integer(std::numeric_limits<std::int64_t>::max()))
      return static_cast<std::int64_t>(n);
  }
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(Integer(s));
      Integer p(s.substr(0, slash)), q(s.substr(slash + 1));
      if (q == 0) throw std::runtime_error("zero denominator");
      return Rational(p, q);
    } catch (const std::exception&) {
      throw ParseError("invalid rational literal \"" + s + "\"", "value");
    }
  }
  throw ParseError("expected an integer or a \"p/q\" string", "value");
}

nlohmann::json vector_to_json(const QVector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(rational_to_json(v[i]));
  return a;
}

QVector vector_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expected an array of entries", "value");
  std::vector<Rational> entries;
  for (const auto& e : j) entries.push_back(rational_from_json(e));
  return QVector(std::move(entries));
}

nlohmann::json vectors_to_json(const std::vector<QVector>& vs) {
  nlohmann::json a = nlohmann::json::array();
  for (const QVector& v : vs) a.push_back(vector_to_json(v));
  return a;
}

namespace {

std::string line_col_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

ChainSpec parse_chain_spec(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON: " + std::string(e.what()),
                     line_col_of(text, e.byte));
  }
  if (!doc.is_object() || !doc.contains("r") || !doc.contains("generators"))
    throw ParseError("chain spec must be {\"r\": ..., \"generators\": ...}",
                     "document root");
  if (!doc["r"].is_number_integer() || doc["r"].get<std::int64_t>() < 1)
    throw ParseError("\"r\" must be a positive integer", "field r");
  ChainSpec spec;
  spec.r = doc["r"].get<std::size_t>();
  if (!doc["generators"].is_array())
    throw ParseError("\"generators\" must be an array of rows",
                     "field generators");
  std::size_t row = 0;
  for (const auto& jrow : doc["generators"]) {
    ++row;
    if (!jrow.is_array())
      throw ParseError("generator row must be an array",
                       "row " + std::to_string(row));
    std::vector<Rational> entries;
    std::size_t col = 0;
    for (const auto& e : jrow) {
      ++col;
      try {
        entries.push_back(rational_from_json(e));
      } catch (const ParseError& pe) {
        throw ParseError(pe.what(), "row " + std::to_string(row) +
                                        ", column " + std::to_string(col));
      }
    }
    if (entries.size() != spec.r)
      throw ParseError("generator row has " + std::to_string(entries.size()) +
                           " entries, expected r = " + std::to_string(spec.r),
                       "row " + std::to_string(row));
    spec.generators.push_back(QVector(std::move(entries)));
  }
  return spec;
}

std::string input_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a offset basis
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;  // FNV-1a prime
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace symcone
