#pragma once

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "symcone/chain.hpp"
#include "symcone/qvector.hpp"

namespace symcone {

// Malformed chain-spec input; `where` pinpoints the offending row/column of
// the generator matrix or the line/column of a JSON syntax error.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, const std::string& where)
      : std::runtime_error(what + " (" + where + ")"), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Exact serialization: integers bare, non-integers as reduced "p/q" strings
// with q > 0.
nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const QVector& v);
QVector vector_from_json(const nlohmann::json& j);
nlohmann::json vectors_to_json(const std::vector<QVector>& vs);

// Parse {"r": integer, "generators": [[entry, ...], ...]}.
ChainSpec parse_chain_spec(const std::string& text);

// FNV-1a 64-bit digest of the exact input bytes, as 16 hex characters.
std::string input_digest(const std::string& bytes);

}  // namespace symcone
