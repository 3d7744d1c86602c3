#pragma once

// Polynomial coefficient tables for the closed forms of I_A, I_B + I_C and
// I_D. Each coefficient is a bivariate integer polynomial in (m, alpha),
// stored as monomial rows `table coeff m_pow a_pow value` with an FNV-1a
// checksum over the rows. The text is embedded at build time; see
// tools/expand_tables.py.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bures/detail/coefficient_data.hpp"
#include "bures/error.hpp"

namespace bures {

using rational = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;

enum class TableId { IA, IBC, ID };

inline std::string_view to_string(TableId t) {
  switch (t) {
    case TableId::IA: return "IA";
    case TableId::IBC: return "IBC";
    case TableId::ID: return "ID";
  }
  return "?";
}

struct Monomial {
  int m_pow = 0;
  int a_pow = 0;
  std::int64_t value = 0;
};

struct CoefficientTable {
  TableId table_id = TableId::IA;
  std::map<std::string, std::vector<Monomial>> entries;
};

namespace detail {

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct ParsedTables {
  CoefficientTable ia{TableId::IA, {}};
  CoefficientTable ibc{TableId::IBC, {}};
  CoefficientTable id{TableId::ID, {}};
};

inline ParsedTables parse_coefficient_text(std::string_view text) {
  ParsedTables out;
  std::string body;
  std::optional<std::uint64_t> expected;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string table, name;
    row >> table >> name;
    if (table == "checksum") {
      std::string hex;
      row >> hex;
      if (name != "fnv1a64" || hex.empty()) throw data_error("coefficients: malformed checksum line");
      expected = std::stoull(hex, nullptr, 16);
      continue;
    }
    if (expected) throw data_error("coefficients: rows after checksum line");
    Monomial mono;
    if (!(row >> mono.m_pow >> mono.a_pow >> mono.value)) {
      throw data_error("coefficients: malformed row: " + line);
    }
    CoefficientTable* t = table == "IA" ? &out.ia : table == "IBC" ? &out.ibc : table == "ID" ? &out.id : nullptr;
    if (!t) throw data_error("coefficients: unknown table " + table);
    t->entries[name].push_back(mono);
    body += line;
    body += '\n';
  }
  if (!expected) throw data_error("coefficients: missing checksum");
  if (fnv1a64(body) != *expected) throw data_error("coefficients: checksum mismatch");
  if (out.ia.entries.size() != 8 || out.ibc.entries.size() != 12 || out.id.entries.size() != 7) {
    throw data_error("coefficients: unexpected entry counts");
  }
  return out;
}

inline const ParsedTables& tables() {
  static const ParsedTables t = parse_coefficient_text(kCoefficientText);
  return t;
}

// alpha = p / 2^k exactly, for k <= 20.
inline std::optional<rational> dyadic(double alpha) {
  double scaled = alpha;
  for (int k = 0; k <= 20; ++k) {
    if (scaled == std::floor(scaled) && std::fabs(scaled) < 9e15) {
      return rational(static_cast<std::int64_t>(scaled)) / rational(bigint(1) << k);
    }
    scaled *= 2.0;
  }
  return std::nullopt;
}

inline const std::vector<Monomial>& find_entry(const CoefficientTable& t, const std::string& name) {
  const auto it = t.entries.find(name);
  if (it == t.entries.end()) {
    throw lookup_error("coefficient " + name + " not in table " + std::string(to_string(t.table_id)));
  }
  return it->second;
}

}  // namespace detail

inline const CoefficientTable& coefficient_table(TableId id) {
  const auto& t = detail::tables();
  switch (id) {
    case TableId::IA: return t.ia;
    case TableId::IBC: return t.ibc;
    case TableId::ID: return t.id;
  }
  return t.ia;
}

inline rational eval_coefficient_exact(const CoefficientTable& t, const std::string& name, int m,
                                       const rational& alpha) {
  rational acc = 0;
  for (const Monomial& mono : detail::find_entry(t, name)) {
    rational term = rational(boost::multiprecision::pow(bigint(m), static_cast<unsigned>(mono.m_pow)) * mono.value);
    for (int i = 0; i < mono.a_pow; ++i) term *= alpha;
    acc += term;
  }
  return acc;
}

// Floating evaluation; Z may be real or complex.
template <class Z>
Z eval_coefficient_as(const CoefficientTable& t, const std::string& name, int m, Z alpha) {
  Z acc = Z(0);
  for (const Monomial& mono : detail::find_entry(t, name)) {
    Z term = Z(static_cast<long double>(mono.value));
    for (int i = 0; i < mono.m_pow; ++i) term *= Z(static_cast<long double>(m));
    for (int i = 0; i < mono.a_pow; ++i) term *= alpha;
    acc += term;
  }
  return acc;
}

// Exact when alpha is a dyadic rational (covers every half-integer), rounded
// once at the end; floating evaluation otherwise.
template <class T = double>
T eval_coefficient(const CoefficientTable& t, const std::string& name, int m, double alpha) {
  if (const auto q = detail::dyadic(alpha)) {
    return eval_coefficient_exact(t, name, m, *q).template convert_to<T>();
  }
  return eval_coefficient_as<T>(t, name, m, static_cast<T>(alpha));
}

}  // namespace bures
