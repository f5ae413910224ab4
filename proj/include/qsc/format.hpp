#pragma once

#include <complex>
#include <string>

#include <json.hpp>

#include "qsc/cohclass.hpp"

namespace qsc {

/// Parse "[3,2,1]" (whitespace tolerated); "[]" is the empty partition.
Partition parse_partition(const std::string& text);

/// "p/q" for proper rationals, plain integer string otherwise.
std::string rational_str(const mpq_class& q);
mpq_class parse_rational(const std::string& text);

/// "a+bi" with a fixed number of significant digits.
std::string complex_str(std::complex<double> z, int precision = 12);

/// Class rendered as e.g. "S[2] + S[1,1]" or "S[2,2] - 2 S[]"; "0" when zero.
/// Terms appear in canonical basis order.
std::string class_str(const CohClass& a);

/// {"ctx":{"k":K,"n":N},"terms":[{"coeff":"p/q","partition":[...]},...]}
nlohmann::json class_json(const CohClass& a);
CohClass class_from_json(const nlohmann::json& j);

nlohmann::json complex_json(std::complex<double> z);

}  // namespace qsc
