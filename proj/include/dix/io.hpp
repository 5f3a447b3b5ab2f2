#pragma once

// JSON, CSV and LaTeX encodings of the library's result types. JSON
// encodings round-trip; rationals are written as strings "a" or "a/b".

#include <string>
#include <vector>

#include <json.hpp>

#include "dix/char_asymptotics.hpp"
#include "dix/dirac.hpp"
#include "dix/springer.hpp"
#include "dix/suites.hpp"

namespace dix::io {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Latex };
// "json", "csv" or "latex"; throws UnsupportedFormat.
Format parse_format(const std::string& name);

Json to_json(const Rational& r);
Json to_json(const Weight& w);
Json to_json(const MultiPoly& p);
Json to_json(const VirtualKModule& v);
Json to_json(const IndexFamily& f);
Json to_json(const LimitReport& r);
Json to_json(const springer::SpringerRow& row);
Json to_json(const SuiteReport& r);

// Inverses; throw ParseError on malformed input.
Rational rational_from_json(const Json& j);
Weight weight_from_json(const Json& j);
MultiPoly poly_from_json(const Json& j);
VirtualKModule virtual_from_json(const Json& j);
IndexFamily family_from_json(const Json& j);
LimitReport limit_from_json(const Json& j);
springer::SpringerRow springer_row_from_json(const Json& j);
SuiteReport suite_report_from_json(const Json& j);

// RFC 4180 field quoting and a matching line splitter.
std::string csv_field(const std::string& s);
std::vector<std::string> parse_csv_line(const std::string& line);

// "X_{1}^{2} - 2 X_{1} X_{2}"
std::string latex(const MultiPoly& p);
// "SO_{e}(4,5)", "Sp(4,\mathbb{R})", ...
std::string latex_group(const GroupId& g);

// Text for stdout. Formats an object has no encoding for throw
// UnsupportedFormat. CSV tables carry a header line; a single row does not.
// indent < 0 gives compact JSON.
std::string emit(const MultiPoly& p, Format f, int indent = -1);
std::string emit(const VirtualKModule& v, Format f, int indent = -1);
std::string emit(const IndexFamily& fam, Format f, int indent = -1);
std::string emit(const LimitReport& r, Format f, int indent = -1);
std::string emit(const springer::SpringerRow& row, Format f, int indent = -1);
std::string emit(const std::vector<springer::SpringerRow>& rows, Format f, int indent = -1);
std::string emit(const SuiteReport& r, Format f, int indent = -1);

}  // namespace dix::io
