#pragma once

// Curve files and report output. Matrices are JSON arrays of rows.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "fanning/curves.hpp"

namespace fanning {

using Json = nlohmann::ordered_json;

/// Throws ParseError on malformed input (including shape mismatches).
FrameCurve curve_from_json(const Json& doc);
FrameCurve load_curve(const std::string& path);

Json curve_to_json(const FrameCurve& curve);
void save_curve(const std::string& path, const FrameCurve& curve);

Matrix matrix_from_json(const Json& value, Index rows, Index cols, const std::string& what);
Json matrix_to_json(const Matrix& m);

/// "%.17g"; non-finite values become "nan", "inf" or "-inf".
std::string format_number(double x);

/// Pretty JSON with every floating-point number at 17 significant digits.
/// Non-finite numbers are written as null.
void write_json(std::ostream& out, const Json& doc);

/// Header line "t, name, i, j, value".
void write_csv_header(std::ostream& out);

/// One row per entry, row-major.
void write_csv_matrix(std::ostream& out, double t, const std::string& name, const Matrix& m);

}  // namespace fanning
