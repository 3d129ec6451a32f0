#include "fanning/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "fanning/errors.hpp"

namespace fanning {

namespace {

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ParseError(std::string("curve file: missing field \"") + key + "\"");
  }
  return doc.at(key);
}

int int_field(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_number_integer()) throw ParseError(std::string("curve file: \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<Matrix> matrix_list(const Json& value, Index rows, Index cols, const std::string& what) {
  if (!value.is_array() || value.empty()) throw ParseError(what + " must be a non-empty array of matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(matrix_from_json(value[i], rows, cols, what + "[" + std::to_string(i) + "]"));
  }
  return out;
}

void write_value(std::ostream& out, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out << ",\n";
        first = false;
        out << pad << Json(key).dump() << ": ";
        write_value(out, item, indent + 2);
      }
      out << "\n" << close << "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out << "[]";
        return;
      }
      // Arrays of scalars stay on one line so matrices read as rows.
      bool flat = true;
      for (const auto& item : v) flat = flat && !item.is_structured();
      if (flat) {
        out << "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) out << ", ";
          write_value(out, v[i], indent);
        }
        out << "]";
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",\n";
        out << pad;
        write_value(out, v[i], indent + 2);
      }
      out << "\n" << close << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = v.get<double>();
      if (std::isfinite(x)) {
        out << format_number(x);
      } else {
        out << "null";
      }
      return;
    }
    default:
      out << v.dump();
  }
}

}  // namespace

Matrix matrix_from_json(const Json& value, Index rows, Index cols, const std::string& what) {
  if (!value.is_array() || static_cast<Index>(value.size()) != rows) {
    throw ParseError(what + ": expected " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = value[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw ParseError(what + ": row " + std::to_string(r) + " must have " + std::to_string(cols) +
                       " entries");
    }
    for (Index c = 0; c < cols; ++c) {
      const Json& x = row[static_cast<std::size_t>(c)];
      if (!x.is_number()) throw ParseError(what + ": non-numeric entry");
      m(r, c) = x.get<double>();
    }
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

FrameCurve curve_from_json(const Json& doc) {
  const Json& kind = field(doc, "kind");
  if (!kind.is_string()) throw ParseError("curve file: \"kind\" must be a string");
  const int k = int_field(doc, "k");
  const int n = int_field(doc, "n");
  if (k < 2 || n < 1) throw ParseError("curve file: need k >= 2 and n >= 1");
  const Index dim = static_cast<Index>(k) * n;
  try {
    if (kind == "polynomial") {
      return PolynomialFrameCurve(k, n, matrix_list(field(doc, "coefficients"), dim, n, "coefficients"));
    }
    if (kind == "ode") {
      const Json& p = field(doc, "P");
      if (!p.is_array() || static_cast<int>(p.size()) != k) {
        throw ParseError("curve file: \"P\" must list P_1..P_k");
      }
      std::vector<PolynomialMatrix> coeffs;
      for (std::size_t i = 0; i < p.size(); ++i) {
        const std::string what = "P[" + std::to_string(i) + "]";
        const int degree = int_field(p[i], "degree");
        auto list = matrix_list(field(p[i], "coefficients"), n, n, what + ".coefficients");
        if (static_cast<int>(list.size()) != degree + 1) {
          throw ParseError(what + ": degree " + std::to_string(degree) + " needs " +
                           std::to_string(degree + 1) + " coefficients");
        }
        coeffs.emplace_back(n, n, std::move(list));
      }
      return OdeFrameCurve(k, n, std::move(coeffs), matrix_from_json(field(doc, "A0"), dim, dim, "A0"));
    }
  } catch (const ShapeError& e) {
    throw ParseError(std::string("curve file: ") + e.what());
  }
  throw ParseError("curve file: unknown kind \"" + kind.get<std::string>() + "\"");
}

FrameCurve load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open curve file " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return curve_from_json(doc);
}

Json curve_to_json(const FrameCurve& curve) {
  Json doc;
  if (const auto* poly = std::get_if<PolynomialFrameCurve>(&curve)) {
    doc["kind"] = "polynomial";
    doc["k"] = poly->k();
    doc["n"] = poly->n();
    Json list = Json::array();
    for (const auto& c : poly->polynomial().coefficients()) list.push_back(matrix_to_json(c));
    doc["coefficients"] = std::move(list);
    return doc;
  }
  const auto& ode = std::get<OdeFrameCurve>(curve);
  doc["kind"] = "ode";
  doc["k"] = ode.k();
  doc["n"] = ode.n();
  Json p = Json::array();
  for (const auto& pi : ode.coefficients()) {
    Json entry;
    entry["degree"] = pi.degree();
    Json list = Json::array();
    for (const auto& c : pi.coefficients()) list.push_back(matrix_to_json(c));
    entry["coefficients"] = std::move(list);
    p.push_back(std::move(entry));
  }
  doc["P"] = std::move(p);
  doc["A0"] = matrix_to_json(ode.initial());
  return doc;
}

void save_curve(const std::string& path, const FrameCurve& curve) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_json(out, curve_to_json(curve));
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_json(std::ostream& out, const Json& doc) {
  write_value(out, doc, 0);
  out << "\n";
}

void write_csv_header(std::ostream& out) { out << "t, name, i, j, value\n"; }

void write_csv_matrix(std::ostream& out, double t, const std::string& name, const Matrix& m) {
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      out << format_number(t) << ", " << name << ", " << r << ", " << c << ", " << format_number(m(r, c))
          << "\n";
    }
  }
}

}  // namespace fanning
