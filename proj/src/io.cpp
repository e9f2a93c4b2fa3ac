#include "bym/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace bym {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Matrix matrix_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("dim").get<Eigen::Index>();
    if (n < 1) throw Error(ErrorKind::ParseError, "matrix dim must be >= 1");
    const auto& entries = j.at("entries");
    if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != n)
      throw Error(ErrorKind::ParseError, "entries must hold dim rows");
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& row = entries.at(i);
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
        throw Error(ErrorKind::ParseError, "each row must hold dim entries");
      for (Eigen::Index k = 0; k < n; ++k) {
        const auto& cell = row.at(k);
        if (!cell.is_array() || cell.size() != 2)
          throw Error(ErrorKind::ParseError, "each entry must be a [re, im] pair");
        m(i, k) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
      }
    }
    if (!m.allFinite())
      throw Error(ErrorKind::ParseError, "matrix entries must be finite");
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    entries.push_back(std::move(row));
  }
  return nlohmann::json{{"dim", m.rows()}, {"entries", std::move(entries)}};
}

std::string write_matrix(const Matrix& m) {
  std::string out = "{\"dim\":" + std::to_string(m.rows()) + ",\"entries\":[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) out += ',';
    out += '[';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += '[';
      out += format_double(m(i, j).real());
      out += ',';
      out += format_double(m(i, j).imag());
      out += ']';
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

Matrix parse_matrix(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return matrix_from_json(j);
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

void write_matrix_file(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  out << write_matrix(m);
}

std::vector<DensityMatrix> read_curve_file(const std::filesystem::path& path,
                                           bool normalized) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!j.is_array() || j.empty())
    throw Error(ErrorKind::ParseError, "curve file must be a non-empty JSON array");
  std::vector<DensityMatrix> curve;
  curve.reserve(j.size());
  for (const auto& item : j) curve.emplace_back(matrix_from_json(item), normalized);
  return curve;
}

nlohmann::ordered_json report_to_json(const YmReport& report) {
  nlohmann::ordered_json j;
  j["dim"] = report.dim;
  j["seed"] = report.seed;
  j["normalized"] = report.normalized;
  j["samples"] = report.samples;
  j["max_residual"] = report.max_residual;
  j["scale"] = report.scale;
  j["tolerance"] = report.tolerance;
  j["passed"] = report.passed;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& p : report.per_probe) {
    nlohmann::ordered_json row;
    row["sample"] = p.sample;
    row["probe"] = p.probe;
    row["residual"] = p.residual;
    row["scale"] = p.scale;
    rows.push_back(std::move(row));
  }
  j["per_probe"] = std::move(rows);
  return j;
}

std::string report_to_csv(const YmReport& report) {
  std::string out = "dim,seed,sample,probe_id,residual,scale\n";
  for (const auto& p : report.per_probe) {
    out += std::to_string(report.dim);
    out += ',';
    out += std::to_string(report.seed);
    out += ',';
    out += std::to_string(p.sample);
    out += ',';
    out += p.probe;
    out += ',';
    out += format_double(p.residual);
    out += ',';
    out += format_double(p.scale);
    out += '\n';
  }
  return out;
}

}  // namespace bym
