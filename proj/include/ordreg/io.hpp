#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordreg/data.hpp"
#include "ordreg/errors.hpp"
#include "ordreg/solver.hpp"
#include "ordreg/types.hpp"
#include "ordreg/version.hpp"

namespace ordreg {

// 17 significant digits round-trip any double exactly.
inline std::string format_g17(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

inline std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t hash = 0xcbf29ce484222325ull) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    hash ^= bytes[i];
    hash *= 0x100000001b3ull;
  }
  return hash;
}

inline std::uint64_t file_fnv1a64(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("file_fnv1a64: cannot open '" + path + "'");
  }
  std::uint64_t hash = 0xcbf29ce484222325ull;
  char buf[1 << 16];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    hash = fnv1a64(buf, static_cast<std::size_t>(in.gcount()), hash);
  }
  return hash;
}

template <typename Scalar>
std::string dataset_checksum(const Dataset<Scalar>& d) {
  std::uint64_t hash = fnv1a64(d.a.data(), sizeof(Scalar) * static_cast<std::size_t>(d.a.size()));
  hash = fnv1a64(d.b.data(), sizeof(Scalar) * static_cast<std::size_t>(d.b.size()), hash);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

namespace detail {

inline std::ofstream open_for_write(const std::string& path, const char* who) {
  std::ofstream out(path);
  if (!out) {
    throw IoError(std::string(who) + ": cannot open '" + path + "' for writing");
  }
  return out;
}

}  // namespace detail

template <typename Scalar>
void write_trace_csv(const std::string& path, const std::vector<TraceRecord<Scalar>>& trace) {
  auto out = detail::open_for_write(path, "write_trace_csv");
  out << "iter,r_norm,s_norm,eps_pri,eps_dual,objective\n";
  for (const auto& rec : trace) {
    out << rec.iter << ',' << format_g17(static_cast<double>(rec.r_norm)) << ','
        << format_g17(static_cast<double>(rec.s_norm)) << ',' << format_g17(static_cast<double>(rec.eps_pri))
        << ',' << format_g17(static_cast<double>(rec.eps_dual)) << ','
        << format_g17(static_cast<double>(rec.objective)) << '\n';
  }
}

template <typename Scalar>
void write_coefficients_csv(const std::string& path, const Vector<Scalar>& coefficients) {
  auto out = detail::open_for_write(path, "write_coefficients_csv");
  out << "coef\n";
  for (Index i = 0; i < coefficients.size(); ++i) {
    out << format_g17(static_cast<double>(coefficients[i])) << '\n';
  }
}

template <typename Scalar = double>
Vector<Scalar> read_coefficients_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("read_coefficients_csv: cannot open '" + path + "'");
  }
  std::string line;
  if (!std::getline(in, line) || line.rfind("coef", 0) != 0) {
    throw ParseError("read_coefficients_csv: missing 'coef' header", 1);
  }
  std::vector<Scalar> values;
  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    try {
      values.push_back(static_cast<Scalar>(std::stod(line)));
    } catch (const std::exception&) {
      throw ParseError("read_coefficients_csv: bad value '" + line + "'", line_no);
    }
  }
  Vector<Scalar> v(static_cast<Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    v[static_cast<Index>(i)] = values[i];
  }
  return v;
}

// Dataset CSV: header `b,a_1,...,a_p`, one row per observation.
template <typename Scalar>
void write_dataset_csv(const std::string& path, const Dataset<Scalar>& d) {
  auto out = detail::open_for_write(path, "write_dataset_csv");
  out << "b";
  for (Index j = 1; j <= d.p(); ++j) {
    out << ",a_" << j;
  }
  out << '\n';
  for (Index i = 0; i < d.n(); ++i) {
    out << format_g17(static_cast<double>(d.b[i]));
    for (Index j = 0; j < d.p(); ++j) {
      out << ',' << format_g17(static_cast<double>(d.a(i, j)));
    }
    out << '\n';
  }
}

template <typename Scalar = double>
Dataset<Scalar> load_dataset_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("load_dataset_csv: cannot open '" + path + "'");
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("load_dataset_csv: empty file", 1);
  }
  Index p = 0;
  {
    std::stringstream header(line);
    std::string field;
    if (!std::getline(header, field, ',') || field != "b") {
      throw ParseError("load_dataset_csv: header must start with 'b'", 1);
    }
    while (std::getline(header, field, ',')) {
      ++p;
    }
  }
  std::vector<std::vector<Scalar>> rows;
  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    std::vector<Scalar> row;
    row.reserve(static_cast<std::size_t>(p) + 1);
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      try {
        row.push_back(static_cast<Scalar>(std::stod(field)));
      } catch (const std::exception&) {
        throw ParseError("load_dataset_csv: bad value '" + field + "'", line_no);
      }
    }
    if (static_cast<Index>(row.size()) != p + 1) {
      throw ParseError("load_dataset_csv: expected " + std::to_string(p + 1) + " fields, got " +
                           std::to_string(row.size()),
                       line_no);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ParseError("load_dataset_csv: no data rows", line_no);
  }
  Dataset<Scalar> d;
  d.a.resize(static_cast<Index>(rows.size()), p);
  d.b.resize(static_cast<Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    d.b[static_cast<Index>(i)] = rows[i][0];
    for (Index j = 0; j < p; ++j) {
      d.a(static_cast<Index>(i), j) = rows[i][static_cast<std::size_t>(j) + 1];
    }
  }
  return d;
}

// Sequence CSV: k, the plain BH value, and the correction-scaled value.
inline void write_lambda_csv(const std::string& path, const Vector<double>& lambda_bh,
                             const Vector<double>& lambda) {
  auto out = detail::open_for_write(path, "write_lambda_csv");
  out << "k,lambda_bh,lambda\n";
  for (Index k = 0; k < lambda.size(); ++k) {
    out << (k + 1) << ',' << format_g17(lambda_bh[k]) << ',' << format_g17(lambda[k]) << '\n';
  }
}

template <typename Scalar>
nlohmann::json result_to_json(const FitResult<Scalar>& result, const std::string& lambda_spec,
                              const std::string& coefficients_path) {
  nlohmann::json j;
  j["converged"] = result.converged;
  j["iterations"] = result.iterations;
  j["wall_time_s"] = result.wall_time_s;
  j["nonzero_count"] = result.nonzero_count;
  j["lambda_spec"] = lambda_spec;
  j["coefficients_path"] = coefficients_path;
  return j;
}

inline void write_json(const std::string& path, const nlohmann::json& j) {
  auto out = detail::open_for_write(path, "write_json");
  out << j.dump(2) << '\n';
}

inline nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("read_json: cannot open '" + path + "'");
  }
  nlohmann::json j;
  in >> j;
  return j;
}

inline std::string iso8601_utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

// Run manifest: everything needed to reproduce a run within this
// implementation (command line, resolved configuration, seeds, input
// fingerprint).
class ManifestBuilder {
 public:
  ManifestBuilder(int argc, const char* const* argv) {
    j_["command"] = std::vector<std::string>(argv, argv + argc);
    j_["version"] = kVersion;
    j_["timestamp"] = iso8601_utc_now();
    j_["config"] = nlohmann::json::object();
    j_["seeds"] = nlohmann::json::object();
  }

  template <typename T>
  ManifestBuilder& config(const std::string& key, const T& value) {
    j_["config"][key] = value;
    return *this;
  }

  ManifestBuilder& seed(const std::string& key, std::uint64_t value) {
    j_["seeds"][key] = value;
    return *this;
  }

  template <typename Scalar>
  ManifestBuilder& dataset(const Dataset<Scalar>& d) {
    j_["dataset"] = {{"n", d.n()}, {"p", d.p()}, {"checksum", dataset_checksum(d)}};
    return *this;
  }

  ManifestBuilder& output(const std::string& key, const std::string& path) {
    j_["outputs"][key] = path;
    return *this;
  }

  const nlohmann::json& json() const { return j_; }
  void write(const std::string& path) const { write_json(path, j_); }

 private:
  nlohmann::json j_;
};

}  // namespace ordreg
