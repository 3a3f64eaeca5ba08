#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ordreg/errors.hpp"
#include "ordreg/random.hpp"
#include "ordreg/types.hpp"

namespace ordreg {

template <typename Scalar>
struct Dataset {
  Matrix<Scalar> a;
  Vector<Scalar> b;
  std::vector<std::string> feature_names;  // may be empty
  bool normalized = false;

  Index n() const { return a.rows(); }
  Index p() const { return a.cols(); }
};

template <typename Scalar>
struct SynthSpec {
  Index n = 0;
  Index p = 0;
  Scalar coef_variance = Scalar(0.02);
  Scalar noise_variance = Scalar(1e-3);
  std::uint64_t seed = 0;

  void validate() const {
    if (n < 1 || p < 1) {
      throw OutOfDomain("SynthSpec: n and p must be >= 1");
    }
    if (coef_variance < Scalar(0) || noise_variance < Scalar(0)) {
      throw OutOfDomain("SynthSpec: variances must be non-negative");
    }
  }
};

struct SplitSpec {
  Index train_n = 0;
  std::uint64_t seed = 0;
  bool stratified = false;  // proportional per-label allocation
};

// Scales every column to unit l2 norm. A zero column cannot be normalized.
template <typename Scalar>
Dataset<Scalar> normalize_columns(Dataset<Scalar> d) {
  for (Index j = 0; j < d.p(); ++j) {
    const Scalar norm = d.a.col(j).norm();
    if (norm <= Scalar(0)) {
      throw OutOfDomain("normalize_columns: column " + std::to_string(j + 1) + " is all zero");
    }
    d.a.col(j) /= norm;
  }
  d.normalized = true;
  return d;
}

template <typename Scalar>
struct SyntheticData {
  Dataset<Scalar> data;
  Vector<Scalar> true_coefficients;
};

// Gaussian design with unit-norm columns, Gaussian coefficients, additive
// Gaussian noise. Draw order is fixed: A column by column, then the
// coefficients, then the noise; variances are N(mean, sigma^2) parameters.
template <typename Scalar>
SyntheticData<Scalar> generate_synthetic(const SynthSpec<Scalar>& spec) {
  spec.validate();
  GaussianSampler rng(spec.seed);
  SyntheticData<Scalar> out;
  out.data.a.resize(spec.n, spec.p);
  for (Index j = 0; j < spec.p; ++j) {
    for (Index i = 0; i < spec.n; ++i) {
      out.data.a(i, j) = static_cast<Scalar>(rng.normal());
    }
  }
  out.data = normalize_columns(std::move(out.data));
  const Scalar coef_sd = std::sqrt(spec.coef_variance);
  out.true_coefficients.resize(spec.p);
  for (Index j = 0; j < spec.p; ++j) {
    out.true_coefficients[j] = static_cast<Scalar>(rng.normal()) * coef_sd;
  }
  const Scalar noise_sd = std::sqrt(spec.noise_variance);
  Vector<Scalar> noise(spec.n);
  for (Index i = 0; i < spec.n; ++i) {
    noise[i] = static_cast<Scalar>(rng.normal()) * noise_sd;
  }
  out.data.b = out.data.a * out.true_coefficients + noise;
  return out;
}

namespace detail {

inline bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

inline double parse_double(const char* first, const char* last, long line_no, const char* what) {
  double value;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(std::string("load_libsvm: bad ") + what + " token '" + std::string(first, last) + "'",
                     line_no);
  }
  return value;
}

}  // namespace detail

// Reads `label index:value ...` rows with 1-based strictly ascending
// indices into a dense matrix; absent indices are zero. The feature count
// is the largest index seen unless p_override is given.
template <typename Scalar>
Dataset<Scalar> load_libsvm(const std::string& path, Index p_override = 0) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("load_libsvm: cannot open '" + path + "'");
  }
  struct Entry {
    Index row;
    Index col;
    Scalar value;
  };
  std::vector<Entry> entries;
  std::vector<Scalar> labels;
  Index max_index = 0;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_blank(line)) {
      continue;
    }
    const char* cursor = line.data();
    const char* end = line.data() + line.size();
    while (cursor < end && (*cursor == ' ' || *cursor == '\t')) ++cursor;
    const char* token_end = cursor;
    while (token_end < end && *token_end != ' ' && *token_end != '\t' && *token_end != '\r') ++token_end;
    labels.push_back(static_cast<Scalar>(detail::parse_double(cursor, token_end, line_no, "label")));
    cursor = token_end;
    Index prev_index = 0;
    while (cursor < end) {
      while (cursor < end && (*cursor == ' ' || *cursor == '\t' || *cursor == '\r')) ++cursor;
      if (cursor >= end) {
        break;
      }
      token_end = cursor;
      while (token_end < end && *token_end != ' ' && *token_end != '\t' && *token_end != '\r') ++token_end;
      const char* colon = std::find(cursor, token_end, ':');
      if (colon == token_end) {
        throw ParseError("load_libsvm: feature token '" + std::string(cursor, token_end) + "' lacks ':'",
                         line_no);
      }
      long long raw_index;
      const auto [ptr, ec] = std::from_chars(cursor, colon, raw_index);
      if (ec != std::errc() || ptr != colon) {
        throw ParseError("load_libsvm: bad feature index '" + std::string(cursor, colon) + "'", line_no);
      }
      if (raw_index < 1) {
        throw IndexError("load_libsvm: feature index " + std::to_string(raw_index) + " is not 1-based",
                         line_no);
      }
      if (raw_index <= prev_index) {
        throw IndexError("load_libsvm: feature index " + std::to_string(raw_index) + " not ascending",
                         line_no);
      }
      prev_index = static_cast<Index>(raw_index);
      max_index = std::max(max_index, prev_index);
      const Scalar value = static_cast<Scalar>(detail::parse_double(colon + 1, token_end, line_no, "value"));
      entries.push_back({static_cast<Index>(labels.size()) - 1, prev_index - 1, value});
      cursor = token_end;
    }
  }
  if (labels.empty()) {
    throw ParseError("load_libsvm: file holds no data rows", line_no);
  }
  Index p = max_index;
  if (p_override > 0) {
    if (max_index > p_override) {
      throw IndexError("load_libsvm: max feature index " + std::to_string(max_index) +
                           " exceeds override p=" + std::to_string(p_override),
                       line_no);
    }
    p = p_override;
  }
  Dataset<Scalar> d;
  d.a = Matrix<Scalar>::Zero(static_cast<Index>(labels.size()), p);
  d.b.resize(static_cast<Index>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    d.b[static_cast<Index>(i)] = labels[i];
  }
  for (const auto& e : entries) {
    d.a(e.row, e.col) = e.value;
  }
  return d;
}

// Sparse text export; zeros are dropped, so load(write(d)) == d for any
// dense dataset.
template <typename Scalar>
void write_libsvm(const std::string& path, const Dataset<Scalar>& d) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("write_libsvm: cannot open '" + path + "' for writing");
  }
  char buf[64];
  for (Index i = 0; i < d.n(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", static_cast<double>(d.b[i]));
    out << buf;
    for (Index j = 0; j < d.p(); ++j) {
      if (d.a(i, j) != Scalar(0)) {
        std::snprintf(buf, sizeof(buf), "%.17g", static_cast<double>(d.a(i, j)));
        out << ' ' << (j + 1) << ':' << buf;
      }
    }
    out << '\n';
  }
}

// Maps a two-class label vector onto -1/+1.
template <typename Scalar>
Vector<Scalar> map_labels_binary(const Vector<Scalar>& raw, Scalar negative_class, Scalar positive_class) {
  Vector<Scalar> mapped(raw.size());
  for (Index i = 0; i < raw.size(); ++i) {
    if (raw[i] == negative_class) {
      mapped[i] = Scalar(-1);
    } else if (raw[i] == positive_class) {
      mapped[i] = Scalar(1);
    } else {
      throw UnknownLabel("map_labels_binary: label " + std::to_string(static_cast<double>(raw[i])) +
                         " at row " + std::to_string(i + 1) + " matches neither class");
    }
  }
  return mapped;
}

namespace detail {

inline std::vector<Index> shuffled_indices(Index n, std::uint64_t seed) {
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index(0));
  GaussianSampler rng(seed);
  for (Index i = n - 1; i > 0; --i) {  // Fisher-Yates
    const auto j = static_cast<Index>(rng.uniform_index(static_cast<std::uint64_t>(i) + 1));
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  return order;
}

}  // namespace detail

// Seeded shuffle-and-prefix split. Train columns are rescaled to unit norm
// and the same per-column factors are applied to the test rows; a column
// that is all zero within the training rows is left unscaled.
template <typename Scalar>
std::pair<Dataset<Scalar>, Dataset<Scalar>> split_train_test(const Dataset<Scalar>& d, const SplitSpec& spec) {
  if (spec.train_n < 1 || spec.train_n >= d.n()) {
    throw OutOfDomain("split_train_test: need 0 < train_n < n");
  }
  std::vector<Index> train_rows;
  std::vector<Index> test_rows;
  if (spec.stratified) {
    std::vector<Index> order = detail::shuffled_indices(d.n(), spec.seed);
    std::vector<Index> neg;
    std::vector<Index> pos;
    for (Index row : order) {
      (d.b[row] < Scalar(0) ? neg : pos).push_back(row);
    }
    const auto neg_train =
        static_cast<Index>(std::llround(static_cast<double>(spec.train_n) * static_cast<double>(neg.size()) /
                                        static_cast<double>(d.n())));
    const Index neg_take = std::min<Index>(neg_train, static_cast<Index>(neg.size()));
    const Index pos_take = spec.train_n - neg_take;
    if (pos_take < 0 || pos_take > static_cast<Index>(pos.size())) {
      throw OutOfDomain("split_train_test: stratified allocation impossible for these class counts");
    }
    train_rows.assign(neg.begin(), neg.begin() + neg_take);
    train_rows.insert(train_rows.end(), pos.begin(), pos.begin() + pos_take);
    test_rows.assign(neg.begin() + neg_take, neg.end());
    test_rows.insert(test_rows.end(), pos.begin() + pos_take, pos.end());
  } else {
    std::vector<Index> order = detail::shuffled_indices(d.n(), spec.seed);
    train_rows.assign(order.begin(), order.begin() + spec.train_n);
    test_rows.assign(order.begin() + spec.train_n, order.end());
  }

  Dataset<Scalar> train;
  Dataset<Scalar> test;
  train.a.resize(static_cast<Index>(train_rows.size()), d.p());
  train.b.resize(static_cast<Index>(train_rows.size()));
  for (std::size_t i = 0; i < train_rows.size(); ++i) {
    train.a.row(static_cast<Index>(i)) = d.a.row(train_rows[i]);
    train.b[static_cast<Index>(i)] = d.b[train_rows[i]];
  }
  test.a.resize(static_cast<Index>(test_rows.size()), d.p());
  test.b.resize(static_cast<Index>(test_rows.size()));
  for (std::size_t i = 0; i < test_rows.size(); ++i) {
    test.a.row(static_cast<Index>(i)) = d.a.row(test_rows[i]);
    test.b[static_cast<Index>(i)] = d.b[test_rows[i]];
  }
  train.feature_names = d.feature_names;
  test.feature_names = d.feature_names;

  bool all_scaled = true;
  for (Index j = 0; j < d.p(); ++j) {
    const Scalar norm = train.a.col(j).norm();
    if (norm > Scalar(0)) {
      train.a.col(j) /= norm;
      test.a.col(j) /= norm;
    } else {
      all_scaled = false;
    }
  }
  train.normalized = all_scaled;
  test.normalized = false;
  return {std::move(train), std::move(test)};
}

struct Metrics {
  double mse = 0.0;
  Index misclassified = 0;
};

// Mean squared prediction error plus the sign-disagreement count
// (sign(0) counts as +1).
template <typename Scalar>
Metrics evaluate(const Vector<Scalar>& coefficients, const Dataset<Scalar>& test) {
  if (coefficients.size() != test.p()) {
    throw DimensionMismatch("evaluate: len(coefficients)=" + std::to_string(coefficients.size()) +
                            " != p=" + std::to_string(test.p()));
  }
  const Vector<Scalar> pred = test.a * coefficients;
  Metrics m;
  m.mse = static_cast<double>((pred - test.b).squaredNorm()) / static_cast<double>(test.n());
  for (Index i = 0; i < test.n(); ++i) {
    const Scalar sign = pred[i] < Scalar(0) ? Scalar(-1) : Scalar(1);
    if (sign != test.b[i]) {
      ++m.misclassified;
    }
  }
  return m;
}

}  // namespace ordreg
