#pragma once

#include <Eigen/Dense>
#include <istream>
#include <ostream>
#include <string>

#include "asymbeta/common.hpp"

namespace asymbeta::detail {

// Whitespace-delimited text blob, versioned by the header line. Doubles are
// written with round-trip precision so deserialize(serialize(m)) predicts
// bit-identically.

inline constexpr int kModelFormatVersion = 1;

inline void write_header(std::ostream& out, const std::string& family) {
  out << "asymbeta-model " << kModelFormatVersion << " " << family << "\n";
}

inline void write_scalar(std::ostream& out, double v) {
  out << format_double(v) << "\n";
}

inline void write_int(std::ostream& out, long long v) { out << v << "\n"; }

inline void write_vector(std::ostream& out, const Eigen::VectorXd& v) {
  out << v.size();
  for (Eigen::Index i = 0; i < v.size(); ++i) out << " " << format_double(v(i));
  out << "\n";
}

inline void write_matrix(std::ostream& out, const Eigen::MatrixXd& m) {
  out << m.rows() << " " << m.cols();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out << " " << format_double(m(i, j));
    }
  }
  out << "\n";
}

inline double read_scalar(std::istream& in) {
  double v;
  if (!(in >> v)) throw Error("model blob truncated (scalar)");
  return v;
}

inline long long read_int(std::istream& in) {
  long long v;
  if (!(in >> v)) throw Error("model blob truncated (int)");
  return v;
}

inline Eigen::VectorXd read_vector(std::istream& in) {
  long long n = read_int(in);
  if (n < 0) throw Error("model blob: negative vector length");
  Eigen::VectorXd v(n);
  for (long long i = 0; i < n; ++i) v(i) = read_scalar(in);
  return v;
}

inline Eigen::MatrixXd read_matrix(std::istream& in) {
  long long r = read_int(in), c = read_int(in);
  if (r < 0 || c < 0) throw Error("model blob: negative matrix shape");
  Eigen::MatrixXd m(r, c);
  for (long long i = 0; i < r; ++i) {
    for (long long j = 0; j < c; ++j) m(i, j) = read_scalar(in);
  }
  return m;
}

}  // namespace asymbeta::detail
