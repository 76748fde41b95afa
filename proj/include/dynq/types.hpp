#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace dynq {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Vertex-indexed integer vector (dimension vectors, g-vectors, K_0 classes).
using DimVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

/// Invalid user input (bad quiver file, size mismatch, range violation).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Violated internal invariant; indicates a bug, never a user error.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline bool leq(const DimVector& a, const DimVector& b) {
  return a.size() == b.size() && (a.array() <= b.array()).all();
}

inline bool eq(const DimVector& a, const DimVector& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

inline bool nonneg(const DimVector& a) { return (a.array() >= 0).all(); }

inline bool eq(const IntMatrix& a, const IntMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a.array() == b.array()).all();
}

inline Int total(const DimVector& a) { return a.sum(); }

inline DimVector zero_vector(int n) { return DimVector::Zero(n); }

inline DimVector unit_vector(int n, int i) {
  DimVector v = DimVector::Zero(n);
  v[i] = 1;
  return v;
}

/// Strict lexicographic order on equal-length integer vectors.
struct DimLexLess {
  bool operator()(const DimVector& a, const DimVector& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

/// Calls fn(e) for every vector with 0 <= e <= bound, in increasing
/// total-degree order within which lexicographic order is used.
template <typename Fn>
void for_each_subvector(const DimVector& bound, Fn&& fn) {
  const int n = static_cast<int>(bound.size());
  std::vector<DimVector> box;
  DimVector e = DimVector::Zero(n);
  while (true) {
    box.push_back(e);
    int i = n - 1;
    while (i >= 0 && e[i] == bound[i]) {
      e[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++e[i];
  }
  std::stable_sort(box.begin(), box.end(),
                   [](const DimVector& a, const DimVector& b) {
                     if (a.sum() != b.sum()) return a.sum() < b.sum();
                     return DimLexLess{}(a, b);
                   });
  for (const auto& v : box) fn(v);
}

inline std::string format_vector(const DimVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  s += ")";
  return s;
}

/// Parses "1,0,2" into a vector; throws DomainError on malformed input.
DimVector parse_vector(const std::string& text);

}  // namespace dynq
