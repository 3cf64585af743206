#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace avreid {

int64_t numel_of(const std::vector<int>& shape);
std::string shape_str(const std::vector<int>& shape);

// Dense row-major tensor of doubles. Math goes through Eigen maps over the
// flat storage; the struct itself stays a dumb value type.
struct Tensor {
  std::vector<int> shape;
  std::vector<double> v;

  Tensor() = default;
  explicit Tensor(std::vector<int> s) : shape(std::move(s)), v(static_cast<size_t>(numel_of(shape)), 0.0) {}

  static Tensor zeros(std::vector<int> s) { return Tensor(std::move(s)); }
  static Tensor full(std::vector<int> s, double value) {
    Tensor t(std::move(s));
    t.fill(value);
    return t;
  }

  int64_t numel() const { return static_cast<int64_t>(v.size()); }
  int dim(int i) const { return shape[static_cast<size_t>(i)]; }
  int ndim() const { return static_cast<int>(shape.size()); }
  bool same_shape(const Tensor& o) const { return shape == o.shape; }

  double* data() { return v.data(); }
  const double* data() const { return v.data(); }

  void fill(double c) { std::fill(v.begin(), v.end(), c); }

  // Reinterpret the flat storage; element count must match.
  void reshape(std::vector<int> s);
};

// Throws ShapeError when `t.shape != expected`, mentioning `what`.
void check_shape(const Tensor& t, const std::vector<int>& expected, const char* what);

}  // namespace avreid
