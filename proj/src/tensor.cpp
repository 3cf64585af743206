#include "avreid/tensor.hpp"

#include <sstream>

#include "avreid/errors.hpp"

namespace avreid {

int64_t numel_of(const std::vector<int>& shape) {
  int64_t n = 1;
  for (int d : shape) n *= d;
  return n;
}

std::string shape_str(const std::vector<int>& shape) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) os << ",";
    os << shape[i];
  }
  os << ")";
  return os.str();
}

void Tensor::reshape(std::vector<int> s) {
  if (numel_of(s) != numel()) {
    throw ShapeError("reshape from " + shape_str(shape) + " to " + shape_str(s) + " changes element count");
  }
  shape = std::move(s);
}

void check_shape(const Tensor& t, const std::vector<int>& expected, const char* what) {
  if (t.shape != expected) {
    throw ShapeError(std::string(what) + ": expected shape " + shape_str(expected) + ", got " + shape_str(t.shape));
  }
}

}  // namespace avreid
