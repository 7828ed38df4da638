#include "robustprune/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rp {

namespace {

std::size_t checked_size(const std::vector<int>& shape) {
  std::size_t n = 1;
  for (int d : shape) {
    if (d <= 0) throw std::invalid_argument("tensor extents must be positive");
    n *= static_cast<std::size_t>(d);
  }
  return n;
}

}  // namespace

Tensor::Tensor(std::vector<int> shape) : shape_(std::move(shape)), data_(checked_size(shape_), 0.0) {}

Tensor::Tensor(std::vector<int> shape, std::vector<double> values) : shape_(std::move(shape)), data_(std::move(values)) {
  if (checked_size(shape_) != data_.size()) {
    throw std::invalid_argument("tensor data length does not match shape product");
  }
}

Tensor Tensor::full(std::vector<int> shape, double value) {
  Tensor t(std::move(shape));
  t.fill(value);
  return t;
}

int Tensor::dim(int axis) const {
  if (axis < 0 || axis >= ndim()) throw std::out_of_range("tensor axis out of range");
  return shape_[axis];
}

std::string Tensor::shape_str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < shape_.size(); ++i) os << (i ? "," : "") << shape_[i];
  os << ']';
  return os.str();
}

std::size_t Tensor::flat_index(std::span<const int> coord) const {
  if (coord.size() != shape_.size()) throw std::invalid_argument("coordinate rank mismatch");
  std::size_t idx = 0;
  for (std::size_t a = 0; a < coord.size(); ++a) {
    if (coord[a] < 0 || coord[a] >= shape_[a]) throw std::out_of_range("coordinate out of range");
    idx = idx * static_cast<std::size_t>(shape_[a]) + static_cast<std::size_t>(coord[a]);
  }
  return idx;
}

void Tensor::fill(double value) { std::fill(data_.begin(), data_.end(), value); }

Tensor Tensor::reshaped(std::vector<int> shape) const {
  if (checked_size(shape) != data_.size()) throw std::invalid_argument("reshape changes element count");
  Tensor t;
  t.shape_ = std::move(shape);
  t.data_ = data_;
  return t;
}

bool Tensor::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

namespace {

void require_same_shape(const Tensor& a, const Tensor& b, const char* what) {
  if (!a.same_shape(b)) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch " + a.shape_str() + " vs " + b.shape_str());
  }
}

template <typename F>
Tensor zip(const Tensor& a, const Tensor& b, F f) {
  Tensor out(a.shape());
  const double* pa = a.data();
  const double* pb = b.data();
  double* po = out.data();
  for (std::size_t i = 0; i < a.size(); ++i) po[i] = f(pa[i], pb[i]);
  return out;
}

}  // namespace

Tensor elementwise(EwOp op, const Tensor& a, const Tensor& b) {
  switch (op) {
    case EwOp::add: return add(a, b);
    case EwOp::sub: return sub(a, b);
    case EwOp::mul: return mul(a, b);
  }
  throw std::invalid_argument("unknown elementwise op");
}

Tensor add(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "add");
  return zip(a, b, [](double x, double y) { return x + y; });
}

Tensor sub(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "sub");
  return zip(a, b, [](double x, double y) { return x - y; });
}

Tensor mul(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "mul");
  return zip(a, b, [](double x, double y) { return x * y; });
}

Tensor scale(const Tensor& a, double s) {
  Tensor out(a.shape());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

void axpy(Tensor& a, const Tensor& b, double s) {
  require_same_shape(a, b, "axpy");
  double* pa = a.data();
  const double* pb = b.data();
  for (std::size_t i = 0; i < a.size(); ++i) pa[i] += s * pb[i];
}

Tensor sign(const Tensor& t) {
  Tensor out(t.shape());
  for (std::size_t i = 0; i < t.size(); ++i) {
    out[i] = t[i] > 0.0 ? 1.0 : (t[i] < 0.0 ? -1.0 : 0.0);
  }
  return out;
}

Tensor clamp(const Tensor& t, double lo, double hi) {
  if (lo > hi) throw std::invalid_argument("clamp: lo > hi");
  Tensor out(t.shape());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = std::min(std::max(t[i], lo), hi);
  return out;
}

Tensor clamp(const Tensor& t, const Tensor& lo, const Tensor& hi) {
  require_same_shape(t, lo, "clamp");
  require_same_shape(t, hi, "clamp");
  Tensor out(t.shape());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = std::min(std::max(t[i], lo[i]), hi[i]);
  return out;
}

double frobenius_norm_sq(const Tensor& t) {
  double s = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) s += t[i] * t[i];
  return s;
}

double max_abs(const Tensor& t) {
  double m = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) m = std::max(m, std::abs(t[i]));
  return m;
}

double linf_dist(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "linf_dist");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::size_t nonzero_count(const Tensor& t) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < t.size(); ++i) n += (t[i] != 0.0);
  return n;
}

}  // namespace rp
