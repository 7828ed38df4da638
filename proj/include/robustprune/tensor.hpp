#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace rp {

// Dense N-dimensional array of 64-bit reals, row-major.
// The flat index of (i0, i1, ..., ik) under shape (d0, d1, ..., dk) is
// ((i0*d1 + i1)*d2 + i2)*... , i.e. the last axis varies fastest.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape);                       // zero-filled
  Tensor(std::vector<int> shape, std::vector<double> values);

  static Tensor full(std::vector<int> shape, double value);
  static Tensor scalar(double value) { return Tensor({1}, {value}); }

  const std::vector<int>& shape() const { return shape_; }
  int ndim() const { return static_cast<int>(shape_.size()); }
  int dim(int axis) const;
  std::size_t size() const { return data_.size(); }
  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  std::string shape_str() const;

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  std::size_t flat_index(std::span<const int> coord) const;
  double& at(std::span<const int> coord) { return data_[flat_index(coord)]; }
  double at(std::span<const int> coord) const { return data_[flat_index(coord)]; }
  double& at(std::initializer_list<int> coord) { return at(std::span<const int>(coord.begin(), coord.size())); }
  double at(std::initializer_list<int> coord) const { return at(std::span<const int>(coord.begin(), coord.size())); }

  void fill(double value);
  Tensor reshaped(std::vector<int> shape) const;    // same element count
  bool all_finite() const;

  bool operator==(const Tensor& other) const = default;

 private:
  std::vector<int> shape_;
  std::vector<double> data_;
};

enum class EwOp { add, sub, mul };

// Equal-shape elementwise arithmetic; mismatched shapes are rejected.
Tensor elementwise(EwOp op, const Tensor& a, const Tensor& b);
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double s);

// a += s * b, in place
void axpy(Tensor& a, const Tensor& b, double s);

// sign(0) = 0; entries land in {-1, 0, +1}
Tensor sign(const Tensor& t);

Tensor clamp(const Tensor& t, double lo, double hi);
// per-entry bounds, as needed for the l-inf ball intersected with [0,1]
Tensor clamp(const Tensor& t, const Tensor& lo, const Tensor& hi);

double frobenius_norm_sq(const Tensor& t);
double max_abs(const Tensor& t);
double linf_dist(const Tensor& a, const Tensor& b);
std::size_t nonzero_count(const Tensor& t);

}  // namespace rp
