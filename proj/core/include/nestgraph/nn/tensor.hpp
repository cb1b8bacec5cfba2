#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nestgraph::nn {

class ShapeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major tensor of doubles, rank 1 or 2.
class Tensor {
public:
  Tensor() = default;
  explicit Tensor(std::size_t n) : rows_(n), cols_(1), rank_(1), data_(n, 0.0) {}
  Tensor(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), rank_(2), data_(rows * cols, 0.0) {}

  static Tensor of(std::vector<double> values) {
    Tensor t;
    t.rows_ = values.size();
    t.cols_ = 1;
    t.rank_ = 1;
    t.data_ = std::move(values);
    return t;
  }

  std::size_t size() const { return data_.size(); }
  int rank() const { return rank_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  double& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void fill(double v) {
    for (double& x : data_) x = v;
  }

  bool same_shape(const Tensor& o) const {
    return rank_ == o.rank_ && rows_ == o.rows_ && cols_ == o.cols_;
  }

  std::string shape_str() const {
    if (rank_ == 1) return "[" + std::to_string(rows_) + "]";
    return "[" + std::to_string(rows_) + "," + std::to_string(cols_) + "]";
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int rank_ = 0;
  std::vector<double> data_;
};

/// Named trainable tensor with a persistent gradient slot.
struct Parameter {
  std::string name;
  Tensor value;
  Tensor grad;  // same shape as value, accumulated across a tape
  bool trainable = true;
};

}  // namespace nestgraph::nn
