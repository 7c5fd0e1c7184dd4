#pragma once

#include <Eigen/Core>

#include <complex>
#include <utility>

namespace stpef {

/// Dense 3-D sample grid, row-major with x fastest: flat index = x + nx*(y + ny*z).
/// Frames (fixed z) are therefore contiguous nx-by-ny column-major planes.
template <typename Scalar>
class Grid3 {
 public:
  Grid3() : dims_(Eigen::Array3i::Zero()) {}
  explicit Grid3(const Eigen::Array3i& dims)
      : dims_(dims),
        data_(static_cast<Eigen::Index>(dims.x()) * dims.y() * dims.z()) {}
  Grid3(int nx, int ny, int nz) : Grid3(Eigen::Array3i(nx, ny, nz)) {}

  static Grid3 zero(const Eigen::Array3i& dims) {
    Grid3 g(dims);
    g.data_.setZero();
    return g;
  }

  const Eigen::Array3i& dims() const { return dims_; }
  int nx() const { return dims_.x(); }
  int ny() const { return dims_.y(); }
  int nz() const { return dims_.z(); }
  Eigen::Index size() const { return data_.size(); }
  bool empty() const { return data_.size() == 0; }

  Eigen::Index index(int x, int y, int z) const {
    return x + static_cast<Eigen::Index>(dims_.x()) *
                   (y + static_cast<Eigen::Index>(dims_.y()) * z);
  }

  Scalar& operator()(int x, int y, int z) { return data_[index(x, y, z)]; }
  const Scalar& operator()(int x, int y, int z) const {
    return data_[index(x, y, z)];
  }
  Scalar& operator[](Eigen::Index i) { return data_[i]; }
  const Scalar& operator[](Eigen::Index i) const { return data_[i]; }

  Eigen::ArrayX<Scalar>& array() { return data_; }
  const Eigen::ArrayX<Scalar>& array() const { return data_; }
  Scalar* data() { return data_.data(); }
  const Scalar* data() const { return data_.data(); }

  void setZero() { data_.setZero(); }

  bool same_dims(const Grid3& other) const {
    return (dims_ == other.dims_).all();
  }

  /// Mutable view of one frame as an nx-by-ny Eigen array (x is the row index).
  Eigen::Map<Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>> frame(int z) {
    return {data_.data() + index(0, 0, z), dims_.x(), dims_.y()};
  }
  Eigen::Map<const Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>> frame(
      int z) const {
    return {data_.data() + index(0, 0, z), dims_.x(), dims_.y()};
  }

 private:
  Eigen::Array3i dims_;
  Eigen::ArrayX<Scalar> data_;
};

using GridF = Grid3<float>;
using GridD = Grid3<double>;
using GridC = Grid3<std::complex<double>>;

inline Eigen::Index cell_count(const Eigen::Array3i& dims) {
  return static_cast<Eigen::Index>(dims.x()) * dims.y() * dims.z();
}

}  // namespace stpef
