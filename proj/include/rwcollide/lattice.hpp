#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace rwcollide {

inline constexpr int kMaxDimension = 16;

/// Lattice dimension d, validated to 1 <= d <= kMaxDimension.
class Dimension {
 public:
  explicit Dimension(int d);

  int value() const noexcept { return d_; }
  friend bool operator==(Dimension, Dimension) = default;

 private:
  int d_;
};

/// Integer point of Z^d. Storage is fixed-capacity so walkers never allocate.
class LatticePoint {
 public:
  explicit LatticePoint(Dimension d) noexcept : dim_(d.value()) {}

  /// The unit vector sign * e_axis.
  static LatticePoint unit(Dimension d, int axis, int sign);

  int dim() const noexcept { return dim_; }
  std::int64_t operator[](int i) const noexcept { return c_[static_cast<std::size_t>(i)]; }
  std::int64_t& operator[](int i) noexcept { return c_[static_cast<std::size_t>(i)]; }
  std::span<const std::int64_t> coords() const noexcept {
    return {c_.data(), static_cast<std::size_t>(dim_)};
  }

  bool is_origin() const noexcept;
  /// Exactly one nonzero coordinate, equal to +-1.
  bool is_unit_step() const noexcept;
  /// Sum of |coords|.
  std::int64_t l1_norm() const noexcept;

  LatticePoint& operator+=(const LatticePoint& o) noexcept;
  LatticePoint& operator-=(const LatticePoint& o) noexcept;
  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) noexcept { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) noexcept { return a -= b; }
  friend bool operator==(const LatticePoint& a, const LatticePoint& b) noexcept;

 private:
  std::array<std::int64_t, kMaxDimension> c_{};
  int dim_;
};

}  // namespace rwcollide
