#include "rwcollide/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "rwcollide/errors.hpp"

namespace rwcollide {

Dimension::Dimension(int d) : d_(d) {
  if (d < 1 || d > kMaxDimension) {
    throw InputError("dimension must lie in [1, " + std::to_string(kMaxDimension) +
                     "], got " + std::to_string(d));
  }
}

LatticePoint LatticePoint::unit(Dimension d, int axis, int sign) {
  if (axis < 0 || axis >= d.value()) throw InputError("axis out of range");
  if (sign != 1 && sign != -1) throw InputError("unit step sign must be +1 or -1");
  LatticePoint p(d);
  p[axis] = sign;
  return p;
}

bool LatticePoint::is_origin() const noexcept {
  auto c = coords();
  return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; });
}

bool LatticePoint::is_unit_step() const noexcept {
  int nonzero = 0;
  for (std::int64_t v : coords()) {
    if (v == 0) continue;
    if (v != 1 && v != -1) return false;
    ++nonzero;
  }
  return nonzero == 1;
}

std::int64_t LatticePoint::l1_norm() const noexcept {
  std::int64_t s = 0;
  for (std::int64_t v : coords()) s += std::llabs(v);
  return s;
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& o) noexcept {
  for (int i = 0; i < dim_; ++i) (*this)[i] += o[i];
  return *this;
}

LatticePoint& LatticePoint::operator-=(const LatticePoint& o) noexcept {
  for (int i = 0; i < dim_; ++i) (*this)[i] -= o[i];
  return *this;
}

bool operator==(const LatticePoint& a, const LatticePoint& b) noexcept {
  if (a.dim_ != b.dim_) return false;
  auto ca = a.coords();
  auto cb = b.coords();
  return std::equal(ca.begin(), ca.end(), cb.begin());
}

}  // namespace rwcollide
