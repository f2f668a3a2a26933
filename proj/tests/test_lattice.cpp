#include "doctest.h"
#include "rwcollide/errors.hpp"
#include "rwcollide/lattice.hpp"

using namespace rwcollide;

TEST_CASE("dimension bounds") {
  CHECK_THROWS_AS(Dimension(0), InputError);
  CHECK_THROWS_AS(Dimension(-3), InputError);
  CHECK_THROWS_AS(Dimension(kMaxDimension + 1), InputError);
  CHECK(Dimension(1).value() == 1);
  CHECK(Dimension(kMaxDimension).value() == kMaxDimension);
}

TEST_CASE("lattice point arithmetic") {
  const Dimension d(3);
  LatticePoint p(d);
  CHECK(p.is_origin());
  CHECK(p.coords().size() == 3);

  const auto e1 = LatticePoint::unit(d, 1, -1);
  CHECK(e1.is_unit_step());
  CHECK(e1[1] == -1);
  CHECK(e1.l1_norm() == 1);

  p += e1;
  p += LatticePoint::unit(d, 2, 1);
  CHECK_FALSE(p.is_unit_step());
  CHECK(p.l1_norm() == 2);
  CHECK((p - p).is_origin());
  CHECK(p - LatticePoint::unit(d, 2, 1) == e1);

  LatticePoint twice(d);
  twice[0] = 2;
  CHECK_FALSE(twice.is_unit_step());
}

TEST_CASE("unit vectors reject bad axis or sign") {
  const Dimension d(2);
  CHECK_THROWS_AS(LatticePoint::unit(d, 2, 1), InputError);
  CHECK_THROWS_AS(LatticePoint::unit(d, -1, 1), InputError);
  CHECK_THROWS_AS(LatticePoint::unit(d, 0, 0), InputError);
}

TEST_CASE("points of different dimension never compare equal") {
  CHECK_FALSE(LatticePoint(Dimension(2)) == LatticePoint(Dimension(3)));
}
