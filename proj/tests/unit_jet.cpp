#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hamflat/jet.hpp"
#include "hamflat/parse.hpp"

#include "support/random_values.hpp"

using namespace hamflat;

namespace {
PolyMatrix matrix1(const std::string& entry) {
  PolyMatrix a(1, 1, 1);
  a.at(0, 0) = parse_poly(entry, 1);
  return a;
}
}  // namespace

TEST_CASE("embedding is a ring homomorphism") {
  testing::Rng rng(9001);
  for (int t = 0; t < 100; ++t) {
    Poly p = rng.poly(2), q = rng.poly(2);
    CHECK(JetPoly::from_field(p * q) == JetPoly::from_field(p) * JetPoly::from_field(q));
    CHECK(JetPoly::from_field(p + q) == JetPoly::from_field(p) + JetPoly::from_field(q));
  }
}

TEST_CASE("jet order") {
  CHECK(JetPoly::field_var(2, 1).order() == 0);
  CHECK(JetPoly::x_var(2, 2).order() == 1);
  CHECK(JetPoly::xx_var(2, 1).order() == 2);
  CHECK(JetPoly(2).order() == 0);
}

TEST_CASE("total x derivative") {
  JetPoly u = JetPoly::field_var(1, 1);
  JetPoly ux = JetPoly::x_var(1, 1);
  JetPoly uxx = JetPoly::xx_var(1, 1);
  CHECK(total_x_derivative(u) == ux);
  CHECK(total_x_derivative(ux) == uxx);
  CHECK(total_x_derivative(u * ux) == ux * ux + u * uxx);
  CHECK_THROWS_AS(total_x_derivative(uxx), JetOrderError);
}

TEST_CASE("evolution derivative along the identity flow is d/dx") {
  PolyMatrix identity = PolyMatrix::identity(1, 1);
  JetPoly u = JetPoly::field_var(1, 1);
  JetPoly ux = JetPoly::x_var(1, 1);
  CHECK(evolution_derivative(u, identity) == ux);
  CHECK(evolution_derivative(ux, identity) == JetPoly::xx_var(1, 1));
}

TEST_CASE("evolution derivative chain rule") {
  // e = u ux under u_t = u ux: D_t e = (u ux) ux + u (ux^2 + u uxx).
  PolyMatrix a = matrix1("u1");
  JetPoly u = JetPoly::field_var(1, 1);
  JetPoly ux = JetPoly::x_var(1, 1);
  JetPoly uxx = JetPoly::xx_var(1, 1);
  JetPoly expected = (u * ux) * ux + u * (ux * ux + u * uxx);
  CHECK(evolution_derivative(u * ux, a) == expected);
}

TEST_CASE("order cap is enforced") {
  PolyMatrix identity = PolyMatrix::identity(1, 1);
  CHECK_THROWS_AS(evolution_derivative(JetPoly::xx_var(1, 1), identity), JetOrderError);
}

TEST_CASE("jet printing names derivatives") {
  JetPoly e = JetPoly::field_var(2, 1) * JetPoly::x_var(2, 2) * JetPoly::x_var(2, 2);
  CHECK(e.str() == "u1*u2_x^2");
}

namespace {

hamflat::JetPoly random_jet(hamflat::testing::Rng& rng, int fields) {
  JetPoly e(fields);
  int terms = static_cast<int>(rng.integer(0, 4));
  for (int t = 0; t < terms; ++t) {
    JetPoly m = JetPoly::from_field(Poly::constant(fields, rng.rational()));
    int factors = static_cast<int>(rng.integer(0, 3));
    for (int f = 0; f < factors; ++f) {
      int i = static_cast<int>(rng.integer(1, fields));
      switch (rng.integer(0, 2)) {
        case 0: m = m * JetPoly::field_var(fields, i); break;
        case 1: m = m * JetPoly::x_var(fields, i); break;
        default: m = m * JetPoly::xx_var(fields, i); break;
      }
    }
    e = e + m;
  }
  return e;
}

}  // namespace

TEST_CASE("jet ring laws on random triples") {
  testing::Rng rng(9002);
  for (int t = 0; t < 200; ++t) {
    int fields = static_cast<int>(rng.integer(1, 3));
    JetPoly a = random_jet(rng, fields);
    JetPoly b = random_jet(rng, fields);
    JetPoly c = random_jet(rng, fields);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}
