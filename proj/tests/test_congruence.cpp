#include <logeuclid/models.hpp>

#include <doctest.h>

using namespace logeuclid;

namespace {

// Frozen from an independent cartesian computation (mpmath).
constexpr double kThreeQuarterPi = 2.3561944901923449;
constexpr double kSasThird = 1.8477590650225735;
constexpr double kTriSides[3] = {1.4736257582079006, 0.76536686473017954, 1.0};
constexpr double kTriAngles[3] = {1.9634954084936208, 0.50047403677538592, 0.67762320832078654};

SurfacePoint random_point(Rng& rng) { return {rng.log_uniform(0.05, 20.0), rng.uniform(0.0, kFourPi)}; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("between examples") {
  CHECK(between({1.0, 0.0}, {1.5, 0.0}, {2.0, 0.0}));
  CHECK(between({1.0, 0.0}, SurfacePoint::apex(), {1.0, 1.5 * kPi}));
  CHECK_FALSE(between({1.0, 0.0}, {2.0, 0.0}, {1.5, 0.0}));
  CHECK_FALSE(between({1.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}));
}

TEST_CASE("collinear triples: symmetry and at most one between") {
  Rng rng(31);
  for (int i = 0; i < 100000; ++i) {
    const Line l = line_through(random_point(rng), random_point(rng));
    const SurfacePoint a = point_on_line(l, rng.uniform(-10.0, 10.0));
    const SurfacePoint b = point_on_line(l, rng.uniform(-10.0, 10.0));
    const SurfacePoint c = point_on_line(l, rng.uniform(-10.0, 10.0));
    const bool abc = between(a, b, c), bca = between(b, c, a), cab = between(c, a, b);
    REQUIRE(abc == between(c, b, a));
    REQUIRE(int(abc) + int(bca) + int(cab) <= 1);
    if (abc) REQUIRE(on_line(b, line_through(a, c), 1e-8));
  }
}

TEST_CASE("lay_off_segment examples") {
  CHECK(lay_off_segment(Ray::from_apex(kPi / 2), 3.0) == SurfacePoint(3.0, kPi / 2));
  const SurfacePoint through = lay_off_segment(ray_into_apex({1.0, 0.0}, Extension::Plus), 2.5);
  CHECK(through == SurfacePoint(1.5, kPi));
  CHECK(distance({1.0, 0.0}, through) == doctest::Approx(2.5));
  CHECK(lay_off_segment(Ray::from_point({1.0, 0.0}, 0.0), 1.0) == SurfacePoint(2.0, 0.0));
  CHECK(code_of([] { lay_off_segment(Ray::from_point({1.0, 0.0}, kPi), 2.0); }) ==
        ErrorCode::MissingExtensionChoice);
  // Short of the apex the continuation is not needed.
  CHECK(lay_off_segment(Ray::from_point({1.0, 0.0}, kPi), 0.5) == SurfacePoint(0.5, 0.0));
}

TEST_CASE("lay_off_segment distance and monotonicity") {
  Rng rng(32);
  for (int i = 0; i < 20000; ++i) {
    const SurfacePoint o = random_point(rng), t = random_point(rng);
    const Ray ray = ray_through(o, t);
    const double len = rng.log_uniform(0.01, 30.0);
    REQUIRE(distance(o, lay_off_segment(ray, len)) == doctest::Approx(len).epsilon(1e-9));
    const double shorter = len * rng.uniform(0.1, 0.9);
    REQUIRE(between(o, lay_off_segment(ray, shorter), lay_off_segment(ray, len)));
  }
}

TEST_CASE("angle_magnitude examples") {
  const SurfacePoint v(1.0, 0.0);
  const Angle chart{v, ray_through(v, {2.0, 0.0}), Ray::from_point(v, kPi / 3)};
  CHECK(angle_magnitude(chart) == doctest::Approx(kPi / 3));

  const SurfacePoint o = SurfacePoint::apex();
  CHECK(angle_magnitude({o, Ray::from_apex(0.0), Ray::from_apex(kPi / 2)}) == doctest::Approx(kPi / 4));
  CHECK(code_of([&] { angle_magnitude({o, Ray::from_apex(0.0), Ray::from_apex(kPi)}); }) ==
        ErrorCode::StraightOrNullAngle);
  CHECK(code_of([&] { angle_magnitude({o, Ray::from_apex(0.0), Ray::from_apex(kTwoPi)}); }) ==
        ErrorCode::StraightOrNullAngle);
  CHECK(code_of([&] { angle_magnitude({v, Ray::from_point(v, 0.3), Ray::from_point(v, 0.3 + kPi)}); }) ==
        ErrorCode::StraightOrNullAngle);
}

TEST_CASE("lay_off_angle examples and round trips") {
  const Ray r = lay_off_angle(Ray::from_apex(0.0), Side::Plus, kPi / 4);
  CHECK(r.origin.is_apex());
  CHECK(angles_equal(r.direction, kPi / 2));

  const SurfacePoint v(1.0, 0.0);
  const Ray t = lay_off_angle(Ray::from_point(v, 0.0), Side::Plus, kPi / 2);
  CHECK(t.direction == doctest::Approx(kPi / 2));

  CHECK(code_of([] { lay_off_angle(Ray::from_apex(0.0), Side::Plus, kPi / 2); }) ==
        ErrorCode::ResultWouldBeStraight);

  Rng rng(33);
  for (int i = 0; i < 20000; ++i) {
    const SurfacePoint o = rng.coin() ? SurfacePoint::apex() : random_point(rng);
    const Ray base = o.is_apex() ? Ray::from_apex(rng.uniform(0.0, kFourPi)) : Ray::from_point(o, rng.uniform(0.0, kTwoPi));
    const double m = rng.uniform(0.01, kPi - 0.01);
    if (o.is_apex() && std::abs(m - kPi / 2) < 1e-6) continue;
    const Side side = rng.coin() ? Side::Plus : Side::Minus;
    const Ray out = lay_off_angle(base, side, m);
    const Angle ang{o, base, out};
    REQUIRE(angle_magnitude(ang) == doctest::Approx(m).epsilon(1e-9));
    REQUIRE(angle_side(ang) == side);
    // Laying off the measured magnitude gives the same ray back.
    const Ray back = lay_off_angle(base, side, angle_magnitude(ang));
    REQUIRE(angles_equal(back.direction, out.direction, 1e-9));
  }
}

TEST_CASE("apex angle additivity") {
  Rng rng(34);
  for (int i = 0; i < 20000; ++i) {
    const double p1 = rng.uniform(0.0, kFourPi);
    const double g12 = rng.uniform(0.01, kTwoPi - 0.02);
    const double g23 = rng.uniform(0.01, kTwoPi - g12 - 0.01);
    const double p2 = normalize_total_angle(p1 + g12), p3 = normalize_total_angle(p2 + g23);
    auto mag = [&](double a, double b) { return raw_angle_between(Ray::from_apex(a), Ray::from_apex(b)); };
    REQUIRE(mag(p1, p3) == doctest::Approx(mag(p1, p2) + mag(p2, p3)).epsilon(1e-9));
  }
}

TEST_CASE("angle invariance under similarities") {
  Rng rng(35);
  for (int i = 0; i < 5000; ++i) {
    const SurfacePoint a = random_point(rng), b = random_point(rng), c = random_point(rng);
    if (collinear(a, b, c)) continue;
    const Triangle t = triangle_data(a, b, c);
    const double rot = rng.uniform(0.0, kFourPi), s = rng.log_uniform(0.2, 5.0);
    const Triangle u = triangle_data(transform_point(a, rot, s), transform_point(b, rot, s), transform_point(c, rot, s));
    for (int k = 0; k < 3; ++k) {
      REQUIRE(u.angles[k] == doctest::Approx(t.angles[k]).epsilon(1e-7));
      REQUIRE(u.sides[k].length == doctest::Approx(s * t.sides[k].length).epsilon(1e-9));
    }
  }
}

TEST_CASE("triangle_data examples") {
  const Triangle t = triangle_data(SurfacePoint::apex(), {1.0, 0.0}, {1.0, 1.5 * kPi});
  CHECK(t.sides[0].length == doctest::Approx(2.0));
  CHECK(t.sides[1].length == doctest::Approx(1.0));
  CHECK(t.sides[2].length == doctest::Approx(1.0));
  CHECK(t.angles[0] == doctest::Approx(kThreeQuarterPi).epsilon(1e-14));

  const Triangle e = triangle_data({1.0, 0.0}, {2.0, 0.0}, {1.0, kPi / 4});
  for (int k = 0; k < 3; ++k) {
    CHECK(e.sides[k].length == doctest::Approx(kTriSides[k]).epsilon(1e-14));
    CHECK(e.angles[k] == doctest::Approx(kTriAngles[k]).epsilon(1e-12));
  }
  CHECK(e.angles[0] + e.angles[1] + e.angles[2] == doctest::Approx(kPi));

  CHECK(code_of([] { triangle_data({1.0, 0.0}, {1.5, 0.0}, {2.0, 0.0}); }) == ErrorCode::DegenerateTriangle);
  CHECK(code_of([] { triangle_data({1.0, 0.0}, {1.0, 0.0}, {2.0, 1.0}); }) == ErrorCode::DegenerateTriangle);
}

TEST_CASE("SAS third sides") {
  const double regular = std::sqrt(2.0 - 2.0 * std::cos(kThreeQuarterPi));
  CHECK(regular == doctest::Approx(kSasThird).epsilon(1e-14));
  CHECK(2.0 - kSasThird > 0.15);
}

TEST_CASE("segment and angle congruence") {
  CHECK(congruent_segments(2.0, 2.0));
  CHECK(congruent_segments(2.0, 2.0 + 1e-12));
  CHECK_FALSE(congruent_segments(2.0, 2.1));
  CHECK(congruent_angles(1.0, 1.0 + 1e-12));
  CHECK_FALSE(congruent_angles(1.0, 1.01));
}

TEST_CASE("archimedes_steps") {
  CHECK(archimedes_steps(10.0, 3.0) == 4);
  CHECK(archimedes_steps(3.0, 3.0) == 2);
  CHECK(archimedes_steps(1.0, 10.0) == 1);
}

TEST_CASE("parallel") {
  CHECK(parallel(Line::chord(1.0, 0.0), Line::chord(1.0, kTwoPi)));
  CHECK_FALSE(parallel(Line::chord(1.0, 0.0), Line::apex(0.0, kPi)));
  CHECK_FALSE(parallel(Line::chord(1.0, 0.0), Line::chord(1.0, 0.0)));
}
