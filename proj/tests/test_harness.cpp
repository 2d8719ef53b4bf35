#include <logeuclid/harness.hpp>

#include <doctest.h>

using namespace logeuclid;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

TrialConfig config(std::size_t trials, std::uint64_t seed = 42) {
  TrialConfig cfg;
  cfg.master_seed = seed;
  cfg.n_trials = trials;
  return cfg;
}

}  // namespace

TEST_CASE("axiom names round trip") {
  for (AxiomId id : all_axioms()) CHECK(parse_axiom(axiom_name(id)) == id);
  CHECK(all_axioms().size() == 17);
  CHECK(parse_axiom_list("all").size() == 17);
  CHECK(parse_axiom_list("I-1,Thm1").size() == 2);
  CHECK(code_of([] { parse_axiom("V-2"); }) == ErrorCode::UnsupportedAxiom);
  CHECK(code_of([] { parse_axiom_list("I-1,bogus"); }) == ErrorCode::UnsupportedAxiom);
}

TEST_CASE("trial seeds depend only on their inputs") {
  CHECK(trial_seed(42, AxiomId::I1, 7) == trial_seed(42, AxiomId::I1, 7));
  CHECK(trial_seed(42, AxiomId::I1, 7) != trial_seed(42, AxiomId::I1, 8));
  CHECK(trial_seed(42, AxiomId::I1, 7) != trial_seed(42, AxiomId::I2, 7));
  CHECK(trial_seed(42, AxiomId::I1, 7) != trial_seed(43, AxiomId::I1, 7));
}

TEST_CASE("incidence suites hold on the log-euclidean model") {
  const auto reports = run_axiom_suite(ModelKind::LogEuclidean, config(10000), parse_axiom_list("I-1,I-2,I-3"));
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) {
    CHECK(r.failures == 0);
    CHECK(r.trials == 10000);
    CHECK(r.matches_expected());
  }
}

TEST_CASE("Thm1 suite finds shared-ray witnesses that replay") {
  const auto reports = run_axiom_suite(ModelKind::LogEuclidean, config(2000), {AxiomId::Thm1});
  REQUIRE(reports.size() == 1);
  const AxiomReport& r = reports[0];
  CHECK(r.failures > 0);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses.size() <= kMaxWitnesses);
  for (const Json& w : r.witnesses) {
    CHECK(w.at("certificate").at("intersection").at("kind") == "SharedRay");
    CHECK(verify_counterexample(w));
  }
}

TEST_CASE("every stored witness replays") {
  const auto reports = run_axiom_suite(ModelKind::LogEuclidean, config(3000), all_axioms());
  for (const auto& r : reports) {
    CAPTURE(axiom_name(r.axiom));
    CHECK(r.matches_expected());
    for (const Json& w : r.witnesses) CHECK(verify_counterexample(w));
  }
}

TEST_CASE("euclidean reference passes every suite") {
  const auto reports = run_axiom_suite(ModelKind::Euclidean, config(3000), all_axioms());
  for (const auto& r : reports) {
    CAPTURE(axiom_name(r.axiom));
    CHECK(r.failures == 0);
    CHECK(r.model == "euclidean");
  }
}

TEST_CASE("reports are deterministic") {
  const auto axioms = parse_axiom_list("I-2bis,II-4-Pasch,III-5,IV-1");
  const std::string a = reports_to_json(run_axiom_suite(ModelKind::LogEuclidean, config(1500, 9), axioms)).dump();
  const std::string b = reports_to_json(run_axiom_suite(ModelKind::LogEuclidean, config(1500, 9), axioms)).dump();
  CHECK(a == b);
  const std::string c = reports_to_json(run_axiom_suite(ModelKind::LogEuclidean, config(1500, 10), axioms)).dump();
  CHECK(a != c);
}

TEST_CASE("report JSON shape") {
  const auto reports = run_axiom_suite(ModelKind::LogEuclidean, config(200), {AxiomId::I2bis});
  const Json j = to_json(reports[0]);
  CHECK(j.at("axiom") == "I-2bis");
  CHECK(j.at("model") == "log-euclidean");
  CHECK(j.at("trials") == 200);
  CHECK(j.at("seed") == 42);
  CHECK(j.at("expected") == "fails");
  CHECK(j.at("witnesses").is_array());
  CHECK(j.at("failures").is_number_unsigned());
}

TEST_CASE("suite argument errors") {
  CHECK(code_of([] { run_axiom_suite(ModelKind::LogEuclidean, config(0), {AxiomId::I1}); }) ==
        ErrorCode::InvalidInput);
  TrialConfig bad = config(10);
  bad.r_min = 5.0;
  bad.r_max = 1.0;
  CHECK(code_of([&] { run_axiom_suite(ModelKind::LogEuclidean, bad, {AxiomId::I1}); }) == ErrorCode::InvalidInput);
}

TEST_CASE("theorem 1 counterexample") {
  const Json w = theorem1_counterexample();
  const Line a = line_from_json(w.at("lines").at("a"));
  const Line b = line_from_json(w.at("lines").at("b"));
  CHECK(a == Line::apex(0.0, 1.5 * kPi));
  CHECK(b == Line::apex(0.0, kPi));
  CHECK_FALSE(a == b);
  for (const SurfacePoint& p : {SurfacePoint(1.0, 0.0), SurfacePoint(2.0, 0.0)}) {
    CHECK(on_line(p, a));
    CHECK(on_line(p, b));
  }
  CHECK(w.at("certificate").at("kind") == "SharedRay");
  CHECK(verify_counterexample(w));

  Json bent = w;
  bent["lines"]["a"]["phi_b"] = bent["lines"]["a"]["phi_b"].get<double>() + 0.1;
  CHECK_FALSE(verify_counterexample(bent));

  CHECK(verify_counterexample(transform_witness(w, 1.0, 1.0)));
  CHECK(verify_counterexample(transform_witness(w, 0.0, 3.5)));
  CHECK(verify_counterexample(transform_witness(w, 2.0 * kPi + 0.4, 0.25)));
}

TEST_CASE("I-2bis and weak I-2 counterexamples") {
  const Json w = i2bis_counterexample();
  const Line a = line_from_json(w.at("line"));
  const auto pt = [&](const char* k) { return point_from_json(w.at("points").at(k)); };
  CHECK(corresponds(a, pt("A"), pt("C")));
  CHECK(corresponds(a, pt("B"), pt("D")));
  CHECK_FALSE(corresponds(a, pt("A"), pt("B")));
  CHECK(line_through(pt("A"), pt("B")) == Line::apex(0.0, kPi));
  CHECK(verify_counterexample(w));
  CHECK(verify_counterexample(transform_witness(w, 1.0, 1.0)));

  const Json v = weak_i2_counterexample();
  const Line l = line_from_json(v.at("line"));
  const auto q = [&](const char* k) { return point_from_json(v.at("points").at(k)); };
  CHECK(corresponds(l, q("A"), q("B")));
  CHECK(corresponds(l, q("A"), q("C")));
  CHECK_FALSE(corresponds(l, q("B"), q("C")));
  CHECK(line_through(q("B"), q("C")) == Line::apex(1.5 * kPi, 2.5 * kPi));
  CHECK(verify_counterexample(v));
  CHECK(verify_counterexample(transform_witness(v, 0.7, 2.0)));

  Json moved = v;
  moved["points"]["C"]["phi"] = 1.0;
  CHECK_FALSE(verify_counterexample(moved));
}

TEST_CASE("SAS counterexample") {
  const Json w = sas_counterexample();
  const auto sides = w.at("third_sides");
  CHECK(sides[0].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(sides[1].get<double>() == doctest::Approx(1.8477590650225735).epsilon(1e-12));
  CHECK(w.at("third_side_gap").get<double>() >= 0.15);
  CHECK(verify_counterexample(w));
  CHECK(verify_counterexample(transform_witness(w, 1.3, 0.5)));
}

TEST_CASE("parallels witness") {
  const Line l = Line::chord(1.0, 0.0);
  const SurfacePoint p(1.0, kTwoPi);
  const auto three = parallels_witness(l, p, 3);
  CHECK(three.size() == 3);
  const auto ten = parallels_witness(l, p, 10);
  REQUIRE(ten.size() == 10);
  for (std::size_t i = 0; i < ten.size(); ++i) {
    CHECK(on_line(p, ten[i]));
    CHECK(line_intersection(ten[i], l).kind == IntersectionKind::Empty);
    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(ten[i] == ten[j]);
  }
  CHECK(verify_counterexample(parallels_counterexample()));

  CHECK(code_of([&] { parallels_witness(l, SurfacePoint(1.0 / std::cos(kPi / 4), kPi / 4), 3); }) ==
        ErrorCode::PreconditionViolation);
  CHECK(code_of([&] { parallels_witness(l, p, 1); }) == ErrorCode::InvalidInput);

  // Inside the chord's window the euclidean parallel is the only one.
  const SurfacePoint inside(0.5, 0.0);
  const LogEuclideanModel m;
  const auto lone = m.parallels(l, inside, 10);
  REQUIRE(lone.size() == 1);
  CHECK(lone[0] == Line::chord(0.5, 0.0));
  CHECK(code_of([&] { parallels_witness(l, inside, 2); }) == ErrorCode::InsufficientParallels);

  const EuclideanModel e;
  CHECK(code_of([&] { parallels_witness(e, EuclideanLine{0.0, 1.0}, EuclideanPoint{0.0, 0.0}, 2); }) ==
        ErrorCode::InsufficientParallels);
}

TEST_CASE("Pasch fails when the line enters a side at the apex") {
  // Side AB breaks at the apex; an apex line with both rays outside the
  // sectors spanned by AC and BC passes the apex and misses both sides.
  const LogEuclideanModel m;
  const SurfacePoint a(1.0, 0.0), b(1.0, 1.5 * kPi), c(1.0, 0.75 * kPi);
  const Line l = Line::apex(kTwoPi, 3.5 * kPi);
  REQUIRE_FALSE(collinear(a, b, c));
  CHECK(m.segment_meets_line(a, b, l));
  CHECK_FALSE(on_line(a, l));
  CHECK_FALSE(on_line(b, l));
  CHECK_FALSE(on_line(c, l));
  CHECK_FALSE(m.segment_meets_line(a, c, l));
  CHECK_FALSE(m.segment_meets_line(b, c, l));
}

TEST_CASE("malformed witnesses") {
  CHECK(code_of([] { verify_counterexample(Json::array()); }) == ErrorCode::MalformedWitness);
  CHECK(code_of([] { verify_counterexample(Json{{"counterexample", "nope"}}); }) == ErrorCode::MalformedWitness);
  CHECK(code_of([] { verify_counterexample(Json{{"counterexample", "thm1"}}); }) == ErrorCode::MalformedWitness);
  CHECK(code_of([] { verify_counterexample(Json{{"axiom", "V-2"}, {"model", "log-euclidean"}}); }) ==
        ErrorCode::MalformedWitness);
}
