#include "doctest.h"
#include "qdeform/deform.hpp"
#include "qdeform/expr.hpp"
#include "qdeform/job.hpp"
#include "qdeform/runner.hpp"

using namespace qdeform;

#ifndef QDF_SOURCE_DIR
#define QDF_SOURCE_DIR "."
#endif

namespace {
const Field Qq = Field::rational_functions();
Scalar q() { return Scalar::generator(Qq); }
std::string src(const std::string& rel) {
  return std::string(QDF_SOURCE_DIR) + "/" + rel;
}
}  // namespace

TEST_CASE("presets load and validate") {
  for (const auto& name : preset_names()) {
    JobSpec job = load_spec(name);
    CHECK(job.datum != nullptr);
    CHECK(validate(*job.datum, job.lambda).pass);
  }
  JobSpec sl2 = load_spec("sl2");
  CHECK(sl2.datum->letter_index("e") >= 0);
  CHECK(sl2.lambda.get(*sl2.datum, sl2.datum->letter_index("e"),
                       sl2.datum->letter_index("f")) ==
        (q() - q().pow(-1)).inverse());
  CHECK_FALSE(sl2.use_lambda_rules);
  CHECK(load_spec("sl2-lambda").use_lambda_rules);

  JobSpec uq = load_spec("uq-sl2-N5");
  CHECK(uq.field == Field::cyclotomic(5));
  CHECK(uq.datum->group()->group_order() == 5);
  CHECK(uq.component_relations.size() == 2);
  CHECK(uq.degree == 10);

  CHECK_THROWS_AS(load_preset("sl7"), error);
}

TEST_CASE("spec files parse to the same data as the presets") {
  JobSpec file = load_spec_file(src("presets/sl2.cfg"));
  JobSpec preset = load_preset("sl2");
  REQUIRE(file.datum->letter_count() == preset.datum->letter_count());
  for (int i = 0; i < file.datum->letter_count(); ++i) {
    int j = preset.datum->letter_index(file.datum->letter(i).name);
    REQUIRE(j >= 0);
    for (int k = 0; k < file.datum->letter_count(); ++k) {
      int l = preset.datum->letter_index(file.datum->letter(k).name);
      CHECK(file.datum->q(i, k) == preset.datum->q(j, l));
    }
  }
  JobSpec uq = load_spec_file(src("presets/uq-sl2-N5.cfg"));
  CHECK(uq.field == Field::cyclotomic(5));
  CHECK(uq.component_relations.size() == 2);
}

TEST_CASE("validation errors surface from the loader") {
  CHECK_THROWS_WITH_AS(load_spec_file(src("presets/bad-linking.cfg")),
                       doctest::Contains("linking"), error);
  CHECK_THROWS_AS(load_spec_file("/nonexistent/path.cfg"), error);
}

TEST_CASE("reduce command reproduces the deformed commutator") {
  JobSpec job = load_spec("sl2-lambda");
  RunOptions opts;
  opts.command = "reduce";
  opts.argument = "e*f - f*e";
  auto result = run(job, opts);
  CHECK(result.exit_code == 0);
  // (q^-2 - 1) f e + (K^2 - 1)/(q - q^-1), in canonical rendering
  NcPoly expect = parse_expression(
      job.datum, "(q^-2 - 1)*f*e + (K^2 - 1)/(q - q^-1)");
  CHECK(result.report == expect.str() + "\n");

  // without the lambda rules the commutator reduces into the graded algebra
  JobSpec h = load_spec("sl2");
  auto r2 = run(h, opts);
  CHECK(r2.report ==
        parse_expression(job.datum, "(q^-2 - 1)*f*e").str() + "\n");
}

TEST_CASE("dims command") {
  JobSpec job = load_spec("sl2");
  RunOptions opts;
  opts.command = "dims";
  opts.max_degree = 6;
  auto result = run(job, opts);
  CHECK(result.exit_code == 0);
  CHECK(result.report.find("6  7  7  yes") != std::string::npos);
}

TEST_CASE("primitives command finds the Serre elements") {
  JobSpec job = load_spec("sl3-plus");
  RunOptions opts;
  opts.command = "primitives";
  opts.degree = 3;
  auto result = run(job, opts);
  CHECK(result.exit_code == 0);
  CHECK(result.report.find("primitives at degree 3: 2") != std::string::npos);
  RunOptions o2 = opts;
  o2.degree = 2;
  CHECK(run(job, o2).report.find("primitives at degree 2: 0") !=
        std::string::npos);
}

TEST_CASE("deform command emits the cocycle table") {
  JobSpec job = load_spec("sl2");
  RunOptions opts;
  opts.command = "deform";
  opts.emit = "cocycle";
  opts.max_degree = 2;
  auto result = run(job, opts);
  CHECK(result.exit_code == 0);
  CHECK(result.report.find("sigma(e ; f) = -q/(q^2 - 1)") !=
        std::string::npos);
  CHECK(result.report.find("sigma(f ; e) = 0") != std::string::npos);
}

TEST_CASE("double and verify commands") {
  JobSpec job = load_spec("sl2");
  RunOptions opts;
  opts.command = "double";
  opts.quotient = true;
  opts.verify = true;
  opts.max_degree = 5;
  auto result = run(job, opts);
  CHECK(result.exit_code == 0);
  CHECK(result.report.find("DOUBLE-ISO PASS") != std::string::npos);

  RunOptions v;
  v.command = "verify";
  v.argument = "hopf";
  v.max_degree = 3;
  JobSpec lam = load_spec("sl2-lambda");
  auto r2 = run(lam, v);
  CHECK(r2.exit_code == 0);
  CHECK(r2.report.find("HOPF PASS") != std::string::npos);

  v.argument = "confluence";
  v.max_degree = 5;
  auto r3 = run(lam, v);
  CHECK(r3.exit_code == 0);
  CHECK(r3.report.find("CONFLUENCE PASS") != std::string::npos);
}

TEST_CASE("reports are identical across execution policies") {
  JobSpec job = load_spec("sl2-lambda");
  for (const char* cmd : {"dims", "build"}) {
    RunOptions a;
    a.command = cmd;
    a.policy = ExecPolicy::serial;
    RunOptions b = a;
    b.policy = ExecPolicy::openmp;
    CHECK(run(job, a).report == run(job, b).report);
  }
  RunOptions v;
  v.command = "verify";
  v.argument = "hopf";
  v.max_degree = 3;
  RunOptions vp = v;
  vp.policy = ExecPolicy::openmp;
  CHECK(run(job, v).report == run(job, vp).report);
}

TEST_CASE("component order independence (permuted Lambda)") {
  // the sl2 data with the component order declared as plus < minus:
  // the stored linking parameter flips by -q_fe, and the rewrite rules
  // orient the other way, but the graded dims agree and the relations map
  // onto each other under the letter identity
  JobSpec job = load_spec("sl2");
  Scalar c = (q() - q().pow(-1)).inverse();

  auto G = job.datum->group();
  std::vector<Letter> letters;
  for (const auto& l : job.datum->letters())
    letters.push_back({l.name, 1 - l.component, l.g, l.chi});
  auto permuted = std::make_shared<YDDatum>(
      G, std::vector<std::string>{"plus", "minus"}, std::move(letters));
  LinkingParams lam2;
  lam2.set(*permuted, permuted->letter_index("e"),
           permuted->letter_index("f"), c);

  auto dp1 = build_deformation(job.datum, job.lambda, {}, 6);
  auto dp2 = build_deformation(permuted, lam2, {}, 6);

  auto t1 = graded_dims(dp1, 6);
  auto t2 = graded_dims(dp2, 6);
  for (int n = 0; n <= 6; ++n) {
    CHECK(t1.rows[n].dim_h == t2.rows[n].dim_h);
    CHECK(t1.rows[n].dim_hlam == t2.rows[n].dim_hlam);
  }

  // relation transport under the letter identity map
  auto translate = [&](const NcPoly& p, DatumPtr target) {
    NcPoly out = NcPoly::zero(target);
    for (const auto& [m, coeff] : p.terms()) {
      Word w;
      for (int i : m.word)
        w.push_back(target->letter_index(dp1.datum->letter(i).name));
      out.add_term({w, GroupElement(target->group(), m.group.exponents())},
                   coeff);
    }
    return out;
  };
  for (const auto& r : dp1.hlam().rules()) {
    NcPoly rel = NcPoly::word(dp1.datum, r.lhs) - r.rhs;
    CHECK(reduce(translate(rel, permuted), dp2.hlam()).is_zero());
  }
}
