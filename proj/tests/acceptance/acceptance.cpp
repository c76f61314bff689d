// One line per acceptance criterion. Budgets, sample counts and seeds are
// fixed here; every comparison is exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "dtc/cli/job.hpp"
#include "dtc/errors.hpp"
#include "dtc/hopf/hopf.hpp"
#include "dtc/reconstruct/reconstruct.hpp"
#include "dtc/structmaps/struct_maps.hpp"
#include "support/generators.hpp"

namespace {

using namespace dtc;

struct Outcome {
  bool passed = true;
  std::string note;
};

// Counts checks and groups failures by label.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    failures_[what] += 1;
  }
  Outcome outcome() const {
    Outcome o{failed_ == 0, std::to_string(total_ - failed_) + "/" + std::to_string(total_) + " checks pass"};
    for (const auto& [what, count] : failures_) o.note += "; " + what + " failed " + std::to_string(count) + "x";
    return o;
  }

 private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::map<std::string, std::size_t> failures_;
};

constexpr double kNoLimit = 0;

bool report(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string budget;
  if (limit_seconds > kNoLimit) {
    if (seconds > limit_seconds) {
      o.passed = false;
      o.note += "; over budget";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, ", limit %.0f s", limit_seconds);
    budget = buf;
  }
  std::printf("%s criterion %d: %s; %s (%.2f s%s)\n", o.passed ? "PASS" : "FAIL", id, title, o.note.c_str(), seconds,
              budget.c_str());
  std::fflush(stdout);
  return o.passed;
}

const FieldPtr& field() {
  static const FieldPtr k = DiffField::standard_xt();
  return k;
}

RationalFunction parse(const char* s) { return field()->parse(s); }

// ---- 1 ----

Outcome prolongation() {
  Tally t;
  const DiffModule m(field(), RFMatrix(1, 1, {parse("t*x")}));
  const RFMatrix expected(2, 2, {parse("t*x"), parse("x"), parse("0"), parse("t*x")});
  t.expect(prolong(m).sys() == expected, "prolong [t*x]");
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const DiffModule a(field(), testing::random_system(rng, n));
    t.expect(verify_axiom("exactness", a, std::nullopt).passed, "exactness");
  }
  return t.outcome();
}

// ---- 2 and 4 ----

struct Dims {
  std::size_t n;
  std::size_t m;
};
constexpr Dims kSuiteDims[] = {{1, 1}, {2, 1}, {2, 2}, {3, 2}};
constexpr int kSuiteInstances = 10;

void diagram_suite(Tally& t, ProlongMode mode, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (const Dims d : kSuiteDims) {
    for (int trial = 0; trial < kSuiteInstances; ++trial) {
      const DiffModule x(field(), testing::random_system(rng, d.n));
      const DiffModule y(field(), testing::random_system(rng, d.m));
      for (const char* axiom : kAxiomNames) t.expect(verify_axiom(axiom, x, y, {mode, 6}).passed, axiom);
    }
  }
}

Outcome five_diagrams() {
  Tally t;
  diagram_suite(t, ProlongMode::differential, 2002);
  return t.outcome();
}

Outcome trivial_mode() {
  Tally t;
  diagram_suite(t, ProlongMode::trivial, 4004);
  std::mt19937_64 rng(4005);
  for (int trial = 0; trial < 20; ++trial) {
    t.expect(induced_derivation(field(), testing::random_rational(rng, 2, 2), ProlongMode::trivial).is_zero(),
             "induced_derivation = 0");
  }
  return t.outcome();
}

// ---- 3 ----

Outcome witness_values() {
  Tally t;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t i = 0; i < n; ++i) {
      const WitnessValues w = witness(n, i);
      t.expect(w.via_s.is_zero(), "ev o S = 0");
      t.expect(w.via_t == RationalFunction(2), "ev o (id (x) D^-1) o T = 2");
    }
    const auto [via_s, via_t] = witness_composites(n);
    t.expect(!(via_s == via_t), "composites differ");
  }
  return t.outcome();
}

// ---- 5 ----

Outcome induced() {
  Tally t;
  for (const char* a : {"t", "t^2", "t*x", "1/(t+1)"}) {
    const RationalFunction v = parse(a);
    t.expect(induced_derivation(field(), v) == field()->derive(v, field()->parameter()), a);
  }
  return t.outcome();
}

// ---- 6 ----

Outcome hopf_axioms() {
  Tally t;
  for (std::uint32_t p = 0; p <= 2; ++p) t.expect(hopf_check(gl_hopf(field(), 1, p), p).passed, "GL_1");
  const DiffHopfAlgebra gl2 = gl_hopf(field(), 2, 1);
  t.expect(hopf_check(gl2, 1).passed, "GL_2");
  const auto corrupted = gl2.with_comult(1, 0, gl_entry(gl2, 0, 1) * gl_entry(gl2, 0, 1, 0, 1));
  const AxiomReport r = hopf_check(corrupted, 1);
  t.expect(!r.passed && r.detail.find("X12") != std::string::npos, "corrupted comultiplication named");
  return t.outcome();
}

// ---- 7 ----

constexpr std::size_t kReconstructDepth = 3;
constexpr std::uint32_t kReconstructOrder = 4;
constexpr int kReconstructSamples = 50;
constexpr int kDiffdualSamplesGl2 = 10;

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  Vector v(n);
  for (auto& a : v) a = testing::random_rational(rng, 2, 1);
  return v;
}

MatrixCoefficient sample(std::mt19937_64& rng, const std::vector<ObjectPtr>& pool) {
  const auto& o = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
  return coefficient(o, random_vector(rng, o->dim()), random_vector(rng, o->dim()));
}

std::vector<ObjectPtr> objects_up_to(const HopfPtr& h, std::size_t depth) {
  const std::size_t n = *h->matrix_size();
  return enumerate_objects(DerivedObject::base(h, DiffModule(field(), RFMatrix(n, n))), depth);
}

Outcome reconstruction() {
  Tally t;
  const auto h = std::make_shared<const DiffHopfAlgebra>(gl_hopf(field(), 2, kReconstructOrder));
  const DiffAlgebra& alg = h->algebra();
  const auto pool = objects_up_to(h, kReconstructDepth);
  std::mt19937_64 rng(7007);
  for (int s = 0; s < kReconstructSamples; ++s) {
    const auto a = sample(rng, pool);
    const auto b = sample(rng, pool);
    t.expect(realize(coeff_mult(a, b)) == alg.normalize(realize(a) * realize(b)), "multiplicative");
    t.expect(realize(coeff_derive(a)) == alg.derive(realize(a)), "realize o derive = d o realize");
    t.expect(check_product_rule(a, b).passed, "product rule");
    t.expect(check_differential_evaluation(a).passed, "differential evaluation");
  }
  for (int s = 0; s < kDiffdualSamplesGl2; ++s) t.expect(check_diffdual(sample(rng, pool)).passed, "diffdual GL_2");

  const auto h1 = std::make_shared<const DiffHopfAlgebra>(gl_hopf(field(), 1, kReconstructOrder));
  for (const auto& o : objects_up_to(h1, kReconstructDepth)) {
    const std::size_t d = o->dim();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        Vector v(d), u(d);
        v[i] = 1;
        u[j] = 1;
        t.expect(check_diffdual(coefficient(o, v, u)).passed, "diffdual GL_1");
      }
    }
  }
  auto o = t.outcome();
  o.note += "; pool " + std::to_string(pool.size()) + " objects";
  return o;
}

// ---- 8 ----

Outcome group_points() {
  Tally t;
  const auto h1 = std::make_shared<const DiffHopfAlgebra>(gl_hopf(field(), 1, 2));
  const auto h2 = std::make_shared<const DiffHopfAlgebra>(gl_hopf(field(), 2, 2));
  const auto objects1 = objects_up_to(h1, 2);
  const auto objects2 = objects_up_to(h2, 2);
  RFMatrix unipotent = rf_identity(2);
  unipotent(0, 1) = parse("t");
  const GroupPoint scalar = group_point(field(), RFMatrix(1, 1, {parse("t")}));
  t.expect(check_group_point(group_point(field(), rf_identity(1)), objects1).passed, "g = I (n=1)");
  t.expect(check_group_point(group_point(field(), rf_identity(2)), objects2).passed, "g = I (n=2)");
  t.expect(check_group_point(scalar, objects1).passed, "g = [t]");
  t.expect(check_group_point(group_point(field(), unipotent), objects2).passed, "g = [[1,t],[0,1]]");

  const auto& alg = *scalar.algebra;
  const ObjectPtr fx = DerivedObject::prolong(objects1.front());
  const PolyMatrix expected(2, 2, {alg.constant(parse("t")), alg.one(), alg.constant(parse("0")), alg.constant(parse("t"))});
  t.expect(evaluate_at(scalar, fx) == expected, "lambda_F(X) = [[t,1],[0,t]]");
  const PolyMatrix corrupted(2, 2, {alg.constant(parse("t")), alg.constant(parse("0")), alg.constant(parse("0")),
                                    alg.constant(parse("t"))});
  const AxiomReport negative = check_group_point(scalar, objects1, {{fx->to_string(), corrupted}});
  t.expect(!negative.passed && negative.detail.rfind("CommuteWithD", 0) == 0, "corrupted lambda_F(X) detected");
  return t.outcome();
}

// ---- 9 ----

cli::Json suite_reports(std::uint64_t seed) {
  const cli::Json field_spec = cli::Json::parse(
      R"({"vars": ["x", "t"], "derivations": {"dx": {"x": "1"}, "dt": {"t": "1"}}, "principal": "dx", "parameter": "dt"})");
  std::mt19937_64 rng(seed);
  cli::Json all = cli::Json::array();
  auto run = [&](const std::string& command, cli::Json modules, cli::Json options) {
    options["seed"] = seed;
    cli::Json job{{"field", field_spec}, {"modules", std::move(modules)}, {"command", command}, {"options", options}};
    all.push_back(cli::run(cli::parse_job(job)).body);
  };
  auto module_json = [&](std::size_t n) {
    const RFMatrix a = testing::random_system(rng, n);
    cli::Json rows = cli::Json::array();
    for (std::size_t r = 0; r < n; ++r) {
      cli::Json row = cli::Json::array();
      for (std::size_t c = 0; c < n; ++c) row.push_back(field()->print(a(r, c)));
      rows.push_back(row);
    }
    return cli::Json{{"name", "M" + std::to_string(n)}, {"matrix", rows}};
  };
  for (const Dims d : kSuiteDims) {
    const cli::Json pair = cli::Json::array({module_json(d.n), module_json(d.m)});
    run("prolong", pair, cli::Json::object());
    run("tensor", pair, cli::Json::object());
    run("dual", pair, cli::Json::object());
    run("verify", pair, cli::Json::object());
    run("verify", pair, {{"trivial", true}});
  }
  run("hopf-check", cli::Json::array(), {{"n", 2}, {"order", 1}});
  run("reconstruct-check", cli::Json::array({module_json(2)}), {{"samples", 10}});
  run("group-point", cli::Json::array(), cli::Json{{"point", cli::Json::parse(R"([["1", "t"], ["0", "1"]])")}});
  return all;
}

Outcome determinism() {
  const std::string first = suite_reports(9009).dump(2);
  const std::string second = suite_reports(9009).dump(2);
  const std::string other = suite_reports(9010).dump(2);
  Tally t;
  t.expect(first == second, "byte-identical reports");
  t.expect(first != other, "seed changes the report");
  auto o = t.outcome();
  o.note += "; " + std::to_string(first.size()) + " bytes";
  return o;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "prolongation of [t*x] and exactness on 20 random systems", 10, prolongation);
  ok &= report(2, "diagram suite, differential mode, 4 dim pairs x 10 instances x 7 checks", 60, five_diagrams);
  ok &= report(3, "witness: ev o S gives 0, ev o (id (x) D^-1) o T gives 2", kNoLimit, witness_values);
  ok &= report(4, "diagram suite, trivial mode, and induced derivation 0", 60, trivial_mode);
  ok &= report(5, "induced derivation equals dt on t, t^2, t*x, 1/(t+1)", kNoLimit, induced);
  ok &= report(6, "Hopf axioms for GL_1 (p <= 2), GL_2 (p = 1), corrupted comultiplication", 30, hopf_axioms);
  ok &= report(7, "reconstruction over GL_2 and GL_1 objects of depth <= 3", 120, reconstruction);
  ok &= report(8, "group points I, [t], [[1,t],[0,1]] and a corrupted prolongation", kNoLimit, group_points);
  ok &= report(9, "identical seeds give byte-identical JSON reports", kNoLimit, determinism);
  return ok ? 0 : 1;
}
