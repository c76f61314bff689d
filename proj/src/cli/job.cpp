#include "dtc/cli/job.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "dtc/errors.hpp"
#include "dtc/hopf/hopf.hpp"
#include "dtc/reconstruct/reconstruct.hpp"
#include "dtc/structmaps/struct_maps.hpp"

namespace dtc::cli {

namespace {

// ---- input ----

class Reader {
 public:
  Reader(const Json& node, std::string path) : node_(node), path_(std::move(path)) {}

  const Json& node() const { return node_; }
  const std::string& path() const { return path_; }

  bool has(const char* key) const { return node_.contains(key); }

  Reader at(const char* key) const {
    if (!node_.contains(key)) throw SchemaError("missing key " + path_ + "/" + key);
    return Reader(node_.at(key), path_ + "/" + key);
  }
  Reader at(std::size_t i) const { return Reader(node_.at(i), path_ + "/" + std::to_string(i)); }

  const Json& expect(Json::value_t type, const char* what) const {
    const bool ok = type == Json::value_t::number_unsigned
                        ? node_.is_number_unsigned() || (node_.is_number_integer() && node_.get<std::int64_t>() >= 0)
                        : node_.type() == type;
    if (!ok) throw SchemaError(path_ + " must be " + what);
    return node_;
  }
  std::string string() const { return expect(Json::value_t::string, "a string").get<std::string>(); }
  std::uint64_t natural() const {
    return expect(Json::value_t::number_unsigned, "a non-negative integer").get<std::uint64_t>();
  }
  bool boolean() const { return expect(Json::value_t::boolean, "a boolean").get<bool>(); }
  const Json& array() const { return expect(Json::value_t::array, "an array"); }
  const Json& object() const { return expect(Json::value_t::object, "an object"); }

 private:
  const Json& node_;
  std::string path_;
};

FieldPtr read_field(const Reader& spec) {
  spec.object();
  std::vector<std::string> vars;
  const Reader vars_node = spec.at("vars");
  for (std::size_t i = 0; i < vars_node.array().size(); ++i) vars.push_back(vars_node.at(i).string());
  const Reader derivations = spec.at("derivations");
  derivations.object();
  const std::string principal = spec.at("principal").string();
  std::optional<std::string> parameter;
  if (spec.has("parameter")) parameter = spec.at("parameter").string();

  // Values are parsed in Q(vars); derivations do not affect parsing.
  FieldPtr plain;
  try {
    plain = DiffField::create(vars, {{principal, std::vector<RationalFunction>(vars.size())}}, principal, std::nullopt);
  } catch (const Error& e) {
    throw SchemaError(spec.path() + ": " + e.what());
  }
  std::vector<DerivationSpec> specs;
  for (const auto& [name, values] : derivations.node().items()) {
    const Reader entry(values, derivations.path() + "/" + name);
    entry.object();
    DerivationSpec d{name, std::vector<RationalFunction>(vars.size())};
    for (const auto& [var, expr] : values.items()) {
      const Reader value(expr, entry.path() + "/" + var);
      std::size_t index = 0;
      try {
        index = plain->variable_index(var);
      } catch (const UnknownName&) {
        throw SchemaError("unknown variable at " + value.path());
      }
      try {
        d.on_generators[index] = plain->parse(value.string());
      } catch (const SchemaError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError("derivation value at " + value.path() + ": " + e.what());
      }
    }
    specs.push_back(std::move(d));
  }
  try {
    return DiffField::create(vars, std::move(specs), principal, parameter);
  } catch (const Error& e) {
    throw SchemaError(spec.path() + ": " + e.what());
  }
}

RFMatrix read_matrix(const Reader& node, const DiffField& field, const std::string& label) {
  const Json& rows = node.array();
  if (rows.empty()) throw SchemaError(node.path() + " must be a nonempty matrix");
  const std::size_t width = node.at(std::size_t{0}).array().size();
  RFMatrix m(rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Reader row = node.at(r);
    if (row.array().size() != width) throw SchemaError(row.path() + " has a different length than row 0");
    for (std::size_t c = 0; c < width; ++c) {
      const std::string text = row.at(c).string();
      try {
        m(r, c) = field.parse(text);
      } catch (const Error& e) {
        throw ParseError(label + " entry (" + std::to_string(r) + "," + std::to_string(c) + ") '" + text +
                         "': " + e.what());
      }
    }
  }
  return m;
}

bool is_command(const std::string& c) {
  return std::find(std::begin(kCommands), std::end(kCommands), c) != std::end(kCommands);
}

JobOptions read_options(const Reader& node, const DiffField& field) {
  JobOptions o;
  node.object();
  for (const auto& [key, value] : node.node().items()) {
    static const char* known[] = {"order", "seed", "cap", "trivial", "format", "n", "point", "depth", "samples"};
    if (std::find_if(std::begin(known), std::end(known), [&](const char* k) { return key == k; }) == std::end(known)) {
      throw SchemaError("unknown key " + node.path() + "/" + key);
    }
  }
  if (node.has("order")) o.order = static_cast<std::uint32_t>(node.at("order").natural());
  if (node.has("seed")) o.seed = node.at("seed").natural();
  if (node.has("cap")) o.cap = node.at("cap").natural();
  if (node.has("trivial")) o.trivial = node.at("trivial").boolean();
  if (node.has("format")) {
    o.format = node.at("format").string();
    if (o.format != "json" && o.format != "text") throw SchemaError(node.path() + "/format must be \"json\" or \"text\"");
  }
  if (node.has("n")) {
    o.n = node.at("n").natural();
    if (*o.n == 0) throw SchemaError(node.path() + "/n must be positive");
  }
  if (node.has("point")) o.point = read_matrix(node.at("point"), field, "point");
  if (node.has("depth")) o.depth = node.at("depth").natural();
  if (node.has("samples")) o.samples = node.at("samples").natural();
  return o;
}

// ---- output ----

Json matrix_json(const DiffField& field, const RFMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(field.print(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json poly_matrix_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json report_json(const AxiomReport& r) {
  Json j;
  j["axiom"] = r.axiom;
  j["objects"] = r.objects;
  j["passed"] = r.passed;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.mismatch) {
    j["mismatch"] = {{"row", r.mismatch->row}, {"col", r.mismatch->col}, {"lhs", r.mismatch->lhs}, {"rhs", r.mismatch->rhs}};
  }
  return j;
}

class ReportBuilder {
 public:
  ReportBuilder(const JobSpec& job) {
    report_.body["command"] = job.command;
    report_.body["seed"] = job.options.seed;
    report_.body["order"] = job.options.order;
    report_.body["checks"] = Json::array();
  }

  void check(const AxiomReport& r) {
    report_.body["checks"].push_back(report_json(r));
    all_passed_ = all_passed_ && r.passed;
  }
  void result(const char* key, Json value) { report_.body["result"][key] = std::move(value); }

  Report finish() && {
    const auto& checks = report_.body["checks"];
    const auto passed = std::count_if(checks.begin(), checks.end(), [](const Json& c) { return c["passed"].get<bool>(); });
    report_.body["summary"] = {{"passed", passed}, {"total", checks.size()}};
    report_.passed = all_passed_;
    report_.body["passed"] = all_passed_;
    return std::move(report_);
  }

 private:
  Report report_;
  bool all_passed_ = true;
};

// ---- commands ----

const DiffModule& module_at(const JobSpec& job, std::size_t i) {
  if (job.modules.size() <= i) {
    throw SchemaError("command '" + job.command + "' needs at least " + std::to_string(i + 1) + " module(s) in /modules");
  }
  return job.modules[i].module;
}

ProlongMode mode_of(const JobSpec& job) { return job.options.trivial ? ProlongMode::trivial : ProlongMode::differential; }

Report run_construction(const JobSpec& job) {
  ReportBuilder out(job);
  const DiffField& field = *job.field;
  if (job.command == "prolong") {
    const DiffModule p = prolong(module_at(job, 0), mode_of(job));
    out.result("matrix", matrix_json(field, p.sys()));
    const DiffModule& m = module_at(job, 0);
    out.check(verify_axiom("exactness", m, std::nullopt, {mode_of(job), job.options.cap}));
  } else if (job.command == "tensor") {
    out.result("matrix", matrix_json(field, tensor(module_at(job, 0), module_at(job, 1)).sys()));
  } else {
    out.result("matrix", matrix_json(field, dual(module_at(job, 0)).sys()));
  }
  return std::move(out).finish();
}

Report run_verify(const JobSpec& job) {
  ReportBuilder out(job);
  const DiffModule& m = module_at(job, 0);
  const DiffModule& n = job.modules.size() > 1 ? job.modules[1].module : m;
  const VerifyOptions options{mode_of(job), job.options.cap};
  for (const char* axiom : kAxiomNames) out.check(verify_axiom(axiom, m, n, options));
  return std::move(out).finish();
}

Report run_hopf_check(const JobSpec& job) {
  ReportBuilder out(job);
  const std::size_t n = job.options.n.value_or(job.modules.empty() ? 1 : job.modules.front().module.dim());
  const DiffHopfAlgebra h = gl_hopf(job.field, n, job.options.order);
  out.check(hopf_check(h, job.options.order));
  out.check(comodule_check(h, standard_comodule(h)));
  if (job.options.order >= 1) out.check(comodule_check(h, comodule_prolong(h, standard_comodule(h))));
  return std::move(out).finish();
}

ObjectPtr base_object(const JobSpec& job, const HopfPtr& h, std::size_t n) {
  if (job.modules.empty()) return DerivedObject::base(h, DiffModule(job.field, RFMatrix(n, n)));
  return DerivedObject::base(h, job.modules.front().module);
}

// Small polynomials c0 + sum c_i var_i with c in [-3, 3].
class Sampler {
 public:
  Sampler(const FieldPtr& field, std::uint64_t seed) : field_(field), rng_(seed) {}

  RationalFunction scalar() {
    std::uniform_int_distribution<int> c(-3, 3);
    RationalFunction a(c(rng_));
    for (const auto& v : field_->variables()) a += RationalFunction(c(rng_)) * field_->variable(v);
    return a;
  }
  Vector vector(std::size_t n) {
    Vector v(n);
    for (auto& a : v) a = scalar();
    return v;
  }
  MatrixCoefficient coefficient(const std::vector<ObjectPtr>& pool) {
    const auto& o = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng_)];
    return dtc::coefficient(o, vector(o->dim()), vector(o->dim()));
  }

 private:
  FieldPtr field_;
  std::mt19937_64 rng_;
};

// One report per property, recording the first failing sample.
class PropertyTally {
 public:
  explicit PropertyTally(std::string axiom) { report_ = AxiomReport{std::move(axiom), {}, true, std::nullopt, {}}; }

  void record(const AxiomReport& r, std::size_t sample) {
    ++count_;
    if (!report_.passed || r.passed) return;
    report_.passed = false;
    report_.objects = r.objects;
    report_.mismatch = r.mismatch;
    report_.detail = "sample " + std::to_string(sample) + ": " + r.detail;
  }
  void record(bool ok, const std::string& objects, const DiffPoly& lhs, const DiffPoly& rhs, std::size_t sample) {
    AxiomReport r{report_.axiom, objects, ok, std::nullopt, {}};
    if (!ok) {
      r.mismatch = Mismatch{0, 0, lhs.to_string(), rhs.to_string()};
      r.detail = "sides differ";
    }
    record(r, sample);
  }
  AxiomReport finish() && {
    if (report_.objects.empty()) report_.objects = std::to_string(count_) + " samples";
    return std::move(report_);
  }

 private:
  AxiomReport report_;
  std::size_t count_ = 0;
};

Report run_reconstruct_check(const JobSpec& job) {
  ReportBuilder out(job);
  const std::size_t n = job.options.n.value_or(job.modules.empty() ? 1 : job.modules.front().module.dim());
  const auto h = std::make_shared<const DiffHopfAlgebra>(gl_hopf(job.field, n, job.options.order));
  const DiffAlgebra& alg = h->algebra();
  std::vector<ObjectPtr> pool;
  for (const auto& o : enumerate_objects(base_object(job, h, n), job.options.depth)) {
    if (o->dim() <= job.options.cap) pool.push_back(o);
  }
  if (pool.empty()) throw DimensionCapExceeded("no derived object fits within cap " + std::to_string(job.options.cap));
  Sampler sampler(job.field, job.options.seed);
  PropertyTally mult("multiplicative"), derive("derivation"), product("product-rule"), eval("differential-evaluation"),
      diffdual("diffdual"), comult("comultiplication"), counit("counit"), coinverse("coinverse");
  for (std::size_t s = 0; s < job.options.samples; ++s) {
    const auto a = sampler.coefficient(pool);
    const auto b = sampler.coefficient(pool);
    const std::string names = a.object->to_string() + ", " + b.object->to_string();
    const DiffPoly ra = realize(a);
    const DiffPoly rab = realize(coeff_mult(a, b));
    const DiffPoly expected = alg.normalize(ra * realize(b));
    mult.record(rab == expected, names, rab, expected, s);
    const DiffPoly da = realize(coeff_derive(a));
    const DiffPoly dra = alg.derive(ra);
    derive.record(da == dra, a.object->to_string(), da, dra, s);
    product.record(check_product_rule(a, b), s);
    eval.record(check_differential_evaluation(a), s);
    diffdual.record(check_diffdual(a), s);
    const DiffPoly pairs = realize_pairs(coeff_comult(a));
    const DiffPoly delta = h->apply_comult(ra);
    comult.record(pairs == delta, a.object->to_string(), pairs, delta, s);
    const DiffPoly eps = h->apply_counit(ra);
    const DiffPoly u_of_v = alg.constant(coeff_counit(a));
    counit.record(eps == u_of_v, a.object->to_string(), eps, u_of_v, s);
    const DiffPoly sa = realize(coeff_coinverse(a));
    const DiffPoly s_of_a = h->apply_coinverse(ra);
    coinverse.record(sa == s_of_a, a.object->to_string(), sa, s_of_a, s);
  }
  for (auto* t : {&mult, &derive, &product, &eval, &diffdual, &comult, &counit, &coinverse}) {
    out.check(std::move(*t).finish());
  }
  out.result("objects", pool.size());
  return std::move(out).finish();
}

Report run_group_point(const JobSpec& job) {
  ReportBuilder out(job);
  if (!job.options.point) throw SchemaError("missing key /options/point");
  const RFMatrix& g = *job.options.point;
  if (!g.is_square()) throw SchemaError("/options/point must be square");
  const std::size_t n = g.rows();
  if (!job.modules.empty() && job.modules.front().module.dim() != n) {
    throw SchemaError("/options/point size differs from the dim of the first module");
  }
  const auto h = std::make_shared<const DiffHopfAlgebra>(gl_hopf(job.field, n, job.options.order));
  const GroupPoint point = group_point(job.field, g);
  const ObjectPtr x = base_object(job, h, n);
  std::vector<ObjectPtr> objects;
  for (const auto& o : enumerate_objects(x, job.options.depth)) {
    if (o->dim() <= job.options.cap) objects.push_back(o);
  }
  out.check(check_group_point(point, objects));
  if (job.options.order >= 1) out.result("lambda_prolong", poly_matrix_json(evaluate_at(point, DerivedObject::prolong(x))));
  out.result("objects", objects.size());
  return std::move(out).finish();
}

}  // namespace

JobSpec load_job(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  Json document;
  try {
    document = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path.string() + " is not valid JSON: " + e.what());
  }
  return parse_job(document);
}

JobSpec parse_job(const Json& document) {
  const Reader root(document, "");
  root.object();
  JobSpec job;
  job.field = read_field(root.at("field"));
  job.command = root.at("command").string();
  if (!is_command(job.command)) throw SchemaError("/command '" + job.command + "' is not a supported command");
  if (root.has("modules")) {
    const Reader modules = root.at("modules");
    for (std::size_t i = 0; i < modules.array().size(); ++i) {
      const Reader entry = modules.at(i);
      entry.object();
      const std::string name = entry.has("name") ? entry.at("name").string() : "M" + std::to_string(i);
      RFMatrix m = read_matrix(entry.at("matrix"), *job.field, "module " + name);
      if (!m.is_square()) throw SchemaError(entry.path() + "/matrix must be square");
      try {
        job.modules.push_back({name, DiffModule(job.field, std::move(m))});
      } catch (const Error& e) {
        throw SchemaError(entry.path() + ": " + e.what());
      }
    }
  }
  if (root.has("options")) job.options = read_options(root.at("options"), *job.field);
  return job;
}

Report run(const JobSpec& job) {
  if (job.command == "prolong" || job.command == "tensor" || job.command == "dual") return run_construction(job);
  if (job.command == "verify") return run_verify(job);
  if (job.command == "hopf-check") return run_hopf_check(job);
  if (job.command == "reconstruct-check") return run_reconstruct_check(job);
  if (job.command == "group-point") return run_group_point(job);
  throw SchemaError("unsupported command '" + job.command + "'");
}

namespace {

void render_text(std::ostream& os, const Json& j, const std::string& indent) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << indent << key << ":\n";
      render_text(os, value, indent + "  ");
    } else if (value.is_array() && !value.empty() && value.front().is_array()) {
      os << indent << key << ":\n";
      for (const auto& row : value) os << indent << "  " << row.dump() << '\n';
    } else if (value.is_string()) {
      os << indent << key << ": " << value.get<std::string>() << '\n';
    } else {
      os << indent << key << ": " << value.dump() << '\n';
    }
  }
}

}  // namespace

std::string render(const Report& report, const std::string& format) {
  if (format == "json") return report.body.dump(2) + "\n";
  std::ostringstream os;
  const Json& b = report.body;
  os << "command: " << b["command"].get<std::string>() << '\n';
  for (const auto& c : b["checks"]) {
    os << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["axiom"].get<std::string>() << " ["
       << c["objects"].get<std::string>() << "]";
    if (c.contains("detail")) os << ": " << c["detail"].get<std::string>();
    if (c.contains("mismatch")) {
      const auto& m = c["mismatch"];
      os << " at (" << m["row"].get<std::size_t>() << "," << m["col"].get<std::size_t>()
         << "): " << m["lhs"].get<std::string>() << " vs " << m["rhs"].get<std::string>();
    }
    os << '\n';
  }
  if (b.contains("result")) render_text(os, b["result"], "");
  os << "summary: " << b["summary"]["passed"].get<std::size_t>() << "/" << b["summary"]["total"].get<std::size_t>()
     << " passed\n";
  return os.str();
}

}  // namespace dtc::cli
