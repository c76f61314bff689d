#include <CLI11.hpp>

#include <iostream>

#include "dtc/cli/job.hpp"
#include "dtc/errors.hpp"

// Exit status: 0 all checks pass, 1 a check fails, 2 the input is unusable.
int main(int argc, char** argv) {
  CLI::App app{"Exact constructions and checks for parametrized linear differential systems"};
  std::vector<std::string> positional;
  std::optional<std::uint32_t> order;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> cap;
  bool trivial = false;
  std::optional<std::string> format;
  app.add_option("args", positional, "[command] job.json; the command overrides the job's command")
      ->required()
      ->expected(1, 2);
  app.add_option("--order", order, "truncation order");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--cap", cap, "dimension cap");
  app.add_flag("--trivial", trivial, "use the trivial prolongation F(X) = X + X");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    dtc::cli::JobSpec job = dtc::cli::load_job(positional.back());
    if (positional.size() == 2) {
      job.command = positional.front();
      const auto& known = dtc::cli::kCommands;
      if (std::find(std::begin(known), std::end(known), job.command) == std::end(known)) {
        throw dtc::SchemaError("'" + job.command + "' is not a supported command");
      }
    }
    if (order) job.options.order = *order;
    if (seed) job.options.seed = *seed;
    if (cap) job.options.cap = *cap;
    if (trivial) job.options.trivial = true;
    if (format) job.options.format = *format;
    const dtc::cli::Report report = dtc::cli::run(job);
    std::cout << dtc::cli::render(report, job.options.format);
    return report.passed ? 0 : 1;
  } catch (const dtc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
