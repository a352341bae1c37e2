// qdeform: exact construction and verification of cocycle deformations of
// bosonized diagonal data.  See README.md for the config format and the
// preset list.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qdeform/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "qdeform: graded Hopf algebras from diagonal data, their linking "
      "deformations, the cleft object and its 2-cocycle, and the quantum "
      "double presentation"};
  app.require_subcommand(1);

  std::string preset, spec_path, emit, target, expression, verify_target;
  int max_degree = -1, prim_degree = -1;
  bool quotient = false, do_verify = false, parallel = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--preset", preset, "built-in preset name");
    cmd->add_option("--spec", spec_path, "path to a spec config file");
    cmd->add_option("--max-degree", max_degree, "per-command depth");
    cmd->add_flag("--parallel", parallel, "use the OpenMP kernels");
  };

  CLI::App* build = app.add_subcommand("build", "construct and dump the rule sets");
  add_common(build);
  build->add_option("--emit", emit, "rules");

  CLI::App* red = app.add_subcommand("reduce", "normal form of an expression");
  add_common(red);
  red->add_option("expression", expression, "expression to reduce")->required();
  red->add_option("--target", target, "h | hlambda | cleft");

  CLI::App* dims = app.add_subcommand("dims", "graded dimension table H vs H^lambda");
  add_common(dims);

  CLI::App* prim = app.add_subcommand("primitives", "primitive elements of a degree");
  add_common(prim);
  prim->add_option("--degree", prim_degree, "letter degree to search");

  CLI::App* def = app.add_subcommand("deform", "extract the 2-cocycle sigma");
  add_common(def);
  def->add_option("--emit", emit, "cocycle");

  CLI::App* dbl = app.add_subcommand("double", "generalized quantum double");
  add_common(dbl);
  dbl->add_flag("--quotient", quotient, "quotient by g_j' g_j^-1 - 1");
  dbl->add_flag("--verify", do_verify, "check the quotient against H^lambda");

  CLI::App* ver = app.add_subcommand("verify", "structural verification suites");
  add_common(ver);
  ver->add_option("what", verify_target, "hopf | cocycle | double | confluence | all")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (preset.empty() && spec_path.empty())
      throw qdeform::error("pass --preset NAME or --spec FILE");
    qdeform::JobSpec job =
        qdeform::load_spec(preset.empty() ? spec_path : preset);

    qdeform::RunOptions opts;
    opts.command = app.get_subcommands().front()->get_name();
    opts.argument = opts.command == "verify" ? verify_target : expression;
    opts.max_degree = max_degree;
    opts.degree = prim_degree;
    opts.emit = emit;
    opts.target = target;
    opts.quotient = quotient;
    opts.verify = do_verify;
    opts.policy = parallel ? qdeform::ExecPolicy::openmp
                           : qdeform::ExecPolicy::serial;

    qdeform::RunResult result = qdeform::run(job, opts);
    std::cout << result.report;
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
