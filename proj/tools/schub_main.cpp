// schub: exact Schubert calculus on flag manifolds from the command line.

#include <iostream>

#include "CLI11.hpp"
#include "schub/request.hpp"

namespace {

using schub::Request;

void add_group_options(CLI::App* cmd, Request& req) {
  cmd->add_option("--type", req.type_tag,
                  "built-in Cartan type (A1.., B2.., C2.., D2.., G2)");
  cmd->add_option("--gcm", req.gcm_path,
                  "generalized Cartan matrix file (line 1: n; then n rows)");
}

void add_uvw_options(CLI::App* cmd, Request& req, bool with_u) {
  if (with_u) {
    cmd->add_option("--u", req.u_word, "word for u, e.g. \"1 2 1\"");
    cmd->add_option("--u-perm", req.u_perm, "one-line permutation (type A)");
  }
  cmd->add_option("--v", req.v_word, "word for v");
  cmd->add_option("--v-perm", req.v_perm, "one-line permutation (type A)");
  cmd->add_option("--w", req.w_word,
                  "word for w; doubles as the summation word Q");
  cmd->add_option("--w-perm", req.w_perm, "one-line permutation (type A)");
}

void add_common(CLI::App* cmd, Request& req) {
  cmd->add_option("--format", req.format, "output format: text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--threads", req.threads,
                  "worker threads (0 = SCHUB_THREADS or hardware)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "schub: equivariant Schubert structure constants, point restrictions, "
      "Bott-Samelson calculus, and verification suites, in exact arithmetic"};
  app.require_subcommand(1);

  Request req;

  auto* c = app.add_subcommand("c", "cohomology structure constant c_{uv}^w");
  auto* a = app.add_subcommand("a", "K-theory constant a_{uv}^w (ideal basis)");
  auto* a0 = app.add_subcommand(
      "a0", "K-theory constant a-circle_{uv}^w (structure basis)");
  for (CLI::App* cmd : {c, a, a0}) {
    add_group_options(cmd, req);
    add_uvw_options(cmd, req, true);
    add_common(cmd, req);
  }

  auto* restrict_cmd =
      app.add_subcommand("restrict", "point restriction of a class at w");
  add_group_options(restrict_cmd, req);
  add_uvw_options(restrict_cmd, req, false);
  restrict_cmd->add_option("--theory", req.theory,
                           "H | K-ideal | K-structure");
  add_common(restrict_cmd, req);

  auto* recurse = app.add_subcommand(
      "recurse", "c_{uv}^w by the length-lowering recursion");
  add_group_options(recurse, req);
  add_uvw_options(recurse, req, true);
  recurse->add_option("--alpha", req.alpha,
                      "first reflection to peel (1-based; default: automatic)");
  add_common(recurse, req);

  auto* bs = app.add_subcommand(
      "bs", "Bott-Samelson structure constants and restrictions");
  add_group_options(bs, req);
  bs->add_option("--q", req.q_word, "ambient word Q");
  bs->add_option("--r", req.r_mask, "subword mask of R, e.g. 110");
  bs->add_option("--s", req.s_mask, "subword mask of S");
  bs->add_option("--j", req.j_mask, "subword mask of J");
  bs->add_option("--l", req.l_mask, "fixed-point mask L (with --restrict)");
  bs->add_flag("--restrict", req.bs_restrict_mode,
               "compute the restriction of the dual class J at L");
  bs->add_option("--theory", req.theory, "H | K-ideal | K-structure");
  add_common(bs, req);

  auto* table = app.add_subcommand(
      "table", "stream all structure constants of a finite type");
  add_group_options(table, req);
  table->add_option("--theory", req.theory, "H | K-ideal | K-structure");
  add_common(table, req);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_group_options(verify, req);
  verify->add_option("--suite", req.suite,
                     "examples | braid | oracle | woodshole | all")
      ->check(CLI::IsMember({"examples", "braid", "oracle", "woodshole",
                             "all"}));
  verify->add_option("--kind", req.kind,
                     "operator kind for --suite braid "
                     "(J|Xi|XiCirc|L|Lambda|LambdaCirc)");
  verify->add_option("--seed", req.seed, "seed for sampled checks");
  verify->add_option("--samples", req.samples,
                     "rational samples per word (woodshole)");
  verify->add_option("--max-len", req.max_word_len,
                     "max ambient word length (woodshole)");
  verify->add_flag("--enable-g2", req.enable_g2,
                   "attempt the sextuple braid relation for L over G2");
  verify->add_option("--term-budget", req.term_budget,
                     "abort operator products beyond this many terms");
  add_common(verify, req);

  CLI11_PARSE(app, argc, argv);

  if (c->parsed()) req.command = Request::Command::C;
  else if (a->parsed()) req.command = Request::Command::A;
  else if (a0->parsed()) req.command = Request::Command::A0;
  else if (restrict_cmd->parsed()) req.command = Request::Command::Restrict;
  else if (recurse->parsed()) req.command = Request::Command::Recurse;
  else if (bs->parsed()) req.command = Request::Command::BS;
  else if (table->parsed()) req.command = Request::Command::Table;
  else if (verify->parsed()) req.command = Request::Command::Verify;

  return schub::run_request(req, std::cout, std::cerr);
}
