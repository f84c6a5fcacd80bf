#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

using stopset::cli::OutputFormat;

namespace {

const std::map<std::string, OutputFormat> kFormats{
    {"text", OutputFormat::Text}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};

void add_format(CLI::App* cmd, OutputFormat& target) {
  cmd->add_option("--format", target, "Output format: text, json or csv")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case).description(""))
      ->option_text("TEXT:{text,json,csv}");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stopping set and weight enumerators of binary parity-check matrices"};
  app.require_subcommand(1);

  stopset::cli::HammingArgs hamming;
  auto* h = app.add_subcommand("hamming", "Stopping set enumerator of the full-rank Hamming matrix");
  h->add_option("--m", hamming.m, "Number of parity checks (code length 2^m - 1)")->required();
  h->add_option("--method", hamming.method, "theorem2, doublesum, inclusion-exclusion or brute")
      ->check(CLI::IsMember({"theorem2", "doublesum", "inclusion-exclusion", "brute"}));
  h->add_option("--upto", hamming.upto, "Largest coefficient index to print");
  h->add_option("--workers", hamming.workers, "Brute-force worker threads (0 = all cores)");
  add_format(h, hamming.format);

  stopset::cli::EnumerateArgs enumerate;
  auto* e = app.add_subcommand("enumerate", "Enumerator of a parity-check matrix file");
  e->add_option("matrix_file", enumerate.matrix_file, "One row of 0/1 characters per line")
      ->required();
  e->add_option("--kind", enumerate.kind, "stopping or weight")
      ->check(CLI::IsMember({"stopping", "weight"}));
  e->add_option("--method", enumerate.method, "brute or inclusion-exclusion")
      ->check(CLI::IsMember({"brute", "inclusion-exclusion"}));
  e->add_option("--workers", enumerate.workers, "Brute-force worker threads (0 = all cores)");
  add_format(e, enumerate.format);

  stopset::cli::BTableArgs btable;
  auto* b = app.add_subcommand("btable", "Table of the coefficients b(q,v)");
  b->add_option("--qmax", btable.qmax, "Largest q (<= 64)");
  b->add_option("--vmax", btable.vmax, "Largest v (<= 64)");
  add_format(b, btable.format);

  stopset::cli::PeelArgs peel;
  auto* p = app.add_subcommand("peel", "Run the peeling decoder on one erasure pattern");
  p->add_option("matrix_file", peel.matrix_file, "Parity-check matrix file")->required();
  p->add_option("--erase", peel.erase, "Comma-separated 1-based erased positions")->required();
  add_format(p, peel.format);

  stopset::cli::BecArgs bec;
  auto* c = app.add_subcommand("bec", "Peeling failure probability on the binary erasure channel");
  c->add_option("matrix_file", bec.matrix_file, "Parity-check matrix file")->required();
  c->add_option("--epsilon", bec.epsilon, "Erasure probability")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  c->add_flag("--exact", bec.exact, "Exact value from all 2^n erasure patterns");
  c->add_option("--trials", bec.trials, "Monte Carlo trials");
  c->add_option("--seed", bec.seed, "Monte Carlo seed");
  c->add_option("--workers", bec.workers, "Monte Carlo worker threads (0 = all cores)");
  add_format(c, bec.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : stopset::cli::kUsage;
  }

  return stopset::cli::guarded(std::cerr, [&]() -> int {
    if (*h) return stopset::cli::cmd_hamming(hamming, std::cout, std::cerr);
    if (*e) return stopset::cli::cmd_enumerate(enumerate, std::cout, std::cerr);
    if (*b) return stopset::cli::cmd_btable(btable, std::cout, std::cerr);
    if (*p) return stopset::cli::cmd_peel(peel, std::cout, std::cerr);
    return stopset::cli::cmd_bec(bec, std::cout, std::cerr);
  });
}
