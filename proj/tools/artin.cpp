#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using artin::cli::Config;
  CLI::App app{"Geodesic word reduction in Artin groups without A3 or B3 subdiagrams"};
  app.require_subcommand(1);
  Config cfg;

  auto with_pres = [&](CLI::App* c) { c->add_option("-p,--presentation", cfg.presentation, "presentation file")->required(); };
  auto words = [&](CLI::App* c, std::size_t n) {
    auto* o = c->add_option("words", cfg.words, "words in text syntax")->required();
    if (n) o->expected(static_cast<int>(n));
  };

  auto* reduce = app.add_subcommand("reduce", "print the geodesic representative of each word");
  with_pres(reduce);
  words(reduce, 0);
  reduce->add_flag("--memoized", cfg.memoized, "memoized suffix search");
  reduce->add_flag("--trace", cfg.trace, "print the step trace to stderr");

  auto* trace = app.add_subcommand("trace", "print the procedure trace of every appended letter that triggers a move");
  with_pres(trace);
  words(trace, 1);
  trace->add_flag("--oracle-check", cfg.oracle_check, "check each move against exhaustive enumeration");
  trace->add_flag("--memoized", cfg.memoized, "memoized suffix search");

  auto* equal = app.add_subcommand("equal", "decide whether two words are equal");
  with_pres(equal);
  words(equal, 2);
  equal->add_option("--oracle-cap", cfg.oracle_cap, "also run breadth-first search up to this word length");

  auto* geodesic = app.add_subcommand("geodesic", "decide whether a word is geodesic");
  with_pres(geodesic);
  words(geodesic, 1);

  auto* check = app.add_subcommand("check-diagram", "list A3 and B3 subdiagrams");
  check->add_option("presentation", cfg.presentation, "presentation file")->required();

  for (const char* name : {"find-rrs", "enumerate-rrs"}) {
    auto* c = app.add_subcommand(name, std::string(name) == "find-rrs"
                                           ? "optimal reducing sequence ending at the last letter"
                                           : "all reducing sequences of a word (at most 14 letters)");
    with_pres(c);
    words(c, 1);
    c->add_flag("--bypass-diagram-check", cfg.bypass_diagram_check, "run even if the diagram has A3/B3 subdiagrams");
  }

  auto* bench = app.add_subcommand("bench", "time reduction of random words");
  with_pres(bench);
  bench->add_option("--lengths", cfg.lengths, "word lengths")->delimiter(',');
  bench->add_option("--seed", cfg.seed, "random seed");
  bench->add_option("--samples", cfg.samples, "words per length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : artin::cli::kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return artin::cli::run(cfg, std::cout, std::cerr);
}
