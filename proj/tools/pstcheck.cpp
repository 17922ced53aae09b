// Command-line front end: verify theorems over a corpus, query one predicate,
// or list the corpus inventory.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pst.hpp"

namespace
{

enum Exit
{
  clean = 0,
  counterexample = 1,
  usage = 2,
  cap = 3
};

std::vector<std::string> split_commas(std::string const &s)
{
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (auto t = pst::detail::trim(item); !t.empty())
      out.push_back(t);
  return out;
}

std::vector<std::size_t> parse_orders(std::string const &s)
{
  std::vector<std::size_t> out;
  for (auto const &t : split_commas(s)) {
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), n);
    if (ec != std::errc() || ptr != t.data() + t.size())
      throw pst::usage_error("not an order: " + t);
    out.push_back(n);
  }
  return out;
}

struct CorpusOptions
{
  std::size_t max_order = 60;
  std::string families = "all";
  std::string exclude;
  std::vector<std::string> files;

  void attach(CLI::App *app)
  {
    app->add_option("--max-order", max_order, "Largest group order")->capture_default_str();
    app->add_option("--families", families, "Comma-separated families or 'all'")
      ->capture_default_str();
    app->add_option("--exclude-orders", exclude, "Comma-separated orders to skip");
    app->add_option("--group-file", files, "Extra group file(s) to ingest");
  }

  pst::CorpusSpec spec() const
  {
    pst::CorpusSpec s;
    s.max_order = max_order;
    if (families != "all")
      s.families = split_commas(families);
    s.exclusions = parse_orders(exclude);
    s.external_files = files;
    return s;
  }
};

void write_output(std::string const &text, std::string const &path)
{
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw pst::usage_error("cannot write " + path);
  out << text;
}

int run_check(std::string const &file, std::string const &name, std::string const &gens,
              std::string const &kind_name, std::size_t cap)
{
  auto kind = pst::parse_permutability_kind(kind_name);
  if (!kind)
    throw pst::usage_error("unknown kind '" + kind_name + "'");
  auto groups = file.empty() ? pst::builtin_corpus() : pst::parse_group_file(file);
  auto it = std::find_if(groups.begin(), groups.end(),
                         [&](pst::Group const &g) { return g.name() == name; });
  if (it == groups.end())
    throw pst::usage_error("no group named '" + name + "'");
  auto G = std::make_shared<pst::Group const>(std::move(*it));
  auto perms = pst::detail::parse_cycle_lists(gens, G->degree(), 1, 1);
  std::vector<pst::Elem> seed;
  for (auto const &p : perms) {
    auto e = G->find(p);
    if (!e)
      throw pst::usage_error("generator " + p.to_cycle_string() + " is not in " + name);
    seed.push_back(*e);
  }
  pst::Analysis an(G, cap);
  auto H = an.lattice().index_of(pst::subgroup_closure(*G, seed));
  auto v = pst::permutability_status(an, H, *kind);
  std::cout << name << " H=<" << gens << "> order " << an.order(H) << ": "
            << kind_name << " = " << (v.holds ? "true" : "false") << "\n";
  if (v.holds && v.witness_B) {
    auto w = pst::make_witness(an, "B", *v.witness_B);
    std::cout << "  witness B of order " << w.order << " generated by";
    for (auto const &g : w.generators)
      std::cout << " " << g;
    std::cout << "\n";
  } else if (!v.refutation.empty()) {
    std::cout << "  " << v.refutation << "\n";
  }
  return clean;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Permutability and theorem checker for small finite groups"};
  app.require_subcommand(1);

  auto *verify = app.add_subcommand("verify", "Run theorem checkers over the corpus");
  CorpusOptions vopts;
  vopts.attach(verify);
  std::string statements = "all", format = "text", out_path;
  std::size_t jobs = 1, cap = pst::default_lattice_cap;
  bool timing = false, mutate = false;
  verify->add_option("--statements", statements,
                     "Comma-separated tags (A,B,C,D,P1,AUX), statement ids or 'all'")
    ->capture_default_str();
  verify->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  verify->add_option("--format", format, "text or json")
    ->check(CLI::IsMember({"text", "json"}))
    ->capture_default_str();
  verify->add_option("--out", out_path, "Write the report here instead of stdout");
  verify->add_option("--lattice-cap", cap, "Largest group order analysed")
    ->capture_default_str();
  verify->add_flag("--timing", timing, "Record elapsed_ms per report");
  verify->add_flag("--mutate", mutate, "Corrupt one predicate (harness self-test)");

  auto *check = app.add_subcommand("check", "Query one permutability predicate");
  std::string file, name, subgroup, kind;
  check->add_option("--group-file", file, "Group file (default: built-in corpus)");
  check->add_option("--name", name, "Group name")->required();
  check->add_option("--subgroup", subgroup, "Generators in cycle notation")->required();
  check->add_option("--kind", kind, "Predicate, e.g. quasipermutable")->required();
  check->add_option("--lattice-cap", cap, "Largest group order analysed")->capture_default_str();

  auto *corpus = app.add_subcommand("corpus", "Corpus inventory");
  auto *list = corpus->add_subcommand("list", "Print order and name of each group");
  corpus->require_subcommand(1);
  CorpusOptions lopts;
  lopts.attach(list);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    auto code = app.exit(e);
    return code == 0 ? clean : usage;
  }

  try {
    if (*verify) {
      pst::RunConfig config;
      config.statements = split_commas(statements);
      config.jobs = jobs;
      config.format = format == "json" ? pst::OutputFormat::json : pst::OutputFormat::text;
      config.timing = timing;
      config.mutate = mutate;
      config.lattice_cap = cap;
      pst::select_statements(config.statements); // reject unknown tags before building
      auto groups = pst::builtin_corpus(vopts.spec());
      auto res = pst::run_verification(groups, config);
      write_output(config.format == pst::OutputFormat::json ? pst::format_json(res.reports)
                                                            : pst::format_text(res),
                   out_path);
      if (!out_path.empty() || config.format == pst::OutputFormat::json)
        std::cerr << pst::summary_line(res) << "\n";
      return res.exit_code;
    }
    if (*check)
      return run_check(file, name, subgroup, kind, cap);
    if (*list) {
      auto groups = pst::builtin_corpus(lopts.spec());
      for (auto const &g : groups)
        std::cout << g.order() << "\t" << g.name() << "\n";
      std::cout << groups.size() << " groups\n";
      return clean;
    }
  } catch (pst::parse_error const &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return usage;
  } catch (pst::usage_error const &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return usage;
  } catch (pst::validation_error const &e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return usage;
  } catch (pst::size_limit_error const &e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return cap;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return counterexample;
  }
  return clean;
}
