#ifndef PST_REPORT_HPP
#define PST_REPORT_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <iomanip>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "analysis.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "theorems.hpp"

namespace pst
{

enum class OutputFormat
{
  text,
  json
};

struct RunConfig
{
  std::vector<std::string> statements{"all"};
  std::size_t jobs = 1;
  OutputFormat format = OutputFormat::text;
  /// Record wall-clock time per report; off by default so output is reproducible.
  bool timing = false;
  /// Harness self-test: corrupt one predicate so Theorem A must fail.
  bool mutate = false;
  /// Largest group order whose lattice may be built.
  std::size_t lattice_cap = default_lattice_cap;
};

struct RunResult
{
  /// Canonical order: corpus order, then statement registry order.
  std::vector<VerificationReport> reports;
  int exit_code = 0;
  std::size_t consistent = 0, vacuous = 0, counterexamples = 0, errors = 0;
  bool cap_exceeded = false;
};

namespace detail
{

inline VerificationReport error_report(Group const &G, std::string const &statement,
                                       std::string const &what)
{
  VerificationReport r;
  r.group = G.name();
  r.order = G.order();
  r.statement = statement;
  r.verdict = Verdict::error;
  r.note = what;
  return r;
}

/// All selected statements on one group; exceptions become ERROR reports.
inline std::vector<VerificationReport>
run_group(std::shared_ptr<Group const> const &G,
          std::vector<Statement const *> const &statements, RunConfig const &config,
          bool &cap_exceeded)
{
  std::vector<VerificationReport> out;
  std::unique_ptr<Analysis> an;
  std::string setup_error;
  try {
    an = std::make_unique<Analysis>(G, config.lattice_cap);
    an->mutation = config.mutate;
  } catch (size_limit_error const &e) {
    cap_exceeded = true;
    setup_error = std::string("resource cap exceeded: ") + e.what();
  } catch (std::exception const &e) {
    setup_error = e.what();
  }
  for (auto const *s : statements) {
    if (!an) {
      out.push_back(error_report(*G, s->id, setup_error));
      continue;
    }
    auto t0 = std::chrono::steady_clock::now();
    try {
      out.push_back(s->run(*an));
    } catch (size_limit_error const &e) {
      cap_exceeded = true;
      out.push_back(error_report(*G, s->id, std::string("resource cap exceeded: ") + e.what()));
    } catch (std::exception const &e) {
      out.push_back(error_report(*G, s->id, e.what()));
    }
    if (config.timing)
      out.back().elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  }
  return out;
}

} // namespace detail

/**
 * Every selected statement on every group.  Workers take whole groups so
 * each group's lattice caches are built once; results are merged in
 * corpus order, so output does not depend on the worker count.
 */
inline RunResult run_verification(std::vector<Group> const &corpus, RunConfig const &config)
{
  auto statements = select_statements(config.statements);
  std::vector<std::shared_ptr<Group const>> groups;
  for (auto const &g : corpus)
    groups.push_back(std::make_shared<Group const>(g));

  std::vector<std::vector<VerificationReport>> slots(groups.size());
  std::vector<char> capped(groups.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto i = next.fetch_add(1); i < groups.size(); i = next.fetch_add(1)) {
      bool cap = false;
      slots[i] = detail::run_group(groups[i], statements, config, cap);
      capped[i] = cap;
    }
  };
  auto jobs = std::clamp<std::size_t>(config.jobs, 1, std::max<std::size_t>(groups.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t j = 1; j < jobs; ++j)
      pool.emplace_back(worker);
    worker();
  }

  RunResult res;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    res.cap_exceeded = res.cap_exceeded || capped[i];
    for (auto &r : slots[i]) {
      switch (r.verdict) {
      case Verdict::consistent:
        ++res.consistent;
        break;
      case Verdict::vacuous:
      case Verdict::inapplicable:
        ++res.vacuous;
        break;
      case Verdict::counterexample:
        ++res.counterexamples;
        break;
      case Verdict::error:
        ++res.errors;
        break;
      }
      res.reports.push_back(std::move(r));
    }
  }
  if (res.counterexamples > 0)
    res.exit_code = 1;
  else if (res.cap_exceeded)
    res.exit_code = 3;
  else if (res.errors > 0)
    res.exit_code = 1;
  return res;
}

inline nlohmann::ordered_json to_json(VerificationReport const &r)
{
  nlohmann::ordered_json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["statement"] = r.statement;
  auto clauses = nlohmann::ordered_json::array();
  for (auto const &[name, value] : r.clauses)
    clauses.push_back({{"name", name}, {"holds", value}});
  j["clauses"] = clauses;
  j["verdict"] = std::string(to_string(r.verdict));
  auto witnesses = nlohmann::ordered_json::array();
  for (auto const &w : r.witnesses)
    witnesses.push_back(
      {{"label", w.label}, {"order", w.order}, {"generators", w.generators}});
  j["witnesses"] = witnesses;
  j["elapsed_ms"] = r.elapsed_ms;
  j["confirmed"] = r.confirmed;
  j["instances"] = r.instances;
  j["note"] = r.note;
  return j;
}

inline std::string format_json(std::vector<VerificationReport> const &reports)
{
  auto arr = nlohmann::ordered_json::array();
  for (auto const &r : reports)
    arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

inline std::string summary_line(RunResult const &res)
{
  return "OK " + std::to_string(res.consistent) + " VACUOUS " +
         std::to_string(res.vacuous) + " FAIL " + std::to_string(res.counterexamples);
}

/// One table per group, then the summary line.
inline std::string format_text(RunResult const &res)
{
  std::ostringstream out;
  std::string current;
  std::size_t current_order = 0;
  for (auto const &r : res.reports) {
    if (r.group != current || r.order != current_order) {
      current = r.group;
      current_order = r.order;
      out << "\n" << r.group << " (order " << r.order << ")\n";
    }
    std::string clauses;
    for (auto const &[name, value] : r.clauses)
      clauses += (clauses.empty() ? "" : " ") + name + "=" + (value ? "T" : "F");
    out << "  " << std::left << std::setw(12) << r.statement << std::setw(15)
        << to_string(r.verdict) << std::setw(4) << (r.confirmed ? "+" : "") << clauses;
    if (!r.note.empty())
      out << "  # " << r.note;
    if (r.elapsed_ms > 0)
      out << "  (" << std::fixed << std::setprecision(2) << r.elapsed_ms << " ms)";
    out << "\n";
  }
  out << "\n" << summary_line(res) << "\n";
  if (res.errors > 0)
    out << "ERROR " << res.errors << "\n";
  return out.str();
}

} // namespace pst

#endif // PST_REPORT_HPP
