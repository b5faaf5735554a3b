#include "cubeforge/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cubeforge/cubeset.hpp"
#include "cubeforge/diag.hpp"
#include "cubeforge/ez.hpp"
#include "cubeforge/parallel.hpp"
#include "cubeforge/reedy.hpp"
#include "cubeforge/report.hpp"
#include "cubeforge/skeletal.hpp"

namespace cubeforge {

namespace {

struct Common {
  std::string site = "cs";
  int max_dim = 3;
  int levels = 4;
  int slack = 2;
  int bound = 12;
  int jobs = 0;
  std::string json_path;
  bool timings = false;
  std::size_t max_maps = EnumOptions{}.max_maps;
};

struct MapArg {
  std::string word;
  int dom = -1;
  std::string table;
  int from = -1, to = -1;

  CubeMap resolve() const {
    if (!word.empty()) {
      if (dom < 0) throw CLI::ValidationError("--word requires --dom");
      return evaluate(parse_word(word, dom));
    }
    if (!table.empty()) {
      if (from < 0 || to < 0) throw CLI::ValidationError("--table requires --from and --to");
      std::vector<std::uint16_t> t;
      std::istringstream in(table);
      std::string item;
      while (std::getline(in, item, ',')) t.push_back(static_cast<std::uint16_t>(std::stoi(item)));
      return CubeMap(from, to, std::move(t));
    }
    throw CLI::ValidationError("specify a map with --word/--dom or --table/--from/--to");
  }
};

void add_map_options(CLI::App* cmd, MapArg& m) {
  cmd->add_option("--word", m.word, "map as a generator word, e.g. 'd1+ . p1'");
  cmd->add_option("--dom", m.dom, "domain dimension of --word");
  cmd->add_option("--table", m.table, "map as a comma-separated vertex table");
  cmd->add_option("--from", m.from, "domain dimension of --table");
  cmd->add_option("--to", m.to, "codomain dimension of --table");
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

CheckReport timed(CheckReport r, Clock::time_point t0) {
  r.wall_ms = ms_since(t0);
  return r;
}

int finish(const SuiteReport& report, const Common& common, std::ostream& out) {
  out << to_text(report);
  if (!common.json_path.empty()) {
    if (common.json_path == "-") {
      out << to_json(report, common.timings).dump(2) << "\n";
    } else {
      std::ofstream f(common.json_path);
      f << to_json(report, common.timings).dump(2) << "\n";
    }
  }
  return report.all_pass() ? 0 : 1;
}

std::vector<CheckReport> run_ordered(std::vector<std::pair<std::string, std::function<CheckReport()>>>& tasks,
                                     int jobs) {
  std::vector<CheckReport> results(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i) {
    const auto t0 = Clock::now();
    try {
      results[i] = tasks[i].second();
    } catch (const ResourceBoundError&) {
      throw;  // surfaces as exit 3
    } catch (const std::exception& e) {
      results[i].fail(std::string("exception: ") + e.what());
    }
    results[i].name = tasks[i].first;
    results[i].wall_ms = ms_since(t0);
  });
  return results;
}

void diag_suite_checks(std::vector<std::pair<std::string, std::function<CheckReport()>>>& tasks,
                       int bound, int slack) {
  for (const auto& cfg : SiteConfig::all_diagonal()) {
    tasks.emplace_back("identify:" + cfg.name(), [cfg, slack] {
      CheckReport r{.name = ""};
      for (const auto& [n, m] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
        auto id = identify_diagonal_site(cfg, n, m, slack);
        r.stats["hom_" + std::to_string(n) + "_" + std::to_string(m)] =
            static_cast<std::int64_t>(id.closure_count);
        if (!id.equal)
          r.fail("closure/description mismatch at (" + std::to_string(n) + "," +
                 std::to_string(m) + ")" +
                 (id.witness ? ": " + id.witness->str() : std::string()));
        if (!id.closure_complete && r.note.empty()) r.note = id.note;
      }
      return r;
    });
    tasks.emplace_back("idempotent-splitting:" + cfg.name(), [cfg] {
      CheckReport r{.name = ""};
      const bool expect_witness = cfg.connections != Connections::none;
      auto witness = find_nonsplit_idempotent(cfg, 2);
      if (expect_witness && !witness)
        r.fail("expected a non-split idempotent, found none");
      if (!expect_witness && witness)
        r.fail("unexpected non-split idempotent: " + witness->str());
      if (witness) r.note = "non-split witness: " + witness->str();
      return r;
    });
    tasks.emplace_back("karoubi:" + cfg.name(), [cfg] {
      auto kr = karoubi_images(cfg, 2, 4);
      return kr.report;
    });
  }
  tasks.emplace_back("karoubi-obstructions", [bound] {
    return factorization_obstructions_check(bound, std::min(bound, 10));
  });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cubeforge: exhaustive verification of finite cube categories"};
  app.set_version_flag("--version", std::string("cubeforge ") + kToolVersion);
  app.require_subcommand(1);

  Common common;
  MapArg map_arg;
  std::string word_f, word_g, file_path;
  int from = 1, to = 0;

  auto add_common = [&](CLI::App* cmd, bool with_site = true) {
    if (with_site) cmd->add_option("--site", common.site, "site spec or alias (default cs)");
    cmd->add_option("--max-dim", common.max_dim, "dimension bound N (default 3)");
    cmd->add_option("--levels", common.levels, "hom-level bound K (default 4)");
    cmd->add_option("--slack", common.slack, "closure slack for diagonal sites (default 2)");
    cmd->add_option("--bound", common.bound, "size bound for lattice searches (default 12)");
    cmd->add_option("--jobs", common.jobs, "worker threads (default: hardware)");
    cmd->add_option("--json", common.json_path, "write a JSON report to this path ('-' = stdout)");
    cmd->add_flag("--timings", common.timings, "include wall-clock times in the JSON report");
    cmd->add_option("--max-maps", common.max_maps, "closure resource bound")->group("");
  };

  auto* homs_cmd = app.add_subcommand("homs", "enumerate a hom-set by generator closure");
  add_common(homs_cmd);
  homs_cmd->add_option("--from", from, "domain dimension")->required();
  homs_cmd->add_option("--to", to, "codomain dimension")->required();

  auto* member_cmd = app.add_subcommand("member", "decide membership structurally");
  add_common(member_cmd);
  add_map_options(member_cmd, map_arg);

  auto* factor_cmd = app.add_subcommand("factor", "surjective/injective factorization");
  add_common(factor_cmd);
  add_map_options(factor_cmd, map_arg);

  auto* section_cmd = app.add_subcommand("section", "find a section in the site");
  add_common(section_cmd);
  add_map_options(section_cmd, map_arg);

  auto* ps_cmd = app.add_subcommand("pseudo-sections", "list pseudo-sections of a degeneracy");
  add_common(ps_cmd);
  add_map_options(ps_cmd, map_arg);

  auto* skel_cmd = app.add_subcommand("skeletal", "strong-skeletality sweep");
  add_common(skel_cmd);

  auto* reedy_cmd = app.add_subcommand("reedy-axioms", "generalized Reedy axiom sweep");
  add_common(reedy_cmd);

  auto* idem_cmd = app.add_subcommand("idempotents", "idempotent splitting sweep");
  add_common(idem_cmd);

  auto* push_cmd = app.add_subcommand("pushout", "certify an absolute pushout");
  add_common(push_cmd);
  push_cmd->add_option("--f", word_f, "first degeneracy as a word")->required();
  push_cmd->add_option("--g", word_g, "second degeneracy as a word")->required();
  push_cmd->add_option("--dom", map_arg.dom, "common domain dimension")->required();

  auto* ez_cmd = app.add_subcommand("ez-check", "absolute pushouts for all degeneracy spans");
  add_common(ez_cmd);

  auto* ezset_cmd = app.add_subcommand("ezset", "validate a cubical-set file and check "
                                                "decomposition uniqueness");
  add_common(ezset_cmd, false);
  ezset_cmd->add_option("--file", file_path, "cubical set JSON file")->required();

  auto* diag_cmd = app.add_subcommand("diag-suite", "diagonal-site identifications and "
                                                    "obstructions");
  add_common(diag_cmd, false);

  auto* all_cmd = app.add_subcommand("report-all", "every verification suite at default bounds");
  add_common(all_cmd, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << app.version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  SuiteReport report;
  report.site = common.site;

  try {
    if (homs_cmd->parsed()) {
      const auto cfg = SiteConfig::parse(common.site);
      EnumOptions opts{common.slack, common.max_maps};
      const auto t0 = Clock::now();
      auto hs = enumerate_homs(cfg, from, to, opts);
      for (const auto& f : hs.maps) out << f.str() << "\n";
      out << "count " << hs.maps.size() << (hs.complete_flag ? " (saturated)" : " (bounded)")
          << "\n";
      CheckReport c{.name = "hom-enumeration"};
      c.stats["count"] = static_cast<std::int64_t>(hs.maps.size());
      c.status = hs.complete_flag ? CheckStatus::pass : CheckStatus::bounded_pass;
      c.note = hs.note;
      report.checks.push_back(timed(std::move(c), t0));
      report.bounds["slack"] = common.slack;
    } else if (member_cmd->parsed()) {
      const auto cfg = SiteConfig::parse(common.site);
      const auto f = map_arg.resolve();
      const bool member = is_member(cfg, f);
      out << f.str() << (member ? " is" : " is not") << " a morphism of " << cfg.name() << "\n";
      if (member && !cfg.diagonals) {
        const auto d = dependency(f);
        for (int i = 0; i < f.cod(); ++i)
          out << "  output " << (i + 1) << " depends on " << varset_str(d.by_output[i]) << "\n";
        out << "  trivial inputs " << varset_str(d.trivial) << "\n";
      }
      CheckReport c{.name = "member"};
      c.note = member ? "member" : "non-member";
      report.checks.push_back(c);
    } else if (factor_cmd->parsed()) {
      const auto cfg = SiteConfig::parse(common.site);
      const auto f = map_arg.resolve();
      const auto fac = factorize(cfg, f);
      out << "degeneracy " << fac.q.str() << "\n";
      out << "face       " << fac.i.str() << "\n";
      CheckReport c{.name = "factor"};
      report.checks.push_back(c);
    } else if (section_cmd->parsed()) {
      const auto cfg = SiteConfig::parse(common.site);
      const auto f = map_arg.resolve();
      const auto s = find_section(cfg, f);
      out << (s ? "section " + s->str() : std::string("no section")) << "\n";
      CheckReport c{.name = "section"};
      c.note = s ? s->str() : "none";
      report.checks.push_back(c);
    } else if (ps_cmd->parsed()) {
      const auto cfg = SiteConfig::parse(common.site);
      const auto f = map_arg.resolve();
      HomTable homs(cfg, std::max(f.dom(), f.cod()));
      for (const auto& s : pseudo_sections(homs, f)) out << s.str() << "\n";
      CheckReport c{.name = "pseudo-sections"};
      report.checks.push_back(c);
    } else if (skel_cmd->parsed()) {
      const auto cfg = SiteConfig::parse(common.site);
      HomTable homs(cfg, common.max_dim);
      auto t0 = Clock::now();
      report.checks.push_back(timed(strong_skeletality_check(homs, common.max_dim), t0));
      t0 = Clock::now();
      report.checks.push_back(timed(pseudo_section_laws(homs, common.max_dim), t0));
      report.bounds["N"] = common.max_dim;
    } else if (reedy_cmd->parsed()) {
      const auto cfg = SiteConfig::parse(common.site);
      HomTable homs(cfg, common.max_dim);
      const auto t0 = Clock::now();
      report.checks.push_back(timed(verify_reedy_axioms(homs, common.max_dim), t0));
      report.bounds["N"] = common.max_dim;
    } else if (idem_cmd->parsed()) {
      const auto cfg = SiteConfig::parse(common.site);
      HomTable homs(cfg, common.max_dim);
      const auto t0 = Clock::now();
      report.checks.push_back(timed(verify_idempotents_split(homs, common.max_dim), t0));
      report.bounds["N"] = common.max_dim;
    } else if (push_cmd->parsed()) {
      const auto cfg = SiteConfig::parse(common.site);
      const auto f = evaluate(parse_word(word_f, map_arg.dom));
      const auto g = evaluate(parse_word(word_g, map_arg.dom));
      HomTable homs(cfg, std::max({common.levels, f.dom(), f.cod(), g.cod()}));
      const auto t0 = Clock::now();
      auto cert = find_absolute_pushout(homs, f, g, common.levels);
      CheckReport c{.name = "pushout"};
      if (cert) {
        out << "vertex dimension " << cert->vertex_dim << "\n";
        out << "leg from " << f.str() << ": " << cert->leg_b.str() << "\n";
        out << "leg from " << g.str() << ": " << cert->leg_c.str() << "\n";
        out << "levels checked " << cert->verified_levels
            << (cert->universal_ok ? ", universality confirmed" : "") << "\n";
        c.status = CheckStatus::bounded_pass;
        c.note = "certified to level " + std::to_string(cert->verified_levels);
      } else {
        c.fail("no absolute pushout certificate for the span");
      }
      report.checks.push_back(timed(std::move(c), t0));
      report.bounds["K"] = common.levels;
    } else if (ez_cmd->parsed()) {
      const auto cfg = SiteConfig::parse(common.site);
      HomTable homs(cfg, std::max(common.max_dim, common.levels));
      const auto t0 = Clock::now();
      report.checks.push_back(
          timed(ez_category_check(homs, common.max_dim, common.levels, common.jobs), t0));
      report.bounds["N"] = common.max_dim;
      report.bounds["K"] = common.levels;
    } else if (ezset_cmd->parsed()) {
      report.site.clear();
      CheckReport c{.name = "cubical-set"};
      const auto t0 = Clock::now();
      try {
        auto X = TruncatedCubicalSet::load_file(file_path);
        report.site = X.config().name();
        c.note = "functoriality validated";
        report.checks.push_back(timed(std::move(c), t0));
        const auto t1 = Clock::now();
        report.checks.push_back(timed(ez_uniqueness_check(X), t1));
      } catch (const FunctorialityError& e) {
        c.fail(std::string(e.what()) + " [" + e.word_a + " vs " + e.word_b + "]");
        c.repro = "cubeforge ezset --file " + file_path;
        report.checks.push_back(timed(std::move(c), t0));
      } catch (const std::invalid_argument&) {
        throw;
      } catch (const std::exception& e) {
        // a file that cannot even be loaded is bad input, not a failed check
        throw std::invalid_argument(std::string("cubical set file: ") + e.what());
      }
    } else if (diag_cmd->parsed()) {
      std::vector<std::pair<std::string, std::function<CheckReport()>>> tasks;
      diag_suite_checks(tasks, common.bound, common.slack);
      report.checks = run_ordered(tasks, common.jobs);
      report.site = "diagonal sites";
      report.bounds["bound"] = common.bound;
      report.bounds["slack"] = common.slack;
    } else if (all_cmd->parsed()) {
      std::vector<std::pair<std::string, std::function<CheckReport()>>> tasks;
      const int N = common.max_dim, K = common.levels;
      for (const auto& cfg : SiteConfig::all_nondiagonal()) {
        const std::string tag = ":" + cfg.name();
        tasks.emplace_back("closure-vs-membership" + tag, [cfg, N] {
          CheckReport r;
          for (int n = 0; n <= N; ++n)
            for (int m = 0; m <= N; ++m) {
              auto oa = oracle_agreement(cfg, n, m, 0);
              if (!oa.agree)
                r.fail("disagreement at Hom(" + std::to_string(n) + "," + std::to_string(m) +
                       ")" + (oa.witness ? ": " + oa.witness->str() : std::string()));
            }
          return r;
        });
        tasks.emplace_back("reedy-axioms" + tag, [cfg, N] {
          HomTable homs(cfg, N);
          return verify_reedy_axioms(homs, N);
        });
        tasks.emplace_back("idempotents-split" + tag, [cfg, N] {
          HomTable homs(cfg, N);
          return verify_idempotents_split(homs, N);
        });
        tasks.emplace_back("strong-skeletality" + tag, [cfg, N] {
          const int bound = cfg == SiteConfig::parse("plain") ? N + 1 : N;
          HomTable homs(cfg, bound);
          auto r = strong_skeletality_check(homs, bound);
          auto laws = pseudo_section_laws(homs, std::min(bound, N));
          if (!laws.pass())
            for (auto& v : laws.violations) r.fail(std::move(v));
          return r;
        });
        tasks.emplace_back("absolute-pushouts" + tag, [cfg, N, K] {
          HomTable homs(cfg, std::max(N, K));
          return ez_category_check(homs, N, K, 1);
        });
        tasks.emplace_back("split-epi-equivalences" + tag, [cfg, N] {
          HomTable homs(cfg, N);
          return split_epi_equivalences_check(homs, N);
        });
        tasks.emplace_back("face-maps-are-monos" + tag, [cfg, N] {
          HomTable homs(cfg, N);
          return plus_maps_are_monos_check(homs, N);
        });
      }
      diag_suite_checks(tasks, common.bound, common.slack);
      report.checks = run_ordered(tasks, common.jobs);
      report.site = "all sites";
      report.bounds["N"] = N;
      report.bounds["K"] = K;
      report.bounds["slack"] = common.slack;
      report.bounds["bound"] = common.bound;
    }
  } catch (const ResourceBoundError& e) {
    err << "resource bound exceeded: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const WordParseError& e) {
    err << "parse error at position " << e.position << ": " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  return finish(report, common, out);
}

}  // namespace cubeforge
