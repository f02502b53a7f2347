// Command-line front end. Exit status: 0 definitive answer, 1 usage or data
// error, 2 resource cap hit or answer undecided.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "georw/builders.hpp"
#include "georw/completion.hpp"
#include "georw/confluence.hpp"
#include "georw/errors.hpp"
#include "georw/finite_group.hpp"
#include "georw/oracle.hpp"
#include "georw/pregroup.hpp"
#include "georw/reduction.hpp"
#include "georw/report.hpp"
#include "georw/system_io.hpp"
#include "georw/triangular.hpp"
#include "georw/weights.hpp"

using namespace georw;

namespace {

  struct Settings {
    std::string                format = "human";
    std::string                caps_text;
    std::optional<std::size_t> max_nodes;
    std::optional<std::size_t> max_length;
    std::uint64_t              seed = 0;
  };

  Settings settings;

  void parse_caps(std::string const& text) {
    std::size_t start = 0;
    while (start < text.size()) {
      auto comma = text.find(',', start);
      auto item  = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      auto eq    = item.find('=');
      if (eq == std::string::npos) {
        throw CLI::ValidationError("--caps", "expected key=value, got '" + item + "'");
      }
      auto key   = item.substr(0, eq);
      auto value = std::stoull(item.substr(eq + 1));
      if (key == "nodes") {
        settings.max_nodes = value;
      } else if (key == "len") {
        settings.max_length = value;
      } else {
        throw CLI::ValidationError("--caps", "unknown cap '" + key + "'");
      }
      if (comma == std::string::npos) {
        break;
      }
      start = comma + 1;
    }
  }

  SearchCaps search_caps() {
    SearchCaps c;
    if (settings.max_nodes) {
      c.max_nodes = *settings.max_nodes;
    }
    return c;
  }

  OracleCaps oracle_caps(std::size_t default_length) {
    OracleCaps c;
    c.max_length = settings.max_length.value_or(default_length);
    if (settings.max_nodes) {
      c.max_nodes = *settings.max_nodes;
    }
    return c;
  }

  void print_human(Json const& j, std::string const& indent = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
      auto const& v = it.value();
      if (v.is_object()) {
        std::cout << indent << it.key() << ":\n";
        print_human(v, indent + "  ");
      } else if (v.is_array()) {
        std::cout << indent << it.key() << ":";
        if (v.empty()) {
          std::cout << " (none)";
        }
        std::cout << "\n";
        for (auto const& e : v) {
          if (e.is_object()) {
            std::cout << indent << "  -\n";
            print_human(e, indent + "    ");
          } else {
            std::cout << indent << "  " << (e.is_string() ? e.get<std::string>() : e.dump())
                      << "\n";
          }
        }
      } else {
        std::cout << indent << it.key() << "="
                  << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  }

  // Reports are JSON objects; `text` is printed verbatim in human mode
  // (file contents such as a system or pregroup).
  void emit(Json const& j, std::optional<std::string> const& text = std::nullopt) {
    if (settings.format == "json") {
      std::cout << j.dump(2) << "\n";
    } else if (text) {
      std::cout << *text;
    } else {
      print_human(j);
    }
  }

  Word word_arg(RewriteSystem const& sys, std::string const& text) {
    return sys.alphabet().parse(text);
  }

  int exit_code = 0;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"String rewriting for monoids and groups"};
  app.require_subcommand(1);
  app.add_option("--format", settings.format, "Output format")
      ->check(CLI::IsMember({"human", "json"}));
  app.add_option("--caps", settings.caps_text, "Search caps, e.g. nodes=100000,len=12");
  app.add_option("--seed", settings.seed, "Seed for randomized subcommands");

  std::function<void()> action;
  std::string           system_path, word1, word2, file_path, output_path;
  std::size_t           max_len    = 4;
  std::size_t           max_phases = 32;
  bool                  serial     = false;
  std::string           self_overlaps = "include";

  auto add_system = [&](CLI::App* c) {
    c->add_option("system", system_path, "System file")->required()->check(CLI::ExistingFile);
  };
  auto self_flag = [&](CLI::App* c) {
    c->add_option("--self-overlaps", self_overlaps, "Shifted self-overlaps of a rule")
        ->check(CLI::IsMember({"include", "exclude"}));
  };
  auto self_mode = [&] {
    return self_overlaps == "include" ? SelfOverlaps::Include : SelfOverlaps::Exclude;
  };

  auto* reduce = app.add_subcommand("reduce", "Linear-time S_R reduction");
  add_system(reduce);
  reduce->add_option("word", word1)->required();
  reduce->callback([&] {
    action = [&] {
      auto sys = load_system(system_path);
      auto w   = word_arg(sys, word1);
      auto t   = reduce_lr_traced(w, sys);
      emit(Json{{"input", sys.alphabet().format(w)},
                {"result", sys.alphabet().format(t.result)},
                {"steps", t.steps.size()}});
    };
  });

  auto* succ = app.add_subcommand("successors", "One-step rewrites");
  add_system(succ);
  succ->add_option("word", word1)->required();
  succ->callback([&] {
    action = [&] {
      auto sys = load_system(system_path);
      emit(Json{{"successors", words_json(sys.alphabet(), successors(word_arg(sys, word1), sys))}});
    };
  });

  auto* resolve = app.add_subcommand("resolve", "Thue resolution of a system file");
  add_system(resolve);
  resolve->callback([&] {
    action = [&] {
      auto text = serialize(load_system(system_path));
      emit(Json{{"system", text}}, text);
    };
  });

  auto* dehn = app.add_subcommand("dehn-wp", "Word problem by S_R reduction (Dehn systems)");
  add_system(dehn);
  dehn->add_option("word", word1)->required();
  dehn->callback([&] {
    action = [&] {
      auto sys = load_system(system_path);
      auto v   = dehn_wp(word_arg(sys, word1), sys);
      if (v.preserving_ignored) {
        std::cerr << "warning: S_P is nonempty and was ignored\n";
      }
      emit(Json{{"trivial", v.trivial}, {"preserving_ignored", v.preserving_ignored}});
    };
  });

  auto* weights = app.add_subcommand("weights", "Weight function for the rules as written");
  add_system(weights);
  std::uint64_t bound = 64;
  weights->add_option("--bound", bound, "Largest weight allowed");
  weights->callback([&] {
    action = [&] {
      auto                  p = load_presentation(system_path);
      std::vector<Relation> directed;
      for (auto const& r : p.relations) {
        directed.push_back(Relation{r.lhs, r.rhs, false});
        if (r.symmetric) {
          directed.push_back(Relation{r.rhs, r.lhs, false});
        }
      }
      WeightOptions opts;
      opts.bound = bound;
      auto r     = weight_assignment(p.alphabet, directed, opts);
      emit(weight_json(p.alphabet, r));
      if (r.status == WeightStatus::BoundExhausted) {
        exit_code = 2;
      }
    };
  });

  auto* cps = app.add_subcommand("critical-pairs", "List critical pairs");
  add_system(cps);
  self_flag(cps);
  cps->callback([&] {
    action = [&] {
      auto sys = load_system(system_path);
      Json arr = Json::array();
      for (auto const& p : critical_pairs(sys, self_mode())) {
        arr.push_back(critical_pair_json(sys, p));
      }
      emit(Json{{"count", arr.size()}, {"pairs", arr}});
    };
  });

  auto* gp = app.add_subcommand("check-gp", "Decide whether a system is geodesically perfect");
  add_system(gp);
  self_flag(gp);
  gp->add_flag("--serial", serial, "Use the single-threaded checker");
  gp->callback([&] {
    action = [&] {
      auto      sys = load_system(system_path);
      GpOptions opts{search_caps(), self_mode()};
      auto v = serial ? check_geodesically_perfect_serial(sys, opts)
                      : check_geodesically_perfect(sys, opts);
      emit(gp_verdict_json(sys, v));
    };
  });

  auto* wp = app.add_subcommand("wp", "Word problem by joinability (preperfect systems)");
  add_system(wp);
  wp->add_option("u", word1)->required();
  wp->add_option("v", word2)->required();
  wp->callback([&] {
    action = [&] {
      auto sys = load_system(system_path);
      emit(Json{{"equal", preperfect_wp(word_arg(sys, word1), word_arg(sys, word2), sys,
                                        search_caps())}});
    };
  });

  auto* geo = app.add_subcommand("geodesics", "Geodesics of a word (preperfect systems)");
  add_system(geo);
  geo->add_option("word", word1)->required();
  geo->callback([&] {
    action = [&] {
      auto sys = load_system(system_path);
      emit(Json{{"geodesics",
                 words_json(sys.alphabet(), geodesics_of(word_arg(sys, word1), sys, search_caps()))}});
    };
  });

  auto* gcheck = app.add_subcommand("geodesic-check", "Bounded test of the geodesic property");
  add_system(gcheck);
  gcheck->add_option("--max-len", max_len, "Longest word checked");
  gcheck->callback([&] {
    action = [&] {
      auto sys = load_system(system_path);
      auto c   = geodesic_bounded_check(sys, max_len, oracle_caps(max_len + 4));
      emit(geodesic_check_json(sys, c));
      if (c.status == GeodesicCheckStatus::Undecided) {
        exit_code = 2;
      }
    };
  });

  auto* complete = app.add_subcommand("complete", "Completion towards a geodesically perfect system");
  add_system(complete);
  self_flag(complete);
  complete->add_option("--max-phases", max_phases, "Phase budget");
  complete->add_option("--output", output_path, "Write the final system here");
  complete->callback([&] {
    action = [&] {
      auto              sys = load_system(system_path);
      CompletionOptions opts;
      opts.max_phases    = max_phases;
      opts.caps          = search_caps();
      opts.self_overlaps = self_mode();
      auto r             = kb_complete(sys, opts);
      auto j             = completion_json(sys, r);
      if (r.status == CompletionStatus::Completed) {
        j["system"] = serialize(r.system);
      }
      if (settings.format == "json") {
        emit(j);
      } else {
        std::cout << "status=" << to_string(r.status) << "\n";
        for (auto const& p : r.phases) {
          std::cout << "phase " << p.index << ": pairs=" << p.pairs_examined
                    << " +reducing=" << p.added_reducing.size()
                    << " +preserving=" << p.added_preserving.size()
                    << " rules=" << p.rules_after << "\n";
        }
        if (!r.message.empty()) {
          std::cout << "message=" << r.message << "\n";
        }
        if (r.status == CompletionStatus::Completed && output_path.empty()) {
          std::cout << serialize(r.system);
        }
      }
      if (!output_path.empty()) {
        std::ofstream(output_path) << serialize(r.system);
      }
      if (r.status != CompletionStatus::Completed) {
        exit_code = 2;
      }
    };
  });

  // pregroup check|to-system|to-system-prime
  auto* pregroup = app.add_subcommand("pregroup", "Pregroup operations");
  pregroup->require_subcommand(1);
  auto add_pregroup_cmd = [&](char const* name, char const* help,
                              std::function<void(Pregroup const&)> body) {
    auto* c = pregroup->add_subcommand(name, help);
    c->add_option("pregroup", file_path, "Pregroup file")->required()->check(CLI::ExistingFile);
    c->callback([&, body] { action = [&, body] { body(load_pregroup(file_path)); }; });
  };
  add_pregroup_cmd("check", "Check the axioms P1-P5", [&](Pregroup const& p) {
    emit(axiom_report_json(p, check_axioms(p)));
  });
  add_pregroup_cmd("to-system", "The system S(P)", [&](Pregroup const& p) {
    auto text = serialize(universal_system(p));
    emit(Json{{"system", text}}, text);
  });
  add_pregroup_cmd("to-system-prime", "The system S'(P)", [&](Pregroup const& p) {
    auto text = serialize(universal_system_prime(p));
    emit(Json{{"system", text}}, text);
  });

  auto* system_cmd = app.add_subcommand("system", "System operations");
  system_cmd->require_subcommand(1);
  auto* to_pregroup = system_cmd->add_subcommand("to-pregroup", "P_S of a triangular group system");
  add_system(to_pregroup);
  to_pregroup->callback([&] {
    action = [&] {
      auto sys  = load_system(system_path);
      auto text = serialize(pregroup_from_system(sys.reducing_part()));
      emit(Json{{"pregroup", text}}, text);
    };
  });

  // build ...
  auto* build = app.add_subcommand("build", "Generate systems and pregroups");
  build->require_subcommand(1);
  std::string a_path, b_path, ha_path, hb_path, g_path, phi_path;

  auto* bgraph = build->add_subcommand("graph", "Graph group from a graph file");
  bgraph->add_option("graph", file_path)->required()->check(CLI::ExistingFile);
  bgraph->callback([&] {
    action = [&] {
      auto text = serialize(build_graph_group(load_graph(file_path)));
      emit(Json{{"system", text}}, text);
    };
  });
  auto* bcox = build->add_subcommand("coxeter", "Tits system from a Coxeter file");
  bcox->add_option("coxeter", file_path)->required()->check(CLI::ExistingFile);
  bcox->callback([&] {
    action = [&] {
      auto text = serialize(build_tits_system(load_coxeter(file_path)));
      emit(Json{{"system", text}}, text);
    };
  });

  auto amalgam_opts = [&](CLI::App* c) {
    c->add_option("--a", a_path, "Group file for A")->required()->check(CLI::ExistingFile);
    c->add_option("--b", b_path, "Group file for B")->required()->check(CLI::ExistingFile);
    c->add_option("--h-in-a", ha_path, "Embedding of H into A")->required()->check(CLI::ExistingFile);
    c->add_option("--h-in-b", hb_path, "Embedding of H into B")->required()->check(CLI::ExistingFile);
  };
  auto load_amalgam = [&] {
    AmalgamData d;
    d.a      = load_group(a_path);
    d.b      = load_group(b_path);
    d.h_in_a = load_embedding(ha_path, d.a);
    d.h_in_b = load_embedding(hb_path, d.b);
    return d;
  };
  auto hnn_opts = [&](CLI::App* c) {
    c->add_option("--g", g_path, "Group file for G")->required()->check(CLI::ExistingFile);
    c->add_option("--a", a_path, "Embedding of A into G")->required()->check(CLI::ExistingFile);
    c->add_option("--b", b_path, "Embedding of B into G")->required()->check(CLI::ExistingFile);
    c->add_option("--phi", phi_path, "Map A -> B")->required()->check(CLI::ExistingFile);
  };
  auto load_hnn = [&] {
    HnnData d;
    d.g   = load_group(g_path);
    d.a   = load_embedding(a_path, d.g);
    d.b   = load_embedding(b_path, d.g);
    d.phi = load_map(phi_path, d.a.sub, d.b.sub);
    return d;
  };

  bool  directed = false;
  auto* bam      = build->add_subcommand("amalgam", "Amalgamated product system");
  amalgam_opts(bam);
  bam->add_flag("--directed", directed, "Keep the mixed rules directed");
  bam->callback([&] {
    action = [&] {
      auto        d = load_amalgam();
      std::string text;
      if (directed) {
        auto ds = build_amalgam_directed(d);
        text    = "# directed rules; not a Thue system\nalphabet";
        for (auto const& n : ds.alphabet().names()) {
          text += " " + n;
        }
        text += "\n";
        for (auto const& r : ds.rules()) {
          text += "rule " + ds.alphabet().format(r.lhs) + " -> " + ds.alphabet().format(r.rhs) + "\n";
        }
      } else {
        text = serialize(build_amalgam_system(d));
      }
      emit(Json{{"system", text}}, text);
    };
  });
  auto* bamp = build->add_subcommand("amalgam-pregroup", "Amalgamated product pregroup");
  amalgam_opts(bamp);
  bamp->callback([&] {
    action = [&] {
      auto text = serialize(build_amalgam_pregroup(load_amalgam()));
      emit(Json{{"pregroup", text}}, text);
    };
  });
  auto* bhnn = build->add_subcommand("hnn", "Convergent HNN system (length-increasing rules)");
  hnn_opts(bhnn);
  bhnn->callback([&] {
    action = [&] {
      auto        ds   = build_hnn_system(load_hnn());
      std::string text = "# directed rules; not a Thue system\nalphabet";
      for (auto const& n : ds.alphabet().names()) {
        text += " " + n;
      }
      text += "\n";
      for (auto const& r : ds.rules()) {
        text += "rule " + ds.alphabet().format(r.lhs) + " -> " + ds.alphabet().format(r.rhs) + "\n";
      }
      emit(Json{{"system", text}}, text);
    };
  });
  auto* bbrit = build->add_subcommand("britton", "Britton reduction system");
  hnn_opts(bbrit);
  bbrit->callback([&] {
    action = [&] {
      auto text = serialize(build_britton_system(load_hnn()));
      emit(Json{{"system", text}}, text);
    };
  });
  auto* bhp = build->add_subcommand("hnn-pregroup", "HNN pregroup");
  hnn_opts(bhp);
  bhp->callback([&] {
    action = [&] {
      auto text = serialize(build_hnn_pregroup(load_hnn()));
      emit(Json{{"pregroup", text}}, text);
    };
  });

  // oracle class|wp|geodesics|count
  auto* oracle = app.add_subcommand("oracle", "Brute-force ground truth");
  oracle->require_subcommand(1);
  auto* oclass = oracle->add_subcommand("class", "Bounded class of a word");
  add_system(oclass);
  oclass->add_option("word", word1)->required();
  oclass->callback([&] {
    action = [&] {
      auto sys = load_system(system_path);
      auto w   = word_arg(sys, word1);
      auto c   = class_closure(w, sys, oracle_caps(3 * w.size() + 4));
      emit(Json{{"complete", c.complete()},
                {"size", c.members().size()},
                {"members", words_json(sys.alphabet(), c.sorted_members())}});
      if (!c.complete()) {
        exit_code = 2;
      }
    };
  });
  auto* owp = oracle->add_subcommand("wp", "Three-valued word problem");
  add_system(owp);
  owp->add_option("u", word1)->required();
  owp->add_option("v", word2)->required();
  owp->callback([&] {
    action = [&] {
      auto sys = load_system(system_path);
      auto u   = word_arg(sys, word1);
      auto v   = word_arg(sys, word2);
      auto r   = oracle_wp(u, v, sys, oracle_caps(3 * std::max(u.size(), v.size()) + 4));
      emit(Json{{"verdict", to_string(r)}});
      if (r == OracleVerdict::Unknown) {
        exit_code = 2;
      }
    };
  });
  auto* ogeo = oracle->add_subcommand("geodesics", "Geodesics by bounded search");
  add_system(ogeo);
  ogeo->add_option("word", word1)->required();
  ogeo->callback([&] {
    action = [&] {
      auto sys = load_system(system_path);
      auto w   = word_arg(sys, word1);
      auto g   = oracle_geodesics(w, sys, oracle_caps(3 * w.size() + 4));
      emit(Json{{"certified", g.certified}, {"geodesics", words_json(sys.alphabet(), g.geodesics)}});
      if (!g.certified) {
        exit_code = 2;
      }
    };
  });
  auto* ocount = oracle->add_subcommand("count", "Count classes of short words");
  add_system(ocount);
  ocount->add_option("--max-len", max_len, "Longest word enumerated");
  ocount->callback([&] {
    action = [&] {
      auto sys = load_system(system_path);
      auto q   = enumerate_quotient(sys, max_len, oracle_caps(max_len + 4));
      emit(Json{{"classes", q.classes}, {"complete", q.complete}});
      if (!q.complete) {
        exit_code = 2;
      }
    };
  });

  try {
    app.parse(argc, argv);
    if (!settings.caps_text.empty()) {
      parse_caps(settings.caps_text);
    }
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    action();
  } catch (ResourceError const& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
