#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "anncat/axioms.hpp"
#include "anncat/catalog.hpp"
#include "anncat/error.hpp"
#include "anncat/model_io.hpp"
#include "anncat/report.hpp"
#include "anncat/search.hpp"

namespace anncat::cli {

  namespace {

    namespace fs = std::filesystem;

    struct LoadedModel {
      ModelFile   file;
      std::string digest;
    };

    // Parses and validates; law violations are input errors.
    LoadedModel load_checked(std::string const& path) {
      std::string text = read_file(path);
      ModelFile   file = parse_model(text);
      auto        ring = validate_ring(file.model.ring());
      if (!ring.passed()) {
        throw InputError(path + ": not a ring: " + ring.summary());
      }
      auto module = validate_bimodule(file.model.ring(), file.model.module());
      if (!module.passed()) {
        throw InputError(path + ": not a bimodule: " + module.summary());
      }
      return {std::move(file), sha256_hex(text)};
    }

    void write_text(std::string const& path, std::string const& text) {
      std::ofstream os(path, std::ios::binary);
      if (!os) {
        throw InputError("cannot write " + path);
      }
      os << text;
    }

    std::vector<Elem> parse_tuple(std::string const& text, std::size_t bound,
                                  char const* what) {
      std::vector<Elem> out;
      if (text.empty()) {
        return out;
      }
      std::stringstream ss(text);
      std::string       item;
      while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long        v    = -1;
        try {
          v = std::stol(item, &used);
        } catch (std::exception const&) {
          used = 0;
        }
        if (used != item.size() || v < 0 || static_cast<std::size_t>(v) >= bound) {
          throw InputError(std::string("bad ") + what + " entry \"" + item + "\"");
        }
        out.push_back(static_cast<Elem>(v));
      }
      return out;
    }

    struct CheckArgs {
      std::string model;
      std::string suite = "ann";
      std::string out;
      std::string format = "text";
    };

    int cmd_check(CheckArgs const& a, std::ostream& out) {
      auto suite_id = parse_suite(a.suite);
      if (!suite_id) {
        throw InputError("unknown suite \"" + a.suite + "\"");
      }
      LoadedModel m      = load_checked(a.model);
      SuiteReport report = check_suite(m.file.model, suite(*suite_id));
      auto        doc    = suite_report_json(report, m.digest);
      if (!a.out.empty()) {
        write_text(a.out, dump(doc));
      }
      out << (a.format == "json" ? dump(doc) : suite_report_text(report));
      return report.passed ? kPass : kSuiteFail;
    }

    struct DeriveArgs {
      std::string model;
      std::string out;
      std::string format = "text";
    };

    int cmd_derive(DeriveArgs const& a, std::ostream& out) {
      LoadedModel  m     = load_checked(a.model);
      DerivedUnits units = derive_units(m.file.model);
      auto         doc   = derive_report_json(units, m.digest);
      if (!a.out.empty()) {
        write_text(a.out, dump(doc));
      }
      out << (a.format == "json" ? dump(doc) : derive_report_text(units));
      return units.consistent() ? kPass : kSuiteFail;
    }

    struct ValidateArgs {
      std::string model;
    };

    int cmd_validate(ValidateArgs const& a, std::ostream& out) {
      LoadedModel m = load_checked(a.model);
      out << a.model << ": valid (ring of order " << m.file.model.ring().order()
          << ", bimodule of order " << m.file.model.module().order() << ")\n";
      return kPass;
    }

    struct ExplainArgs {
      std::string model;
      std::string diagram;
      std::string assignment;
      std::string generics;
    };

    void print_path(std::ostream&               out,
                    char const*                 side,
                    std::vector<TraceStep> const& steps) {
      out << side << ":\n";
      for (std::size_t i = 0; i < steps.size(); ++i) {
        auto const& s = steps[i];
        out << "  " << std::setw(2) << i + 1 << ". " << s.label << "\n"
            << "      object " << static_cast<int>(s.source) << " -> "
            << static_cast<int>(s.target) << ", value " << static_cast<int>(s.value)
            << ", running " << static_cast<int>(s.running) << "\n";
      }
    }

    int cmd_explain(ExplainArgs const& a, std::ostream& out) {
      LoadedModel m    = load_checked(a.model);
      auto const* spec = find_diagram(a.diagram);
      if (spec == nullptr) {
        throw InputError("unknown diagram \"" + a.diagram + "\"");
      }
      auto const& model = m.file.model;
      auto        vars  = parse_tuple(a.assignment, model.ring().order(), "assignment");
      if (vars.size() != spec->arity()) {
        throw InputError(spec->name + " takes " + std::to_string(spec->arity())
                         + " variables, got " + std::to_string(vars.size()));
      }
      auto gens = parse_tuple(a.generics, model.module().order(), "generic");
      if (gens.size() != spec->slots.size()) {
        throw InputError(spec->name + " has " + std::to_string(spec->slots.size())
                         + " generic arrows, got " + std::to_string(gens.size()));
      }

      std::optional<DerivedUnits> units;
      if (spec->needs_units()) {
        units = derive_units(model);
      }
      out << spec->name << ": " << spec->description << "\n(";
      for (std::size_t i = 0; i < vars.size(); ++i) {
        out << (i ? "," : "") << spec->variables[i];
      }
      out << ")=(";
      for (std::size_t i = 0; i < vars.size(); ++i) {
        out << (i ? "," : "") << static_cast<int>(vars[i]);
      }
      out << ")";
      if (!gens.empty()) {
        out << ", generics=(";
        for (std::size_t i = 0; i < gens.size(); ++i) {
          out << (i ? "," : "") << static_cast<int>(gens[i]);
        }
        out << ")";
      }
      out << "\n";

      EvalEnv env{model, vars, gens, spec->slots, units ? &*units : nullptr};
      try {
        auto lhs = trace_term(spec->lhs, env, spec->variables);
        auto rhs = trace_term(spec->rhs, env, spec->variables);
        print_path(out, "lhs", lhs);
        print_path(out, "rhs", rhs);
        Elem const lv = lhs.back().running;
        Elem const rv = rhs.back().running;
        out << "lhs value " << static_cast<int>(lv) << ", rhs value "
            << static_cast<int>(rv) << ": " << (lv == rv ? "equal" : "unequal") << "\n";
        return lv == rv ? kPass : kSuiteFail;
      } catch (ModelError const& e) {
        // Unit diagrams on a model whose derived unit is not unique.
        out << "cannot evaluate: " << e.what() << "\n";
        return kSuiteFail;
      }
    }

    struct SearchArgs {
      std::string   ring   = "z2";
      std::string   module = "regular";
      std::string   vary   = "none";
      bool          random = false;
      std::uint64_t seed   = 0;
      std::uint64_t count  = 0;
      std::string   outdir;
      std::string   out;
      std::string   format      = "json";
      bool          strict_base = true;
      std::string   base;
      std::string   prop2 = "full";
    };

    int cmd_search(SearchArgs const& a,
                   CLI::App const&   sub,
                   std::ostream&     out,
                   std::ostream&     err) {
      SearchSpace space = [&] {
        if (a.strict_base) {
          if (!a.base.empty()) {
            throw SpaceError("--base needs --no-strict-base");
          }
          return strict_space(a.ring, a.module, parse_vary_list(a.vary));
        }
        if (a.base.empty()) {
          throw SpaceError("--no-strict-base needs --base MODEL");
        }
        if (sub.count("--ring") || sub.count("--module")) {
          throw SpaceError("--ring and --module come from the --base model");
        }
        LoadedModel m = load_checked(a.base);
        return SearchSpace{std::move(m.file.model),
                           parse_vary_list(a.vary),
                           SearchMode::exhaustive,
                           0,
                           0,
                           "base",
                           "base",
                           false};
      }();

      if (a.random) {
        if (!sub.count("--seed") || !sub.count("--count")) {
          throw SpaceError("--random needs --seed and --count");
        }
        space.mode  = SearchMode::random;
        space.seed  = a.seed;
        space.count = a.count;
      } else if (sub.count("--seed") || sub.count("--count")) {
        throw SpaceError("--seed and --count only apply with --random");
      }

      SearchOptions options;
      options.prop2 = a.prop2 == "without-hexagon" ? Prop2Premise::without_hexagon
                                                   : Prop2Premise::full;
      SearchOutcome outcome = find_u_counterexample(space, options);

      std::vector<std::string> files;
      if (!a.outdir.empty()) {
        std::error_code ec;
        fs::create_directories(a.outdir, ec);
        if (ec) {
          throw InputError("cannot create " + a.outdir + ": " + ec.message());
        }
        for (auto const& ce : outcome.counterexamples) {
          std::string const name = "counterexample_" + std::to_string(ce.index) + ".json";
          ModelFile         file{ce.model,
                         "counterexample " + std::to_string(ce.index),
                         "passes cring, fails u"};
          save_model(fs::path(a.outdir) / name, file);
          files.push_back((fs::path(a.outdir) / name).generic_string());
        }
      }

      auto doc = search_report_json(space, outcome, files);
      if (!a.out.empty()) {
        write_text(a.out, dump(doc));
      }
      out << (a.format == "json" ? dump(doc) : search_report_text(space, outcome));
      if (!outcome.violations.empty()) {
        err << "theorem violation recorded in " << outcome.violations.size()
            << " model(s); the diagram encoding needs auditing\n";
        return kTheoremViolation;
      }
      return kPass;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite model checker for Ann-categories and categorical rings",
                 "anncat"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));
    auto const formats = CLI::IsMember({"text", "json"});

    CheckArgs check;
    auto*     c = app.add_subcommand("check", "Check a model against an axiom suite");
    c->add_option("model", check.model, "Model file")->required();
    c->add_option("--suite", check.suite, "pic, tensor, ann1, ann1_minus_c, ann2, ann3, ann, u, cring")
        ->capture_default_str();
    c->add_option("--out", check.out, "Also write the JSON report here");
    c->add_option("--format", check.format, "Output on stdout")->check(formats)
        ->capture_default_str();

    DeriveArgs derive;
    auto*      d = app.add_subcommand("derive", "Derive the unit tables lhat and rhat");
    d->add_option("model", derive.model, "Model file")->required();
    d->add_option("--out", derive.out, "Also write the JSON report here");
    d->add_option("--format", derive.format, "Output on stdout")->check(formats)
        ->capture_default_str();

    ValidateArgs validate;
    auto* v = app.add_subcommand("validate", "Check ring and bimodule laws of a model file");
    v->add_option("model", validate.model, "Model file")->required();

    ExplainArgs explain;
    auto*       e = app.add_subcommand("explain", "Trace both paths of a diagram");
    e->add_option("model", explain.model, "Model file")->required();
    e->add_option("diagram", explain.diagram, "Diagram name")->required();
    e->add_option("assignment", explain.assignment, "Comma-separated ring indices")
        ->required();
    e->add_option("--generics", explain.generics,
                  "Comma-separated module values for generic arrows");

    SearchArgs search;
    auto*      s = app.add_subcommand("search", "Look for cring models that fail u");
    s->add_option("--ring", search.ring, "z2, z3 or z4")->capture_default_str();
    s->add_option("--module", search.module, "regular or z2")->capture_default_str();
    s->add_option("--vary", search.vary, "Tables to vary, e.g. L,R,g,d")
        ->capture_default_str();
    s->add_flag("--random", search.random, "Draw models at random instead of enumerating");
    s->add_option("--seed", search.seed, "Random seed");
    s->add_option("--count", search.count, "Number of random models");
    s->add_option("--outdir", search.outdir, "Write counterexample models here");
    s->add_option("--out", search.out, "Also write the JSON report here");
    s->add_option("--format", search.format, "Output on stdout")->check(formats)
        ->capture_default_str();
    s->add_flag("--strict-base,!--no-strict-base", search.strict_base,
                "Fixed tables all zero (default)");
    s->add_option("--base", search.base, "Model supplying fixed tables, ring and module");
    s->add_option("--prop2-premise", search.prop2, "full or without-hexagon")
        ->check(CLI::IsMember({"full", "without-hexagon"}))
        ->capture_default_str();

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return kPass;
    } catch (CLI::CallForVersion const&) {
      out << kToolName << " " << kToolVersion << "\n";
      return kPass;
    } catch (CLI::ParseError const& ex) {
      err << "anncat: " << ex.what() << "\n";
      return kInputError;
    }

    try {
      if (c->parsed()) {
        return cmd_check(check, out);
      }
      if (d->parsed()) {
        return cmd_derive(derive, out);
      }
      if (v->parsed()) {
        return cmd_validate(validate, out);
      }
      if (e->parsed()) {
        return cmd_explain(explain, out);
      }
      return cmd_search(search, *s, out, err);
    } catch (std::runtime_error const& ex) {
      err << "anncat: " << ex.what() << "\n";
      return kInputError;
    }
  }

}  // namespace anncat::cli
