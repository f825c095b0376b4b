#include "anncat/report.hpp"

#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "anncat/catalog.hpp"
#include "anncat/error.hpp"

namespace anncat {

  namespace {

    std::vector<int> as_ints(std::vector<Elem> const& v) {
      return std::vector<int>(v.begin(), v.end());
    }

    // Variable names for a report entry; consistency checks use (A, X).
    std::vector<std::string> variables_of(std::string const& name) {
      if (auto const* spec = find_diagram(name)) {
        return spec->variables;
      }
      return {"A", "X"};
    }

    std::string tuple_text(std::vector<std::string> const& names,
                           std::vector<Elem> const&        values) {
      std::ostringstream os;
      os << '(';
      for (std::size_t i = 0; i < names.size(); ++i) {
        os << (i ? "," : "") << names[i];
      }
      os << ")=(";
      for (std::size_t i = 0; i < values.size(); ++i) {
        os << (i ? "," : "") << static_cast<int>(values[i]);
      }
      os << ')';
      return os.str();
    }

    ordered_json conflicts_json(std::vector<UnitConflict> const& conflicts) {
      ordered_json out = ordered_json::array();
      for (auto const& c : conflicts) {
        out.push_back({{"A", c.object},
                       {"X", c.probe},
                       {"candidate", c.candidate},
                       {"reference", c.reference}});
      }
      return out;
    }

    void unit_text(std::ostream& os, char const* name, UnitDerivation const& u) {
      os << name << ": " << (u.consistent ? "consistent" : "INCONSISTENT") << "\n  table:";
      for (std::size_t a = 0; a < u.table.size(); ++a) {
        os << ' ' << a << "->" << static_cast<int>(u.table[a]);
      }
      os << '\n';
      for (auto const& c : u.conflicts) {
        os << "  conflict at A=" << static_cast<int>(c.object)
           << ": probe X=" << static_cast<int>(c.probe) << " forces "
           << static_cast<int>(c.candidate) << ", probe X=0 forces "
           << static_cast<int>(c.reference) << '\n';
      }
      for (auto const& c : u.cross_conflicts) {
        os << "  d-form square at A=" << static_cast<int>(c.object)
           << ", X=" << static_cast<int>(c.probe) << " forces "
           << static_cast<int>(c.candidate) << " instead of "
           << static_cast<int>(c.reference) << '\n';
      }
    }

  }  // namespace

  std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int  len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
      throw InputError("sha256 digest failed");
    }
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) {
      os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return os.str();
  }

  std::string dump(ordered_json const& doc) {
    return doc.dump(2) + "\n";
  }

  ordered_json to_json(CheckReport const& report) {
    ordered_json failures = ordered_json::array();
    for (auto const& f : report.failures) {
      failures.push_back({{"assignment", as_ints(f.assignment)},
                          {"generics", as_ints(f.generics)},
                          {"lhs", f.lhs},
                          {"rhs", f.rhs}});
    }
    return {{"name", report.name},
            {"variables", variables_of(report.name)},
            {"passed", report.passed},
            {"total_assignments", report.total},
            {"failure_count", report.failures.size()},
            {"failures", failures}};
  }

  ordered_json suite_report_json(SuiteReport const& report, std::string_view digest) {
    ordered_json diagrams = ordered_json::array();
    for (auto const& r : report.reports) {
      diagrams.push_back(to_json(r));
    }
    return {{"tool", kToolName},
            {"version", kToolVersion},
            {"command", "check"},
            {"input_digest", "sha256:" + std::string(digest)},
            {"suite", report.suite},
            {"passed", report.passed},
            {"diagrams", diagrams},
            {"skipped", report.skipped}};
  }

  std::string suite_report_text(SuiteReport const& report) {
    std::ostringstream os;
    std::size_t        failed = 0;
    for (auto const& r : report.reports) {
      failed += r.passed ? 0 : 1;
    }
    os << "suite " << report.suite << ": " << (report.passed ? "PASSED" : "FAILED");
    if (!report.passed) {
      os << " (" << failed << " failing, " << report.skipped.size() << " skipped)";
    }
    os << '\n';
    for (auto const& r : report.reports) {
      os << "  " << std::left << std::setw(18) << r.name << (r.passed ? "pass" : "FAIL")
         << "  " << r.total << " assignments";
      if (!r.passed) {
        os << ", " << r.failures.size() << " failing";
      }
      os << '\n';
      auto const names = variables_of(r.name);
      for (auto const& f : r.failures) {
        os << "      " << tuple_text(names, f.assignment);
        if (!f.generics.empty()) {
          os << " generics=(";
          for (std::size_t i = 0; i < f.generics.size(); ++i) {
            os << (i ? "," : "") << static_cast<int>(f.generics[i]);
          }
          os << ')';
        }
        os << " lhs=" << static_cast<int>(f.lhs) << " rhs=" << static_cast<int>(f.rhs)
           << '\n';
      }
    }
    for (auto const& s : report.skipped) {
      os << "  " << std::left << std::setw(18) << s << "skipped (derived unit not unique)\n";
    }
    return os.str();
  }

  ordered_json derive_report_json(DerivedUnits const& units, std::string_view digest) {
    auto side = [](UnitDerivation const& u) {
      return ordered_json{{"consistent", u.consistent},
                          {"table", as_ints(u.table)},
                          {"conflicts", conflicts_json(u.conflicts)},
                          {"cross_conflicts", conflicts_json(u.cross_conflicts)}};
    };
    return {{"tool", kToolName},
            {"version", kToolVersion},
            {"command", "derive"},
            {"input_digest", "sha256:" + std::string(digest)},
            {"consistent", units.consistent()},
            {"lhat", side(units.lhat)},
            {"rhat", side(units.rhat)}};
  }

  std::string derive_report_text(DerivedUnits const& units) {
    std::ostringstream os;
    unit_text(os, "lhat", units.lhat);
    unit_text(os, "rhat", units.rhat);
    return os.str();
  }

  ordered_json space_json(SearchSpace const& space) {
    std::vector<std::string> varied;
    for (TableId id : space.varied) {
      varied.emplace_back(table_name(id));
    }
    ordered_json out = {{"ring", space.ring_label},
                        {"module", space.module_label},
                        {"vary", varied},
                        {"strict_base", space.strict_base},
                        {"mode", space.mode == SearchMode::exhaustive ? "exhaustive" : "random"}};
    if (space.mode == SearchMode::random) {
      out["seed"]  = space.seed;
      out["count"] = space.count;
    }
    if (!space.strict_base) {
      std::string base;
      for (std::size_t i = 0; i < kTableCount; ++i) {
        for (Elem e : space.base.table(static_cast<TableId>(i)).data()) {
          base.push_back(static_cast<char>('0' + e));
        }
      }
      out["base_digest"] = "sha256:" + sha256_hex(base);
    }
    return out;
  }

  std::string search_conclusion(SearchOutcome const& outcome) {
    if (outcome.counterexample_count == 0) {
      return "no counterexample in this space";
    }
    return "counterexample found in this space: a model passes cring and fails u";
  }

  ordered_json search_report_json(SearchSpace const&              space,
                                  SearchOutcome const&            outcome,
                                  std::vector<std::string> const& example_files) {
    ordered_json const desc = space_json(space);

    ordered_json examples = ordered_json::array();
    for (std::size_t i = 0; i < outcome.counterexamples.size(); ++i) {
      ordered_json e = {{"index", outcome.counterexamples[i].index}};
      if (i < example_files.size() && !example_files[i].empty()) {
        e["file"] = example_files[i];
      }
      examples.push_back(e);
    }
    ordered_json violations = ordered_json::array();
    for (auto const& v : outcome.violations) {
      violations.push_back({{"index", v.index}, {"property", v.property}});
    }
    return {{"tool", kToolName},
            {"version", kToolVersion},
            {"command", "search"},
            {"input_digest", "sha256:" + sha256_hex(desc.dump())},
            {"space", desc},
            {"counts",
             {{"visited", outcome.visited},
              {"ann_pass", outcome.ann_pass},
              {"cring_pass", outcome.cring_pass},
              {"cring_u_pass", outcome.cring_u_pass},
              {"cring_u_fail", outcome.counterexample_count}}},
            {"conclusion", search_conclusion(outcome)},
            {"note",
             "finite model search gathers evidence only; it does not decide "
             "whether u is independent of the categorical ring axioms"},
            {"counterexamples", examples},
            {"counterexamples_listed", outcome.counterexamples.size()},
            {"theorem_violations", violations}};
  }

  std::string search_report_text(SearchSpace const& space, SearchOutcome const& outcome) {
    std::ostringstream os;
    os << "space: ring " << space.ring_label << ", module " << space.module_label
       << ", vary {";
    for (std::size_t i = 0; i < space.varied.size(); ++i) {
      os << (i ? "," : "") << table_name(space.varied[i]);
    }
    os << "}, " << (space.mode == SearchMode::exhaustive ? "exhaustive" : "random") << '\n'
       << "visited       " << outcome.visited << '\n'
       << "ann           " << outcome.ann_pass << '\n'
       << "cring         " << outcome.cring_pass << '\n'
       << "cring and u   " << outcome.cring_u_pass << '\n'
       << "cring, not u  " << outcome.counterexample_count << '\n'
       << search_conclusion(outcome) << '\n';
    if (!outcome.violations.empty()) {
      os << "THEOREM VIOLATIONS (" << outcome.violations.size()
         << "): the diagram encoding needs auditing\n";
      for (auto const& v : outcome.violations) {
        os << "  model " << v.index << ": " << v.property << '\n';
      }
    }
    return os.str();
  }

}  // namespace anncat
