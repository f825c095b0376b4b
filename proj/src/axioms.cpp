#include "anncat/axioms.hpp"

#include <algorithm>

#include "anncat/catalog.hpp"
#include "anncat/error.hpp"

namespace anncat {

  namespace {

    using Names = std::vector<std::string>;

    Names concat(std::initializer_list<Names const*> parts) {
      Names out;
      for (auto const* p : parts) {
        out.insert(out.end(), p->begin(), p->end());
      }
      return out;
    }

    std::vector<AxiomSuite> build_suites() {
      Names const pic    = {"pentagon_plus",
                            "hexagon",
                            "symmetry",
                            "triangle_plus",
                            "nat_aplus",
                            "nat_c",
                            "nat_g",
                            "nat_d"};
      Names const tensor = {"pentagon_times", "triangle_times", "nat_a", "nat_l", "nat_r"};
      Names const ann1   = {"lfun_aplus", "lfun_c", "rfun_aplus", "rfun_c"};
      Names const ann1mc = {"lfun_aplus", "rfun_aplus"};
      Names const ann2   = {"d1.1", "d1.1p", "d1.2", "d1.3"};
      Names const ann3   = {"d1.4", "d1.4p"};
      Names const u      = {std::string(kLhatConsistency),
                            std::string(kRhatConsistency),
                            "d1.5",
                            "d1.5p",
                            "d1.6",
                            "d1.6p"};
      Names const ring31 = {"d3.1", "d3.1p"};

      return {
          {SuiteId::pic, "pic", pic},
          {SuiteId::tensor, "tensor", tensor},
          {SuiteId::ann1, "ann1", ann1},
          {SuiteId::ann1_minus_c, "ann1_minus_c", ann1mc},
          {SuiteId::ann2, "ann2", ann2},
          {SuiteId::ann3, "ann3", ann3},
          {SuiteId::ann, "ann", concat({&pic, &tensor, &ann1, &ann2, &ann3})},
          {SuiteId::u, "u", u},
          {SuiteId::cring, "cring", concat({&pic, &tensor, &ann2, &ann3, &ring31})},
      };
    }

    bool is_consistency(std::string_view name) {
      return name == kLhatConsistency || name == kRhatConsistency;
    }

    // Unit diagrams depend on one side of the derived units.
    bool needs_lhat(std::string_view name) {
      return name == "d1.5" || name == "d1.5p";
    }
    bool needs_rhat(std::string_view name) {
      return name == "d1.6" || name == "d1.6p";
    }

    std::size_t index_of(DiagramSpec const& spec) {
      return static_cast<std::size_t>(&spec - catalog().data());
    }

  }  // namespace

  std::vector<AxiomSuite> const& all_suites() {
    static std::vector<AxiomSuite> const suites = build_suites();
    return suites;
  }

  AxiomSuite const& suite(SuiteId id) {
    return all_suites()[static_cast<std::size_t>(id)];
  }

  std::optional<SuiteId> parse_suite(std::string_view name) noexcept {
    for (auto const& s : all_suites()) {
      if (s.name == name) {
        return s.id;
      }
    }
    return std::nullopt;
  }

  CheckReport unit_consistency_report(std::string_view      name,
                                      UnitDerivation const& derivation,
                                      std::size_t           ring_order) {
    CheckReport report;
    report.name  = std::string(name);
    report.total = ring_order * ring_order;
    for (auto const& c : derivation.conflicts) {
      report.failures.push_back({{c.object, c.probe}, {}, c.candidate, c.reference});
    }
    report.passed = report.failures.empty();
    return report;
  }

  SuiteReport check_suite(SkeletalModel const& model, AxiomSuite const& s) {
    SuiteReport out;
    out.suite = s.name;
    std::optional<DerivedUnits> units;
    for (auto const& name : s.members) {
      if (is_consistency(name) || needs_lhat(name) || needs_rhat(name)) {
        if (!units) {
          units = derive_units(model);
        }
      }
      if (name == kLhatConsistency) {
        out.reports.push_back(
            unit_consistency_report(name, units->lhat, model.ring().order()));
      } else if (name == kRhatConsistency) {
        out.reports.push_back(
            unit_consistency_report(name, units->rhat, model.ring().order()));
      } else if ((needs_lhat(name) && !units->lhat.consistent)
                 || (needs_rhat(name) && !units->rhat.consistent)) {
        out.skipped.push_back(name);
      } else {
        out.reports.push_back(
            check_diagram(diagram(name), model, units ? &*units : nullptr));
      }
    }
    out.passed = out.skipped.empty()
                 && std::all_of(out.reports.begin(),
                                out.reports.end(),
                                [](CheckReport const& r) { return r.passed; });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // ModelVerdicts
  ////////////////////////////////////////////////////////////////////////

  ModelVerdicts::ModelVerdicts(SkeletalModel const& model)
      : model_(model), memo_(catalog().size(), -1) {}

  DerivedUnits const& ModelVerdicts::units() {
    if (!units_) {
      units_ = derive_units(model_);
    }
    return *units_;
  }

  bool ModelVerdicts::holds(DiagramSpec const& spec) {
    auto& slot = memo_[index_of(spec)];
    if (slot < 0) {
      if (spec.needs_units()) {
        DerivedUnits const& u = units();
        if ((needs_lhat(spec.name) && !u.lhat.consistent)
            || (needs_rhat(spec.name) && !u.rhat.consistent)) {
          slot = 0;
        } else {
          slot = diagram_holds(spec, model_, &u) ? 1 : 0;
        }
      } else {
        slot = diagram_holds(spec, model_) ? 1 : 0;
      }
    }
    return slot == 1;
  }

  bool ModelVerdicts::holds_member(std::string const& name) {
    if (name == kLhatConsistency) {
      return units().lhat.consistent;
    }
    if (name == kRhatConsistency) {
      return units().rhat.consistent;
    }
    return holds(diagram(name));
  }

  bool ModelVerdicts::satisfies_all(std::vector<std::string> const& members) {
    // Cheapest members first; the verdict does not depend on the order.
    std::vector<std::pair<std::size_t, std::string const*>> order;
    order.reserve(members.size());
    for (auto const& name : members) {
      std::size_t cost = 0;
      if (auto const* spec = find_diagram(name)) {
        cost = assignment_count(*spec, model_);
      }
      order.emplace_back(cost, &name);
    }
    std::stable_sort(order.begin(), order.end(), [](auto const& x, auto const& y) {
      return x.first < y.first;
    });
    for (auto const& [cost, name] : order) {
      if (!holds_member(*name)) {
        return false;
      }
    }
    return true;
  }

  bool ModelVerdicts::satisfies(AxiomSuite const& s) {
    return satisfies_all(s.members);
  }

  ////////////////////////////////////////////////////////////////////////
  // Properties
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::string> prop2_premise_members(Prop2Premise variant) {
    std::vector<std::string> out;
    for (auto const& name : suite(SuiteId::ann).members) {
      if (name == "lfun_c" || name == "rfun_c") {
        continue;
      }
      if (variant == Prop2Premise::without_hexagon && name == "hexagon") {
        continue;
      }
      out.push_back(name);
    }
    return out;
  }

  PropertyVerdict check_prop1(ModelVerdicts& v) {
    PropertyVerdict out;
    out.premise    = v.satisfies(SuiteId::ann);
    out.conclusion = v.satisfies(SuiteId::u);
    return out;
  }

  PropertyVerdict check_prop2(ModelVerdicts& v, Prop2Premise variant) {
    PropertyVerdict out;
    out.premise    = v.satisfies_all(prop2_premise_members(variant));
    out.conclusion = v.satisfies_all({"lfun_c", "rfun_c"});
    return out;
  }

  PropertyVerdict check_thm1(ModelVerdicts& v) {
    PropertyVerdict out;
    out.premise    = v.satisfies(SuiteId::ann);
    out.conclusion = v.satisfies_all({"d3.1", "d3.1p"});
    return out;
  }

  PropertyVerdict check_thm2(ModelVerdicts& v) {
    PropertyVerdict out;
    out.premise    = v.satisfies(SuiteId::cring) && v.satisfies(SuiteId::u);
    out.conclusion = v.satisfies(SuiteId::ann);
    return out;
  }

  PropertyVerdict check_prop1(SkeletalModel const& model) {
    ModelVerdicts v(model);
    return check_prop1(v);
  }

  PropertyVerdict check_prop2(SkeletalModel const& model, Prop2Premise variant) {
    ModelVerdicts v(model);
    return check_prop2(v, variant);
  }

  PropertyVerdict check_thm1(SkeletalModel const& model) {
    ModelVerdicts v(model);
    return check_thm1(v);
  }

  PropertyVerdict check_thm2(SkeletalModel const& model) {
    ModelVerdicts v(model);
    return check_thm2(v);
  }

}  // namespace anncat
