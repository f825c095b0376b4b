#ifndef ANNCAT_AXIOMS_HPP_
#define ANNCAT_AXIOMS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anncat/diagram.hpp"

namespace anncat {

  enum class SuiteId : std::uint8_t {
    pic,
    tensor,
    ann1,
    ann1_minus_c,
    ann2,
    ann3,
    ann,
    u,
    cring
  };

  // Pseudo-members of the u suite: uniqueness of the derived unit
  // isomorphisms across probes.
  inline constexpr std::string_view kLhatConsistency = "lhat_consistency";
  inline constexpr std::string_view kRhatConsistency = "rhat_consistency";

  struct AxiomSuite {
    SuiteId                  id;
    std::string              name;
    std::vector<std::string> members;
  };

  AxiomSuite const&      suite(SuiteId id);
  std::optional<SuiteId> parse_suite(std::string_view name) noexcept;
  std::vector<AxiomSuite> const& all_suites();

  struct SuiteReport {
    std::string              suite;
    std::vector<CheckReport> reports;
    // Members that could not be evaluated (unit diagrams of a model whose
    // derived units are not unique).
    std::vector<std::string> skipped;
    bool                     passed = true;
  };

  //! Runs every member and keeps every failure; never stops early.
  SuiteReport check_suite(SkeletalModel const& model, AxiomSuite const& suite);

  // Consistency pseudo-check for one side of the derived units.
  CheckReport unit_consistency_report(std::string_view      name,
                                      UnitDerivation const& derivation,
                                      std::size_t           ring_order);

  //! Memoised yes/no verdicts for one model. Diagrams are evaluated at most
  //! once and suites stop at the first failing member, cheapest first.
  class ModelVerdicts {
   public:
    explicit ModelVerdicts(SkeletalModel const& model);

    bool holds(DiagramSpec const& spec);
    bool satisfies(AxiomSuite const& suite);
    bool satisfies(SuiteId id) {
      return satisfies(suite(id));
    }
    bool satisfies_all(std::vector<std::string> const& members);

    DerivedUnits const& units();

   private:
    bool holds_member(std::string const& name);

    SkeletalModel const&        model_;
    std::vector<std::int8_t>    memo_;
    std::optional<DerivedUnits> units_;
  };

  struct PropertyVerdict {
    bool premise    = false;
    bool conclusion = false;

    bool respected() const noexcept {
      return !premise || conclusion;
    }
    friend bool operator==(PropertyVerdict const&, PropertyVerdict const&)
        = default;
  };

  enum class Prop2Premise : std::uint8_t { full, without_hexagon };

  // The members of ann except lfun_c and rfun_c.
  std::vector<std::string> prop2_premise_members(Prop2Premise variant);

  //! ann => derived units unique and the unit diagrams commute.
  PropertyVerdict check_prop1(SkeletalModel const& model);
  PropertyVerdict check_prop1(ModelVerdicts& verdicts);

  //! ann without the c-compatibilities => lfun_c and rfun_c.
  PropertyVerdict check_prop2(SkeletalModel const& model,
                              Prop2Premise variant = Prop2Premise::full);
  PropertyVerdict check_prop2(ModelVerdicts& verdicts,
                              Prop2Premise   variant = Prop2Premise::full);

  //! ann => d3.1 and d3.1p.
  PropertyVerdict check_thm1(SkeletalModel const& model);
  PropertyVerdict check_thm1(ModelVerdicts& verdicts);

  //! cring and u => ann (equivalently, given cring, the four functor
  //! compatibilities lfun_aplus, rfun_aplus, lfun_c, rfun_c).
  PropertyVerdict check_thm2(SkeletalModel const& model);
  PropertyVerdict check_thm2(ModelVerdicts& verdicts);

}  // namespace anncat

#endif  // ANNCAT_AXIOMS_HPP_
