#ifndef ANNCAT_REPORT_HPP_
#define ANNCAT_REPORT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "anncat/axioms.hpp"
#include "anncat/search.hpp"

namespace anncat {

  inline constexpr std::string_view kToolName    = "anncat";
  inline constexpr std::string_view kToolVersion = "0.1.0";

  using ordered_json = nlohmann::ordered_json;

  std::string sha256_hex(std::string_view data);

  ordered_json to_json(CheckReport const& report);
  ordered_json suite_report_json(SuiteReport const& report, std::string_view digest);
  std::string  suite_report_text(SuiteReport const& report);

  ordered_json derive_report_json(DerivedUnits const& units, std::string_view digest);
  std::string  derive_report_text(DerivedUnits const& units);

  // Stable description of a space; its hash is the input digest of a search.
  ordered_json space_json(SearchSpace const& space);

  // example_files[i] names the file written for outcome.counterexamples[i],
  // or is empty when none was written.
  ordered_json search_report_json(SearchSpace const&              space,
                                  SearchOutcome const&            outcome,
                                  std::vector<std::string> const& example_files);
  std::string  search_report_text(SearchSpace const& space, SearchOutcome const& outcome);

  // Wording used for the search verdict; an empty counterexample list is
  // never presented as settling independence.
  std::string search_conclusion(SearchOutcome const& outcome);

  // Pretty JSON with a trailing newline.
  std::string dump(ordered_json const& doc);

}  // namespace anncat

#endif  // ANNCAT_REPORT_HPP_
