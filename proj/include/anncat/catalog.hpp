#ifndef ANNCAT_CATALOG_HPP_
#define ANNCAT_CATALOG_HPP_

#include <string_view>
#include <vector>

#include "anncat/diagram.hpp"

namespace anncat {

  //! Every coherence diagram the workbench knows, in a fixed order. Names are
  //! stable identifiers used by suites, reports and the CLI.
  std::vector<DiagramSpec> const& catalog();

  // nullptr when there is no diagram of that name.
  DiagramSpec const* find_diagram(std::string_view name) noexcept;

  // Throws ModelError for unknown names.
  DiagramSpec const& diagram(std::string_view name);

}  // namespace anncat

#endif  // ANNCAT_CATALOG_HPP_
