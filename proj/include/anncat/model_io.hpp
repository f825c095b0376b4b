#ifndef ANNCAT_MODEL_IO_HPP_
#define ANNCAT_MODEL_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "anncat/model.hpp"

namespace anncat {

  //! A model document: JSON with sections "ring", "module", "constraints" and
  //! an optional "metadata" {name, notes}. Constraint tables are nested
  //! arrays of module indices indexed by ring indices; missing tables are
  //! all-zero.
  struct ModelFile {
    SkeletalModel model;
    std::string   name;
    std::string   notes;
  };

  // Throws InputError for malformed documents or out-of-range entries.
  ModelFile parse_model(std::string_view text);
  ModelFile load_model(std::filesystem::path const& path);

  //! Canonical text: fixed key order, every table present, innermost rows
  //! on one line. format_model(parse_model(format_model(m))) is a fixed point.
  std::string format_model(ModelFile const& file);
  void        save_model(std::filesystem::path const& path, ModelFile const& file);

  std::string read_file(std::filesystem::path const& path);

}  // namespace anncat

#endif  // ANNCAT_MODEL_IO_HPP_
