#include "anncat/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "anncat/error.hpp"

namespace anncat {

  namespace {

    using json = nlohmann::json;

    int to_index(json const& v, std::string const& where) {
      if (!v.is_number_integer()) {
        throw InputError(where + ": expected an integer index");
      }
      return v.get<int>();
    }

    RawTable to_raw_table(json const& v, std::string const& where) {
      if (!v.is_array()) {
        throw InputError(where + ": expected an array of rows");
      }
      RawTable out;
      for (auto const& row : v) {
        if (!row.is_array()) {
          throw InputError(where + ": expected an array of rows");
        }
        std::vector<int> r;
        for (auto const& e : row) {
          r.push_back(to_index(e, where));
        }
        out.push_back(std::move(r));
      }
      return out;
    }

    json const& require(json const& obj, char const* key, std::string const& where) {
      auto it = obj.find(key);
      if (it == obj.end()) {
        throw InputError(where + ": missing \"" + key + "\"");
      }
      return *it;
    }

    void check_order_field(json const& section,
                           std::size_t actual,
                           std::string const& where) {
      if (auto it = section.find("order"); it != section.end()) {
        if (!it->is_number_integer() || it->get<long long>() != static_cast<long long>(actual)) {
          throw InputError(where + ": \"order\" does not match the table size");
        }
      }
    }

    // Reads a nested array of depth `arity` into the row-major table.
    void read_nested(json const&        v,
                     std::size_t        depth,
                     std::size_t        n,
                     std::size_t        m,
                     std::vector<Elem>& out,
                     std::string const& where) {
      if (depth == 0) {
        int e = to_index(v, where);
        if (e < 0 || static_cast<std::size_t>(e) >= m) {
          throw InputError(where + ": module index " + std::to_string(e)
                           + " out of range");
        }
        out.push_back(static_cast<Elem>(e));
        return;
      }
      if (!v.is_array() || v.size() != n) {
        throw InputError(where + ": expected a nested array with " + std::to_string(n)
                         + " entries per level");
      }
      for (auto const& sub : v) {
        read_nested(sub, depth - 1, n, m, out, where);
      }
    }

    void write_nested(std::ostream&         os,
                      std::span<Elem const> data,
                      std::size_t           depth,
                      std::size_t           n,
                      std::size_t           indent) {
      if (depth == 1) {
        os << '[';
        for (std::size_t i = 0; i < data.size(); ++i) {
          os << (i ? ", " : "") << static_cast<int>(data[i]);
        }
        os << ']';
        return;
      }
      std::size_t const stride = data.size() / n;
      os << "[\n";
      for (std::size_t i = 0; i < n; ++i) {
        os << std::string(indent + 2, ' ');
        write_nested(os, data.subspan(i * stride, stride), depth - 1, n, indent + 2);
        os << (i + 1 < n ? ",\n" : "\n");
      }
      os << std::string(indent, ' ') << ']';
    }

    // A rows x cols table, one row per line.
    void write_matrix(std::ostream&         os,
                      std::span<Elem const> data,
                      std::size_t           rows,
                      std::size_t           indent) {
      write_nested(os, data, 2, rows, indent);
    }

  }  // namespace

  std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  ModelFile parse_model(std::string_view text) {
    json doc;
    try {
      doc = json::parse(text.begin(), text.end());
    } catch (json::parse_error const& e) {
      throw InputError(std::string("model file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
      throw InputError("model file must be a JSON object");
    }
    for (auto const& [key, value] : doc.items()) {
      if (key != "ring" && key != "module" && key != "constraints"
          && key != "metadata") {
        throw InputError("unknown section \"" + key + "\"");
      }
    }

    try {
      json const& rj   = require(doc, "ring", "model");
      auto        ring = FiniteRing::from_tables(
          to_raw_table(require(rj, "add", "ring"), "ring.add"),
          to_raw_table(require(rj, "mul", "ring"), "ring.mul"),
          to_index(require(rj, "zero", "ring"), "ring.zero"),
          to_index(require(rj, "one", "ring"), "ring.one"));
      check_order_field(rj, ring.order(), "ring");

      json const& mj     = require(doc, "module", "model");
      auto        module = FiniteBimodule::from_tables(
          to_raw_table(require(mj, "add", "module"), "module.add"),
          to_index(require(mj, "zero", "module"), "module.zero"),
          to_raw_table(require(mj, "left_action", "module"), "module.left_action"),
          to_raw_table(require(mj, "right_action", "module"), "module.right_action"));
      check_order_field(mj, module.order(), "module");
      if (module.ring_order() != ring.order()) {
        throw InputError("module.left_action must have one row per ring element");
      }

      ModelFile file{SkeletalModel(std::move(ring), std::move(module)), {}, {}};
      std::size_t const n = file.model.ring().order();
      std::size_t const m = file.model.module().order();

      if (auto it = doc.find("constraints"); it != doc.end()) {
        if (!it->is_object()) {
          throw InputError("\"constraints\" must be an object");
        }
        for (auto const& [key, value] : it->items()) {
          auto id = parse_table(key);
          if (!id) {
            throw InputError("unknown constraint table \"" + key + "\"");
          }
          std::vector<Elem> data;
          read_nested(value, table_arity(*id), n, m, data, "constraints." + key);
          auto dst = file.model.table(*id).data();
          std::copy(data.begin(), data.end(), dst.begin());
        }
      }
      if (auto it = doc.find("metadata"); it != doc.end()) {
        if (!it->is_object()) {
          throw InputError("\"metadata\" must be an object");
        }
        if (auto nt = it->find("name"); nt != it->end() && nt->is_string()) {
          file.name = nt->get<std::string>();
        }
        if (auto nt = it->find("notes"); nt != it->end() && nt->is_string()) {
          file.notes = nt->get<std::string>();
        }
      }
      return file;
    } catch (ShapeError const& e) {
      throw InputError(e.what());
    } catch (json::exception const& e) {
      throw InputError(std::string("model file: ") + e.what());
    }
  }

  ModelFile load_model(std::filesystem::path const& path) {
    return parse_model(read_file(path));
  }

  std::string format_model(ModelFile const& file) {
    auto const& model = file.model;
    auto const& R     = model.ring();
    auto const& M     = model.module();
    std::size_t const n = R.order();
    std::size_t const m = M.order();

    std::ostringstream os;
    os << "{\n";
    if (!file.name.empty() || !file.notes.empty()) {
      os << "  \"metadata\": {\n"
         << "    \"name\": " << json(file.name).dump() << ",\n"
         << "    \"notes\": " << json(file.notes).dump() << "\n"
         << "  },\n";
    }
    os << "  \"ring\": {\n"
       << "    \"order\": " << n << ",\n"
       << "    \"zero\": " << static_cast<int>(R.zero()) << ",\n"
       << "    \"one\": " << static_cast<int>(R.one()) << ",\n"
       << "    \"add\": ";
    write_matrix(os, R.add_table(), n, 4);
    os << ",\n    \"mul\": ";
    write_matrix(os, R.mul_table(), n, 4);
    os << "\n  },\n";

    os << "  \"module\": {\n"
       << "    \"order\": " << m << ",\n"
       << "    \"zero\": " << static_cast<int>(M.zero()) << ",\n"
       << "    \"add\": ";
    write_matrix(os, M.add_table(), m, 4);
    os << ",\n    \"left_action\": ";
    write_matrix(os, M.left_table(), n, 4);
    os << ",\n    \"right_action\": ";
    write_matrix(os, M.right_table(), m, 4);
    os << "\n  },\n";

    os << "  \"constraints\": {\n";
    for (std::size_t i = 0; i < kTableCount; ++i) {
      auto id = static_cast<TableId>(i);
      os << "    \"" << table_name(id) << "\": ";
      write_nested(os, model.table(id).data(), table_arity(id), n, 4);
      os << (i + 1 < kTableCount ? ",\n" : "\n");
    }
    os << "  }\n}\n";
    return os.str();
  }

  void save_model(std::filesystem::path const& path, ModelFile const& file) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw InputError("cannot write " + path.string());
    }
    out << format_model(file);
  }

}  // namespace anncat
