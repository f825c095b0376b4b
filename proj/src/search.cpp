#include "anncat/search.hpp"

#include <algorithm>
#include <string>

#include "anncat/error.hpp"

namespace anncat {

  FiniteRing ring_from_token(std::string_view token) {
    if (token == "z2") {
      return cyclic_ring(2);
    }
    if (token == "z3") {
      return cyclic_ring(3);
    }
    if (token == "z4") {
      return cyclic_ring(4);
    }
    throw SpaceError("unknown ring \"" + std::string(token)
                     + "\" (expected z2, z3 or z4)");
  }

  FiniteBimodule module_from_token(std::string_view token, FiniteRing const& ring) {
    if (token == "regular") {
      return ring_bimodule(ring);
    }
    if (token == "z2") {
      return cyclic_bimodule(ring, 2);
    }
    throw SpaceError("unknown module \"" + std::string(token)
                     + "\" (expected regular or z2)");
  }

  std::vector<TableId> parse_vary_list(std::string_view list) {
    std::vector<TableId> out;
    if (list.empty() || list == "none") {
      return out;
    }
    std::size_t pos = 0;
    while (pos <= list.size()) {
      std::size_t      end  = std::min(list.find(',', pos), list.size());
      std::string_view item = list.substr(pos, end - pos);
      auto             id   = parse_table(item);
      if (!id) {
        throw SpaceError("unknown table \"" + std::string(item) + "\" in vary list");
      }
      if (std::find(out.begin(), out.end(), *id) == out.end()) {
        out.push_back(*id);
      }
      pos = end + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t SearchSpace::varied_entries() const noexcept {
    std::size_t total = 0;
    for (TableId id : varied) {
      total += base.table(id).size();
    }
    return total;
  }

  SearchSpace strict_space(std::string_view     ring_token,
                           std::string_view     module_token,
                           std::vector<TableId> varied) {
    FiniteRing     ring   = ring_from_token(ring_token);
    FiniteBimodule module = module_from_token(module_token, ring);
    if (auto check = validate_bimodule(ring, module); !check.passed()) {
      throw SpaceError("module " + std::string(module_token) + " over " + std::string(ring_token)
                       + " is not a bimodule: " + check.summary());
    }
    std::sort(varied.begin(), varied.end());
    varied.erase(std::unique(varied.begin(), varied.end()), varied.end());
    return SearchSpace{SkeletalModel(std::move(ring), std::move(module)),
                       std::move(varied),
                       SearchMode::exhaustive,
                       0,
                       0,
                       std::string(ring_token),
                       std::string(module_token),
                       true};
  }

  std::uint64_t exhaustive_size(SearchSpace const& space) noexcept {
    std::uint64_t const m     = space.base.module().order();
    std::uint64_t       total = 1;
    for (std::size_t i = 0; i < space.varied_entries(); ++i) {
      if (total > UINT64_MAX / m) {
        return 0;
      }
      total *= m;
    }
    return total;
  }

  ////////////////////////////////////////////////////////////////////////
  // ModelStream
  ////////////////////////////////////////////////////////////////////////

  ModelStream::ModelStream(SearchSpace space)
      : space_(std::move(space)), model_(space_.base), rng_(space_.seed) {
    for (TableId id : space_.varied) {
      for (Elem& cell : model_.table(id).data()) {
        cells_.push_back(&cell);
      }
    }
    digits_.assign(cells_.size(), 0);
    if (space_.mode == SearchMode::exhaustive) {
      size_ = exhaustive_size(space_);
      if (size_ == 0 || size_ > kExhaustiveBound) {
        throw SpaceError("exhaustive space has |M|^" + std::to_string(cells_.size())
                         + " models, above the bound of 2^24; use random mode");
      }
    } else {
      size_ = space_.count;
    }
  }

  void ModelStream::write_digits() {
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      *cells_[i] = digits_[i];
    }
  }

  bool ModelStream::next() {
    if (started_) {
      ++index_;
    }
    if (index_ >= size_) {
      return false;
    }
    Elem const m = static_cast<Elem>(space_.base.module().order());
    if (space_.mode == SearchMode::random) {
      for (auto& dgt : digits_) {
        dgt = static_cast<Elem>(rng_() % m);
      }
    } else if (started_) {
      for (std::size_t i = digits_.size(); i-- > 0;) {
        if (++digits_[i] < m) {
          break;
        }
        digits_[i] = 0;
      }
    }
    started_ = true;
    write_digits();
    return true;
  }

  void enumerate_models(
      SearchSpace const&                                              space,
      std::function<void(std::uint64_t, SkeletalModel const&)> const& visit) {
    ModelStream stream(space);
    while (stream.next()) {
      visit(stream.index(), stream.model());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // find_u_counterexample
  ////////////////////////////////////////////////////////////////////////

  SearchOutcome find_u_counterexample(SearchSpace const&   space,
                                      SearchOptions const& options) {
    SearchOutcome out;
    ModelStream   stream(space);
    while (stream.next()) {
      SkeletalModel const& model = stream.model();
      std::uint64_t const  index = stream.index();
      ModelVerdicts        v(model);
      ++out.visited;

      if (v.satisfies(SuiteId::cring)) {
        ++out.cring_pass;
        if (v.satisfies(SuiteId::u)) {
          ++out.cring_u_pass;
        } else {
          ++out.counterexample_count;
          if (out.counterexamples.size() < options.keep_examples) {
            out.counterexamples.push_back({index, model});
          }
        }
      }

      auto record = [&](PropertyVerdict verdict, char const* name) {
        if (!verdict.respected()) {
          out.violations.push_back({index, name});
        }
      };
      record(check_prop1(v), "prop1");
      record(check_prop2(v, options.prop2), "prop2");
      record(check_thm1(v), "thm1");
      record(check_thm2(v), "thm2");
      if (v.satisfies(SuiteId::ann)) {
        ++out.ann_pass;
      }
    }
    return out;
  }

}  // namespace anncat
