#ifndef ANNCAT_SEARCH_HPP_
#define ANNCAT_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "anncat/axioms.hpp"
#include "anncat/model.hpp"

namespace anncat {

  inline constexpr std::uint64_t kExhaustiveBound = std::uint64_t{1} << 24;

  // Ring menu: z2, z3, z4. Throws SpaceError otherwise.
  FiniteRing ring_from_token(std::string_view token);
  // Module menu: "regular" (the ring over itself) or "z2" (Z/2 through k.1
  // -> k mod 2). Throws SpaceError otherwise.
  FiniteBimodule module_from_token(std::string_view token, FiniteRing const& ring);

  // Comma-separated table names; "none" or "" for the empty list. Returns
  // the tables in canonical order without duplicates.
  std::vector<TableId> parse_vary_list(std::string_view list);

  enum class SearchMode : std::uint8_t { exhaustive, random };

  //! A family of models sharing ring, module and the non-varied ("fixed")
  //! tables, which are taken from `base` (all zero for the strict base).
  struct SearchSpace {
    SkeletalModel        base;
    std::vector<TableId> varied;
    SearchMode           mode  = SearchMode::exhaustive;
    std::uint64_t        seed  = 0;
    std::uint64_t        count = 0;
    std::string          ring_label;
    std::string          module_label;
    bool                 strict_base = true;

    std::size_t varied_entries() const noexcept;
  };

  SearchSpace strict_space(std::string_view     ring_token,
                           std::string_view     module_token,
                           std::vector<TableId> varied);

  // |M|^entries, or 0 when it exceeds 2^64.
  std::uint64_t exhaustive_size(SearchSpace const& space) noexcept;

  //! Models of a space in a fixed order. Exhaustive spaces are enumerated
  //! lexicographically over the varied entries (tables in canonical order,
  //! row-major, the last entry fastest), starting from all zeros. Random
  //! spaces draw each entry as mt19937_64(seed)() % |M|, model after model.
  class ModelStream {
   public:
    // Throws SpaceError if an exhaustive space exceeds kExhaustiveBound.
    explicit ModelStream(SearchSpace space);
    ModelStream(ModelStream const&)            = delete;
    ModelStream& operator=(ModelStream const&) = delete;

    std::uint64_t size() const noexcept {
      return size_;
    }
    // Advances to the next model; false when exhausted.
    bool next();
    std::uint64_t index() const noexcept {
      return index_;
    }
    SkeletalModel const& model() const noexcept {
      return model_;
    }

   private:
    void write_digits();

    SearchSpace                space_;
    SkeletalModel              model_;
    std::vector<Elem*>         cells_;
    std::vector<Elem>          digits_;
    std::uint64_t              size_;
    std::uint64_t              index_   = 0;
    bool                       started_ = false;
    std::mt19937_64            rng_;
  };

  // Calls visit(index, model) for every model of the space, in order.
  void enumerate_models(
      SearchSpace const&                                              space,
      std::function<void(std::uint64_t, SkeletalModel const&)> const& visit);

  struct Counterexample {
    std::uint64_t index;
    SkeletalModel model;
  };

  struct TheoremViolation {
    std::uint64_t index;
    std::string   property;  // prop1, prop2, thm1 or thm2
  };

  struct SearchOptions {
    Prop2Premise prop2         = Prop2Premise::full;
    std::size_t  keep_examples = 100;  // counterexample models retained
  };

  struct SearchOutcome {
    std::uint64_t                 visited              = 0;
    std::uint64_t                 ann_pass             = 0;
    std::uint64_t                 cring_pass           = 0;
    std::uint64_t                 cring_u_pass         = 0;
    std::uint64_t                 counterexample_count = 0;
    std::vector<Counterexample>   counterexamples;
    std::vector<TheoremViolation> violations;
  };

  //! Streams the space through the cring suite; cring models failing the u
  //! suite are counterexamples. Every model is also run through the
  //! implication checks of prop1, prop2, thm1 and thm2.
  SearchOutcome find_u_counterexample(SearchSpace const&   space,
                                      SearchOptions const& options = {});

}  // namespace anncat

#endif  // ANNCAT_SEARCH_HPP_
