#ifndef ANNCAT_MODEL_HPP_
#define ANNCAT_MODEL_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "anncat/algebra.hpp"

namespace anncat {

  //! Constraint morphisms. The first nine are stored as tables in a
  //! SkeletalModel; lhat and rhat come out of derive_units.
  //!
  //!   aplus(x,y,z) : (x+y)+z -> x+(y+z)     a(x,y,z) : x(yz) -> (xy)z
  //!   c(x,y)       : x+y -> y+x             l(x)     : 1x -> x
  //!   g(x)         : 0+x -> x               r(x)     : x1 -> x
  //!   d(x)         : x+0 -> x               lhat(A)  : A0 -> 0
  //!   L(A,X,Y)     : A(X+Y) -> AX+AY        rhat(A)  : 0A -> 0
  //!   R(X,Y,A)     : (X+Y)A -> XA+YA
  enum class Kind : std::uint8_t { aplus, c, g, d, a, l, r, L, R, lhat, rhat };

  inline constexpr std::array<Kind, 9> kModelKinds = {Kind::aplus,
                                                      Kind::c,
                                                      Kind::g,
                                                      Kind::d,
                                                      Kind::a,
                                                      Kind::l,
                                                      Kind::r,
                                                      Kind::L,
                                                      Kind::R};

  std::string_view    kind_name(Kind k) noexcept;
  std::optional<Kind> parse_kind(std::string_view name) noexcept;
  std::size_t         kind_arity(Kind k) noexcept;

  // Every morphism of the skeleton is an endomorphism; the value is the
  // automorphism component in M.
  struct Morphism {
    Elem source;
    Elem target;
    Elem value;

    friend bool operator==(Morphism const&, Morphism const&) = default;
  };

  //! One M-valued table indexed by arity-many ring elements, row-major.
  class ConstraintTable {
   public:
    ConstraintTable(std::size_t arity, std::size_t ring_order);

    std::size_t arity() const noexcept {
      return arity_;
    }
    std::size_t size() const noexcept {
      return data_.size();
    }

    Elem operator()(Elem x) const noexcept {
      return data_[x];
    }
    Elem operator()(Elem x, Elem y) const noexcept {
      return data_[x * n_ + y];
    }
    Elem operator()(Elem x, Elem y, Elem z) const noexcept {
      return data_[(x * n_ + y) * n_ + z];
    }
    Elem at(std::span<Elem const> args) const;

    std::span<Elem>       data() noexcept {
      return data_;
    }
    std::span<Elem const> data() const noexcept {
      return data_;
    }

    friend bool operator==(ConstraintTable const&, ConstraintTable const&)
        = default;

   private:
    std::size_t       arity_;
    std::size_t       n_;
    std::vector<Elem> data_;
  };

  // The tables of a skeletal model, in canonical order.
  enum class TableId : std::uint8_t {
    xi,
    eta,
    g,
    d,
    alpha,
    lam_u,
    rho_u,
    Ldist,
    Rdist
  };

  inline constexpr std::size_t kTableCount = 9;

  // File/CLI names: xi, eta, g, d, alpha, lam_u, rho_u, L, R.
  std::string_view       table_name(TableId t) noexcept;
  std::optional<TableId> parse_table(std::string_view name) noexcept;
  std::size_t            table_arity(TableId t) noexcept;
  TableId                table_of(Kind k);

  //! A candidate Ann-category / categorical ring in skeletal form: objects are
  //! ring elements, Aut(x) is M, and each constraint is an M-valued table.
  //! A freshly constructed model has all tables zero.
  class SkeletalModel {
   public:
    SkeletalModel(FiniteRing ring, FiniteBimodule module);

    FiniteRing const& ring() const noexcept {
      return ring_;
    }
    FiniteBimodule const& module() const noexcept {
      return module_;
    }

    ConstraintTable&       table(TableId t) noexcept {
      return tables_[static_cast<std::size_t>(t)];
    }
    ConstraintTable const& table(TableId t) const noexcept {
      return tables_[static_cast<std::size_t>(t)];
    }

    ConstraintTable const& xi() const noexcept {
      return table(TableId::xi);
    }
    ConstraintTable const& eta() const noexcept {
      return table(TableId::eta);
    }
    ConstraintTable const& g() const noexcept {
      return table(TableId::g);
    }
    ConstraintTable const& d() const noexcept {
      return table(TableId::d);
    }
    ConstraintTable const& alpha() const noexcept {
      return table(TableId::alpha);
    }
    ConstraintTable const& lam_u() const noexcept {
      return table(TableId::lam_u);
    }
    ConstraintTable const& rho_u() const noexcept {
      return table(TableId::rho_u);
    }
    ConstraintTable const& Ldist() const noexcept {
      return table(TableId::Ldist);
    }
    ConstraintTable const& Rdist() const noexcept {
      return table(TableId::Rdist);
    }

    friend bool operator==(SkeletalModel const&, SkeletalModel const&) = default;

   private:
    FiniteRing                   ring_;
    FiniteBimodule               module_;
    std::vector<ConstraintTable> tables_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Morphism arithmetic
  ////////////////////////////////////////////////////////////////////////

  // f then g. Throws DiagramTypeError when target(f) != source(g).
  Morphism compose(SkeletalModel const& model, Morphism f, Morphism g);
  Morphism oplus_mor(SkeletalModel const& model, Morphism f, Morphism g);
  // (s_f s_g, t_f t_g, s_f.value(g) + value(f).s_g)
  Morphism otimes_mor(SkeletalModel const& model, Morphism f, Morphism g);
  Morphism invert(SkeletalModel const& model, Morphism f);

  inline Morphism identity(SkeletalModel const& model, Elem x) {
    return {x, x, model.module().zero()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Derived unit isomorphisms
  ////////////////////////////////////////////////////////////////////////

  struct UnitConflict {
    Elem object;     // A
    Elem probe;      // X
    Elem candidate;  // value forced by probe X
    Elem reference;  // value forced by probe 0

    friend bool operator==(UnitConflict const&, UnitConflict const&) = default;
  };

  struct UnitDerivation {
    std::vector<Elem>         table;
    bool                      consistent = true;
    std::vector<UnitConflict> conflicts;
    // Probes where the d-form square disagrees with the g-form value.
    std::vector<UnitConflict> cross_conflicts;

    friend bool operator==(UnitDerivation const&, UnitDerivation const&)
        = default;
  };

  struct DerivedUnits {
    UnitDerivation lhat;
    UnitDerivation rhat;

    bool consistent() const noexcept {
      return lhat.consistent && rhat.consistent;
    }
  };

  //! lhat(A) solving the g-form unit square at probe X:
  //!   candidate(A, X) = A.g(X) - L(A,0,X) - g(AX),
  //! taken at X = 0 and compared against every other probe.
  UnitDerivation derive_lhat(SkeletalModel const& model);

  //! Mirror image: candidate(A, X) = g(X).A - R(0,X,A) - g(XA).
  UnitDerivation derive_rhat(SkeletalModel const& model);

  DerivedUnits derive_units(SkeletalModel const& model);

  //! The constraint morphism of the given kind at the given objects. Source
  //! and target are computed from the ring tables separately and must agree.
  //! lhat/rhat need consistent derived units.
  Morphism constraint(SkeletalModel const&  model,
                      Kind                  kind,
                      std::span<Elem const> args,
                      DerivedUnits const*   units = nullptr);

}  // namespace anncat

#endif  // ANNCAT_MODEL_HPP_
