#ifndef ANNCAT_DIAGRAM_HPP_
#define ANNCAT_DIAGRAM_HPP_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "anncat/model.hpp"

namespace anncat {

  //! Object expression over the variables of a diagram: 0, 1, variables,
  //! sums and products. Immutable; copies share structure.
  class ObjExpr {
   public:
    enum class Op : std::uint8_t { var, zero, one, sum, product };

    struct Node {
      Op                          op;
      std::size_t                 index = 0;
      std::shared_ptr<Node const> lhs;
      std::shared_ptr<Node const> rhs;
    };

    static ObjExpr var(std::size_t index);
    static ObjExpr zero();
    static ObjExpr one();

    friend ObjExpr operator+(ObjExpr const& x, ObjExpr const& y);
    friend ObjExpr operator*(ObjExpr const& x, ObjExpr const& y);

    Op op() const noexcept {
      return node_->op;
    }
    std::size_t index() const noexcept {
      return node_->index;
    }
    ObjExpr lhs() const {
      return ObjExpr(node_->lhs);
    }
    ObjExpr rhs() const {
      return ObjExpr(node_->rhs);
    }
    Node const& node() const noexcept {
      return *node_;
    }

   private:
    explicit ObjExpr(std::shared_ptr<Node const> node) : node_(std::move(node)) {}
    std::shared_ptr<Node const> node_;
  };

  // Throws ModelError for a variable outside the assignment.
  Elem eval_obj(ObjExpr const&        e,
                FiniteRing const&     ring,
                std::span<Elem const> assignment);

  std::size_t max_var(ObjExpr const& e) noexcept;  // 0 when there are none
  bool        uses_var(ObjExpr const& e) noexcept;

  std::string to_string(ObjExpr const& e, std::span<std::string const> names);

  //! A formal composite of constraint morphisms.
  class MorTerm {
   public:
    enum class Op : std::uint8_t {
      id,
      constraint,
      generic,
      inverse,
      compose,
      oplus,
      otimes
    };

    struct Node {
      Op                          op;
      Kind                        kind = Kind::aplus;
      std::size_t                 slot = 0;
      std::vector<ObjExpr>        objs;
      std::shared_ptr<Node const> lhs;
      std::shared_ptr<Node const> rhs;
    };

    static MorTerm id(ObjExpr x);
    static MorTerm constraint(Kind kind, std::vector<ObjExpr> args);
    static MorTerm generic(std::size_t slot);

    friend MorTerm inv(MorTerm const& f);
    // f >> g is "f then g".
    friend MorTerm operator>>(MorTerm const& f, MorTerm const& g);
    friend MorTerm operator+(MorTerm const& f, MorTerm const& g);
    friend MorTerm operator*(MorTerm const& f, MorTerm const& g);

    Op op() const noexcept {
      return node_->op;
    }
    Kind kind() const noexcept {
      return node_->kind;
    }
    std::size_t slot() const noexcept {
      return node_->slot;
    }
    std::vector<ObjExpr> const& objs() const noexcept {
      return node_->objs;
    }
    MorTerm lhs() const {
      return MorTerm(node_->lhs);
    }
    MorTerm rhs() const {
      return MorTerm(node_->rhs);
    }
    Node const& node() const noexcept {
      return *node_;
    }

   private:
    explicit MorTerm(std::shared_ptr<Node const> node) : node_(std::move(node)) {}
    std::shared_ptr<Node const> node_;
  };

  bool uses_derived_units(MorTerm const& t) noexcept;

  std::string to_string(MorTerm const& t, std::span<std::string const> names);

  // Everything eval_term needs besides the term.
  struct EvalEnv {
    SkeletalModel const&   model;
    std::span<Elem const>  assignment;
    std::span<Elem const>  generics = {};
    std::span<ObjExpr const> slots  = {};
    DerivedUnits const*    units    = nullptr;
  };

  //! Evaluates a term to its morphism. Throws DiagramTypeError when a
  //! composite does not line up, ModelError on arity or unit problems.
  Morphism eval_term(MorTerm const& t, EvalEnv const& env);

  //! The middle-four interchange (U+V)+(Z+T) -> (U+Z)+(V+T) built from
  //! aplus, c and identities:
  //!   aplus(U,V,Z+T) >> id+inv(aplus(V,Z,T)) >> id+(c(V,Z)+id)
  //!     >> id+aplus(Z,V,T) >> inv(aplus(U,Z,V+T))
  MorTerm build_v(ObjExpr const& u,
                  ObjExpr const& v,
                  ObjExpr const& z,
                  ObjExpr const& t);

  //! Two parallel composites over object variables. Generic slot i is a
  //! morphism on the object slots[i] whose value ranges over all of M.
  struct DiagramSpec {
    std::string              name;
    std::vector<std::string> variables;
    std::vector<ObjExpr>     slots;
    MorTerm                  lhs;
    MorTerm                  rhs;
    std::string              description;

    std::size_t arity() const noexcept {
      return variables.size();
    }
    bool needs_units() const noexcept {
      return uses_derived_units(lhs) || uses_derived_units(rhs);
    }
  };

  struct Failure {
    std::vector<Elem> assignment;
    std::vector<Elem> generics;
    Elem              lhs;
    Elem              rhs;

    friend bool operator==(Failure const&, Failure const&) = default;
  };

  struct CheckReport {
    std::string          name;
    std::size_t          total = 0;
    std::vector<Failure> failures;
    bool                 passed = true;

    friend bool operator==(CheckReport const&, CheckReport const&) = default;
  };

  //! Every assignment |R|^arity x |M|^slots, in lexicographic order (first
  //! variable most significant, generics after variables). Failures are
  //! assignments where the two path values differ; a source or target
  //! mismatch between the paths throws DiagramTypeError.
  CheckReport check_diagram(DiagramSpec const&   spec,
                            SkeletalModel const& model,
                            DerivedUnits const*  units = nullptr);

  // Same verdict as check_diagram(...).passed, stopping at the first failure.
  bool diagram_holds(DiagramSpec const&   spec,
                     SkeletalModel const& model,
                     DerivedUnits const*  units = nullptr);

  std::size_t assignment_count(DiagramSpec const& spec, SkeletalModel const& model);

  // One arrow of a path, with the value accumulated up to and including it.
  struct TraceStep {
    std::string label;
    Elem        source;
    Elem        target;
    Elem        value;
    Elem        running;
  };

  //! Splits the top-level composite chain of t into arrows and evaluates
  //! each, threading the running value.
  std::vector<TraceStep> trace_term(MorTerm const&               t,
                                    EvalEnv const&               env,
                                    std::span<std::string const> names);

}  // namespace anncat

#endif  // ANNCAT_DIAGRAM_HPP_
