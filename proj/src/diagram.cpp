#include "anncat/diagram.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "anncat/error.hpp"

namespace anncat {

  namespace {

    using ObjNode = ObjExpr::Node;
    using MorNode = MorTerm::Node;

    Elem eval_obj_node(ObjNode const&        n,
                       FiniteRing const&     R,
                       std::span<Elem const> assignment) {
      switch (n.op) {
        case ObjExpr::Op::var:
          if (n.index >= assignment.size()) {
            throw ModelError("unbound object variable " + std::to_string(n.index));
          }
          return assignment[n.index];
        case ObjExpr::Op::zero:
          return R.zero();
        case ObjExpr::Op::one:
          return R.one();
        case ObjExpr::Op::sum:
          return R.add(eval_obj_node(*n.lhs, R, assignment),
                       eval_obj_node(*n.rhs, R, assignment));
        case ObjExpr::Op::product:
          return R.mul(eval_obj_node(*n.lhs, R, assignment),
                       eval_obj_node(*n.rhs, R, assignment));
      }
      return 0;
    }

    Morphism eval_node(MorNode const& n, EvalEnv const& env) {
      auto const& R = env.model.ring();
      switch (n.op) {
        case MorTerm::Op::id: {
          Elem x = eval_obj_node(n.objs.front().node(), R, env.assignment);
          return identity(env.model, x);
        }
        case MorTerm::Op::constraint: {
          std::array<Elem, 3> args{};
          if (n.objs.size() > args.size()) {
            throw ModelError("constraint with too many arguments");
          }
          for (std::size_t i = 0; i < n.objs.size(); ++i) {
            args[i] = eval_obj_node(n.objs[i].node(), R, env.assignment);
          }
          return constraint(env.model,
                            n.kind,
                            std::span<Elem const>(args.data(), n.objs.size()),
                            env.units);
        }
        case MorTerm::Op::generic: {
          if (n.slot >= env.generics.size() || n.slot >= env.slots.size()) {
            throw ModelError("generic morphism slot " + std::to_string(n.slot)
                             + " is not bound");
          }
          Elem x = eval_obj_node(env.slots[n.slot].node(), R, env.assignment);
          return {x, x, env.generics[n.slot]};
        }
        case MorTerm::Op::inverse:
          return invert(env.model, eval_node(*n.lhs, env));
        case MorTerm::Op::compose:
          return compose(env.model, eval_node(*n.lhs, env), eval_node(*n.rhs, env));
        case MorTerm::Op::oplus:
          return oplus_mor(
              env.model, eval_node(*n.lhs, env), eval_node(*n.rhs, env));
        case MorTerm::Op::otimes:
          return otimes_mor(
              env.model, eval_node(*n.lhs, env), eval_node(*n.rhs, env));
      }
      return {};
    }

    std::string obj_string(ObjNode const& n, std::span<std::string const> names) {
      switch (n.op) {
        case ObjExpr::Op::var:
          return n.index < names.size() ? names[n.index]
                                        : "v" + std::to_string(n.index);
        case ObjExpr::Op::zero:
          return "0";
        case ObjExpr::Op::one:
          return "1";
        case ObjExpr::Op::sum: {
          auto wrap = [&](ObjNode const& c) {
            auto s = obj_string(c, names);
            return c.op == ObjExpr::Op::sum ? "(" + s + ")" : s;
          };
          return wrap(*n.lhs) + "+" + wrap(*n.rhs);
        }
        case ObjExpr::Op::product: {
          auto wrap = [&](ObjNode const& c) {
            auto s = obj_string(c, names);
            bool atomic = c.op == ObjExpr::Op::var || c.op == ObjExpr::Op::zero
                          || c.op == ObjExpr::Op::one;
            return atomic ? s : "(" + s + ")";
          };
          return wrap(*n.lhs) + wrap(*n.rhs);
        }
      }
      return {};
    }

    std::string mor_string(MorNode const& n, std::span<std::string const> names) {
      switch (n.op) {
        case MorTerm::Op::id:
          return "id[" + obj_string(n.objs.front().node(), names) + "]";
        case MorTerm::Op::constraint: {
          std::string s(kind_name(n.kind));
          s += "(";
          for (std::size_t i = 0; i < n.objs.size(); ++i) {
            s += (i ? "," : "") + obj_string(n.objs[i].node(), names);
          }
          return s + ")";
        }
        case MorTerm::Op::generic:
          return "f" + std::to_string(n.slot);
        case MorTerm::Op::inverse:
          return "inv(" + mor_string(*n.lhs, names) + ")";
        case MorTerm::Op::compose:
          return mor_string(*n.lhs, names) + " ; " + mor_string(*n.rhs, names);
        case MorTerm::Op::oplus:
          return "(" + mor_string(*n.lhs, names) + " ⊕ " + mor_string(*n.rhs, names)
                 + ")";
        case MorTerm::Op::otimes:
          return "(" + mor_string(*n.lhs, names) + " ⊗ " + mor_string(*n.rhs, names)
                 + ")";
      }
      return {};
    }

    bool node_uses_units(MorNode const& n) noexcept {
      switch (n.op) {
        case MorTerm::Op::constraint:
          return n.kind == Kind::lhat || n.kind == Kind::rhat;
        case MorTerm::Op::inverse:
          return node_uses_units(*n.lhs);
        case MorTerm::Op::compose:
        case MorTerm::Op::oplus:
        case MorTerm::Op::otimes:
          return node_uses_units(*n.lhs) || node_uses_units(*n.rhs);
        default:
          return false;
      }
    }

    std::size_t max_var_node(ObjNode const& n) noexcept {
      switch (n.op) {
        case ObjExpr::Op::var:
          return n.index;
        case ObjExpr::Op::sum:
        case ObjExpr::Op::product:
          return std::max(max_var_node(*n.lhs), max_var_node(*n.rhs));
        default:
          return 0;
      }
    }

    bool uses_var_node(ObjNode const& n) noexcept {
      switch (n.op) {
        case ObjExpr::Op::var:
          return true;
        case ObjExpr::Op::sum:
        case ObjExpr::Op::product:
          return uses_var_node(*n.lhs) || uses_var_node(*n.rhs);
        default:
          return false;
      }
    }

    void flatten_chain(MorTerm const& t, std::vector<MorTerm>& out) {
      if (t.op() == MorTerm::Op::compose) {
        flatten_chain(t.lhs(), out);
        flatten_chain(t.rhs(), out);
      } else {
        out.push_back(t);
      }
    }

    // Lexicographic odometer over (variables..., generics...).
    class Odometer {
     public:
      Odometer(std::size_t arity,
               std::size_t ring_order,
               std::size_t slots,
               std::size_t module_order)
          : arity_(arity),
            digits_(arity + slots, 0),
            radix_(arity + slots, static_cast<Elem>(module_order)) {
        std::fill_n(radix_.begin(), arity, static_cast<Elem>(ring_order));
      }

      std::span<Elem const> assignment() const noexcept {
        return std::span<Elem const>(digits_).first(arity_);
      }
      std::span<Elem const> generics() const noexcept {
        return std::span<Elem const>(digits_).subspan(arity_);
      }

      // False once every combination has been visited.
      bool next() noexcept {
        for (std::size_t i = digits_.size(); i-- > 0;) {
          if (++digits_[i] < radix_[i]) {
            return true;
          }
          digits_[i] = 0;
        }
        return false;
      }

     private:
      std::size_t       arity_;
      std::vector<Elem> digits_;
      std::vector<Elem> radix_;
    };

    // Evaluates both sides at one assignment, asserting they are parallel.
    std::pair<Elem, Elem> evaluate_sides(DiagramSpec const& spec,
                                         EvalEnv const&     env) {
      Morphism l = eval_term(spec.lhs, env);
      Morphism r = eval_term(spec.rhs, env);
      if (l.source != r.source || l.target != r.target) {
        throw DiagramTypeError("diagram " + spec.name
                               + ": the two paths are not parallel");
      }
      return {l.value, r.value};
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // ObjExpr
  ////////////////////////////////////////////////////////////////////////

  ObjExpr ObjExpr::var(std::size_t index) {
    return ObjExpr(std::make_shared<Node const>(Node{Op::var, index, {}, {}}));
  }

  ObjExpr ObjExpr::zero() {
    return ObjExpr(std::make_shared<Node const>(Node{Op::zero, 0, {}, {}}));
  }

  ObjExpr ObjExpr::one() {
    return ObjExpr(std::make_shared<Node const>(Node{Op::one, 0, {}, {}}));
  }

  ObjExpr operator+(ObjExpr const& x, ObjExpr const& y) {
    return ObjExpr(std::make_shared<ObjExpr::Node const>(
        ObjExpr::Node{ObjExpr::Op::sum, 0, x.node_, y.node_}));
  }

  ObjExpr operator*(ObjExpr const& x, ObjExpr const& y) {
    return ObjExpr(std::make_shared<ObjExpr::Node const>(
        ObjExpr::Node{ObjExpr::Op::product, 0, x.node_, y.node_}));
  }

  Elem eval_obj(ObjExpr const&        e,
                FiniteRing const&     ring,
                std::span<Elem const> assignment) {
    return eval_obj_node(e.node(), ring, assignment);
  }

  std::size_t max_var(ObjExpr const& e) noexcept {
    return max_var_node(e.node());
  }

  bool uses_var(ObjExpr const& e) noexcept {
    return uses_var_node(e.node());
  }

  std::string to_string(ObjExpr const& e, std::span<std::string const> names) {
    return obj_string(e.node(), names);
  }

  ////////////////////////////////////////////////////////////////////////
  // MorTerm
  ////////////////////////////////////////////////////////////////////////

  MorTerm MorTerm::id(ObjExpr x) {
    Node n;
    n.op = Op::id;
    n.objs.push_back(std::move(x));
    return MorTerm(std::make_shared<Node const>(std::move(n)));
  }

  MorTerm MorTerm::constraint(Kind kind, std::vector<ObjExpr> args) {
    if (args.size() != kind_arity(kind)) {
      throw ModelError(std::string("constraint ") + std::string(kind_name(kind))
                       + " takes " + std::to_string(kind_arity(kind))
                       + " arguments");
    }
    Node n;
    n.op   = Op::constraint;
    n.kind = kind;
    n.objs = std::move(args);
    return MorTerm(std::make_shared<Node const>(std::move(n)));
  }

  MorTerm MorTerm::generic(std::size_t slot) {
    Node n;
    n.op = Op::generic;
    n.slot = slot;
    return MorTerm(std::make_shared<Node const>(std::move(n)));
  }

  MorTerm inv(MorTerm const& f) {
    MorTerm::Node n;
    n.op = MorTerm::Op::inverse;
    n.lhs = f.node_;
    return MorTerm(std::make_shared<MorTerm::Node const>(std::move(n)));
  }

  namespace {
    MorTerm::Node binary(MorTerm::Op op,
                         std::shared_ptr<MorTerm::Node const> f,
                         std::shared_ptr<MorTerm::Node const> g) {
      MorTerm::Node n;
      n.op = op;
      n.lhs = std::move(f);
      n.rhs = std::move(g);
      return n;
    }
  }  // namespace

  MorTerm operator>>(MorTerm const& f, MorTerm const& g) {
    return MorTerm(std::make_shared<MorTerm::Node const>(
        binary(MorTerm::Op::compose, f.node_, g.node_)));
  }

  MorTerm operator+(MorTerm const& f, MorTerm const& g) {
    return MorTerm(std::make_shared<MorTerm::Node const>(
        binary(MorTerm::Op::oplus, f.node_, g.node_)));
  }

  MorTerm operator*(MorTerm const& f, MorTerm const& g) {
    return MorTerm(std::make_shared<MorTerm::Node const>(
        binary(MorTerm::Op::otimes, f.node_, g.node_)));
  }

  bool uses_derived_units(MorTerm const& t) noexcept {
    return node_uses_units(t.node());
  }

  std::string to_string(MorTerm const& t, std::span<std::string const> names) {
    return mor_string(t.node(), names);
  }

  Morphism eval_term(MorTerm const& t, EvalEnv const& env) {
    return eval_node(t.node(), env);
  }

  MorTerm build_v(ObjExpr const& u,
                  ObjExpr const& v,
                  ObjExpr const& z,
                  ObjExpr const& t) {
    using M = MorTerm;
    return M::constraint(Kind::aplus, {u, v, z + t})
           >> (M::id(u) + inv(M::constraint(Kind::aplus, {v, z, t})))
           >> (M::id(u) + (M::constraint(Kind::c, {v, z}) + M::id(t)))
           >> (M::id(u) + M::constraint(Kind::aplus, {z, v, t}))
           >> inv(M::constraint(Kind::aplus, {u, z, v + t}));
  }

  ////////////////////////////////////////////////////////////////////////
  // Checking
  ////////////////////////////////////////////////////////////////////////

  std::size_t assignment_count(DiagramSpec const& spec, SkeletalModel const& model) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < spec.arity(); ++i) {
      total *= model.ring().order();
    }
    for (std::size_t i = 0; i < spec.slots.size(); ++i) {
      total *= model.module().order();
    }
    return total;
  }

  CheckReport check_diagram(DiagramSpec const&   spec,
                            SkeletalModel const& model,
                            DerivedUnits const*  units) {
    CheckReport report;
    report.name  = spec.name;
    report.total = assignment_count(spec, model);
    Odometer odo(spec.arity(),
                 model.ring().order(),
                 spec.slots.size(),
                 model.module().order());
    do {
      EvalEnv env{model, odo.assignment(), odo.generics(), spec.slots, units};
      auto [l, r] = evaluate_sides(spec, env);
      if (l != r) {
        report.failures.push_back(
            {std::vector<Elem>(odo.assignment().begin(), odo.assignment().end()),
             std::vector<Elem>(odo.generics().begin(), odo.generics().end()),
             l,
             r});
      }
    } while (odo.next());
    report.passed = report.failures.empty();
    return report;
  }

  bool diagram_holds(DiagramSpec const&   spec,
                     SkeletalModel const& model,
                     DerivedUnits const*  units) {
    Odometer odo(spec.arity(),
                 model.ring().order(),
                 spec.slots.size(),
                 model.module().order());
    do {
      EvalEnv env{model, odo.assignment(), odo.generics(), spec.slots, units};
      auto [l, r] = evaluate_sides(spec, env);
      if (l != r) {
        return false;
      }
    } while (odo.next());
    return true;
  }

  std::vector<TraceStep> trace_term(MorTerm const&               t,
                                    EvalEnv const&               env,
                                    std::span<std::string const> names) {
    std::vector<MorTerm> chain;
    flatten_chain(t, chain);
    std::vector<TraceStep> steps;
    steps.reserve(chain.size());
    Elem running = env.model.module().zero();
    for (std::size_t i = 0; i < chain.size(); ++i) {
      Morphism m = eval_term(chain[i], env);
      if (i > 0 && steps.back().target != m.source) {
        throw DiagramTypeError("arrow " + std::to_string(i + 1)
                               + " does not start where the previous one ends");
      }
      running = env.model.module().add(running, m.value);
      steps.push_back(
          {to_string(chain[i], names), m.source, m.target, m.value, running});
    }
    return steps;
  }

}  // namespace anncat
