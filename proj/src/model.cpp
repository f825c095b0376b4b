#include "anncat/model.hpp"

#include <string>
#include <utility>

#include "anncat/error.hpp"

namespace anncat {

  namespace {

    constexpr std::array<std::string_view, 11> kKindNames
        = {"aplus", "c", "g", "d", "a", "l", "r", "L", "R", "lhat", "rhat"};

    constexpr std::array<std::string_view, kTableCount> kTableNames
        = {"xi", "eta", "g", "d", "alpha", "lam_u", "rho_u", "L", "R"};

    constexpr std::array<std::size_t, kTableCount> kTableArity
        = {3, 2, 1, 1, 3, 1, 1, 3, 3};

    std::size_t power(std::size_t base, std::size_t exp) {
      std::size_t out = 1;
      while (exp-- > 0) {
        out *= base;
      }
      return out;
    }

  }  // namespace

  std::string_view kind_name(Kind k) noexcept {
    return kKindNames[static_cast<std::size_t>(k)];
  }

  std::optional<Kind> parse_kind(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kKindNames.size(); ++i) {
      if (kKindNames[i] == name) {
        return static_cast<Kind>(i);
      }
    }
    return std::nullopt;
  }

  std::size_t kind_arity(Kind k) noexcept {
    switch (k) {
      case Kind::aplus:
      case Kind::a:
      case Kind::L:
      case Kind::R:
        return 3;
      case Kind::c:
        return 2;
      default:
        return 1;
    }
  }

  std::string_view table_name(TableId t) noexcept {
    return kTableNames[static_cast<std::size_t>(t)];
  }

  std::optional<TableId> parse_table(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kTableNames.size(); ++i) {
      if (kTableNames[i] == name) {
        return static_cast<TableId>(i);
      }
    }
    if (name == "Ldist") {
      return TableId::Ldist;
    }
    if (name == "Rdist") {
      return TableId::Rdist;
    }
    return std::nullopt;
  }

  std::size_t table_arity(TableId t) noexcept {
    return kTableArity[static_cast<std::size_t>(t)];
  }

  TableId table_of(Kind k) {
    switch (k) {
      case Kind::aplus:
        return TableId::xi;
      case Kind::c:
        return TableId::eta;
      case Kind::g:
        return TableId::g;
      case Kind::d:
        return TableId::d;
      case Kind::a:
        return TableId::alpha;
      case Kind::l:
        return TableId::lam_u;
      case Kind::r:
        return TableId::rho_u;
      case Kind::L:
        return TableId::Ldist;
      case Kind::R:
        return TableId::Rdist;
      default:
        throw ModelError(std::string("no stored table for derived kind ")
                         + std::string(kind_name(k)));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // ConstraintTable / SkeletalModel
  ////////////////////////////////////////////////////////////////////////

  ConstraintTable::ConstraintTable(std::size_t arity, std::size_t ring_order)
      : arity_(arity), n_(ring_order), data_(power(ring_order, arity), 0) {}

  Elem ConstraintTable::at(std::span<Elem const> args) const {
    if (args.size() != arity_) {
      throw ModelError("table lookup with " + std::to_string(args.size())
                       + " arguments, expected " + std::to_string(arity_));
    }
    std::size_t index = 0;
    for (Elem e : args) {
      if (e >= n_) {
        throw ModelError("table lookup argument out of range");
      }
      index = index * n_ + e;
    }
    return data_[index];
  }

  SkeletalModel::SkeletalModel(FiniteRing ring, FiniteBimodule module)
      : ring_(std::move(ring)), module_(std::move(module)) {
    if (module_.ring_order() != ring_.order()) {
      throw ShapeError("module actions do not match the ring order");
    }
    tables_.reserve(kTableCount);
    for (std::size_t i = 0; i < kTableCount; ++i) {
      tables_.emplace_back(kTableArity[i], ring_.order());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphism arithmetic
  ////////////////////////////////////////////////////////////////////////

  Morphism compose(SkeletalModel const& model, Morphism f, Morphism g) {
    if (f.target != g.source) {
      throw DiagramTypeError("composite of incompatible arrows: target "
                             + std::to_string(f.target) + " then source "
                             + std::to_string(g.source));
    }
    return {f.source, g.target, model.module().add(f.value, g.value)};
  }

  Morphism oplus_mor(SkeletalModel const& model, Morphism f, Morphism g) {
    auto const& R = model.ring();
    return {R.add(f.source, g.source),
            R.add(f.target, g.target),
            model.module().add(f.value, g.value)};
  }

  Morphism otimes_mor(SkeletalModel const& model, Morphism f, Morphism g) {
    auto const& R = model.ring();
    auto const& M = model.module();
    return {R.mul(f.source, g.source),
            R.mul(f.target, g.target),
            M.add(M.left(f.source, g.value), M.right(f.value, g.source))};
  }

  Morphism invert(SkeletalModel const& model, Morphism f) {
    return {f.target, f.source, model.module().neg(f.value)};
  }

  ////////////////////////////////////////////////////////////////////////
  // constraint
  ////////////////////////////////////////////////////////////////////////

  Morphism constraint(SkeletalModel const&  model,
                      Kind                  kind,
                      std::span<Elem const> args,
                      DerivedUnits const*   units) {
    if (args.size() != kind_arity(kind)) {
      throw ModelError(std::string("constraint ") + std::string(kind_name(kind))
                       + " takes " + std::to_string(kind_arity(kind))
                       + " arguments, got " + std::to_string(args.size()));
    }
    auto const& R = model.ring();
    for (Elem e : args) {
      if (e >= R.order()) {
        throw ModelError("constraint argument out of range");
      }
    }
    auto add = [&R](Elem x, Elem y) { return R.add(x, y); };
    auto mul = [&R](Elem x, Elem y) { return R.mul(x, y); };

    Elem src = 0, tgt = 0, val = 0;
    switch (kind) {
      case Kind::aplus:
        src = add(add(args[0], args[1]), args[2]);
        tgt = add(args[0], add(args[1], args[2]));
        val = model.xi()(args[0], args[1], args[2]);
        break;
      case Kind::c:
        src = add(args[0], args[1]);
        tgt = add(args[1], args[0]);
        val = model.eta()(args[0], args[1]);
        break;
      case Kind::g:
        src = add(R.zero(), args[0]);
        tgt = args[0];
        val = model.g()(args[0]);
        break;
      case Kind::d:
        src = add(args[0], R.zero());
        tgt = args[0];
        val = model.d()(args[0]);
        break;
      case Kind::a:
        src = mul(args[0], mul(args[1], args[2]));
        tgt = mul(mul(args[0], args[1]), args[2]);
        val = model.alpha()(args[0], args[1], args[2]);
        break;
      case Kind::l:
        src = mul(R.one(), args[0]);
        tgt = args[0];
        val = model.lam_u()(args[0]);
        break;
      case Kind::r:
        src = mul(args[0], R.one());
        tgt = args[0];
        val = model.rho_u()(args[0]);
        break;
      case Kind::L:
        src = mul(args[0], add(args[1], args[2]));
        tgt = add(mul(args[0], args[1]), mul(args[0], args[2]));
        val = model.Ldist()(args[0], args[1], args[2]);
        break;
      case Kind::R:
        src = mul(add(args[0], args[1]), args[2]);
        tgt = add(mul(args[0], args[2]), mul(args[1], args[2]));
        val = model.Rdist()(args[0], args[1], args[2]);
        break;
      case Kind::lhat:
      case Kind::rhat: {
        bool const left = kind == Kind::lhat;
        if (units == nullptr) {
          throw ModelError(std::string(kind_name(kind))
                           + " requires derived unit isomorphisms");
        }
        auto const& derivation = left ? units->lhat : units->rhat;
        if (!derivation.consistent) {
          throw ModelError(std::string(kind_name(kind))
                           + " is not uniquely determined for this model");
        }
        src = left ? mul(args[0], R.zero()) : mul(R.zero(), args[0]);
        tgt = R.zero();
        val = derivation.table[args[0]];
        break;
      }
    }
    if (src != tgt) {
      throw ModelError(std::string("constraint ") + std::string(kind_name(kind))
                       + " has distinct source and target; ring tables are "
                         "not a ring");
    }
    return {src, tgt, val};
  }

  ////////////////////////////////////////////////////////////////////////
  // Derived units
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // candidate(A, X) for one side; `forced` and `forced_d` give the values
    // pinned by the g-form and d-form squares.
    template <typename GForm, typename DForm>
    UnitDerivation derive_unit(SkeletalModel const& model,
                               GForm                forced,
                               DForm                forced_d) {
      auto const&    R = model.ring();
      UnitDerivation out;
      out.table.resize(R.order());
      for (std::size_t a = 0; a < R.order(); ++a) {
        Elem const A   = static_cast<Elem>(a);
        Elem const ref = forced(A, R.zero());
        out.table[a]   = ref;
        for (std::size_t x = 0; x < R.order(); ++x) {
          Elem const X    = static_cast<Elem>(x);
          Elem const cand = forced(A, X);
          if (cand != ref) {
            out.consistent = false;
            out.conflicts.push_back({A, X, cand, ref});
          }
          Elem const cand_d = forced_d(A, X);
          if (cand_d != ref) {
            out.cross_conflicts.push_back({A, X, cand_d, ref});
          }
        }
      }
      return out;
    }

  }  // namespace

  UnitDerivation derive_lhat(SkeletalModel const& model) {
    auto const& R = model.ring();
    auto const& M = model.module();
    auto        g_form = [&](Elem A, Elem X) {
      Elem v = M.left(A, model.g()(X));
      v      = M.sub(v, model.Ldist()(A, R.zero(), X));
      return M.sub(v, model.g()(R.mul(A, X)));
    };
    auto d_form = [&](Elem A, Elem X) {
      Elem v = M.left(A, model.d()(X));
      v      = M.sub(v, model.Ldist()(A, X, R.zero()));
      return M.sub(v, model.d()(R.mul(A, X)));
    };
    return derive_unit(model, g_form, d_form);
  }

  UnitDerivation derive_rhat(SkeletalModel const& model) {
    auto const& R = model.ring();
    auto const& M = model.module();
    auto        g_form = [&](Elem A, Elem X) {
      Elem v = M.right(model.g()(X), A);
      v      = M.sub(v, model.Rdist()(R.zero(), X, A));
      return M.sub(v, model.g()(R.mul(X, A)));
    };
    auto d_form = [&](Elem A, Elem X) {
      Elem v = M.right(model.d()(X), A);
      v      = M.sub(v, model.Rdist()(X, R.zero(), A));
      return M.sub(v, model.d()(R.mul(X, A)));
    };
    return derive_unit(model, g_form, d_form);
  }

  DerivedUnits derive_units(SkeletalModel const& model) {
    return {derive_lhat(model), derive_rhat(model)};
  }

}  // namespace anncat
