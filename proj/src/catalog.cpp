#include "anncat/catalog.hpp"

#include <string>
#include <utility>

#include "anncat/error.hpp"

namespace anncat {

  namespace {

    using M = MorTerm;

    ObjExpr v(std::size_t i) {
      return ObjExpr::var(i);
    }

    M id(ObjExpr const& x) {
      return M::id(x);
    }
    M gen(std::size_t slot) {
      return M::generic(slot);
    }
    M aplus(ObjExpr const& x, ObjExpr const& y, ObjExpr const& z) {
      return M::constraint(Kind::aplus, {x, y, z});
    }
    M c(ObjExpr const& x, ObjExpr const& y) {
      return M::constraint(Kind::c, {x, y});
    }
    M g(ObjExpr const& x) {
      return M::constraint(Kind::g, {x});
    }
    M d(ObjExpr const& x) {
      return M::constraint(Kind::d, {x});
    }
    M a(ObjExpr const& x, ObjExpr const& y, ObjExpr const& z) {
      return M::constraint(Kind::a, {x, y, z});
    }
    M l(ObjExpr const& x) {
      return M::constraint(Kind::l, {x});
    }
    M r(ObjExpr const& x) {
      return M::constraint(Kind::r, {x});
    }
    M L(ObjExpr const& A, ObjExpr const& X, ObjExpr const& Y) {
      return M::constraint(Kind::L, {A, X, Y});
    }
    M R(ObjExpr const& X, ObjExpr const& Y, ObjExpr const& A) {
      return M::constraint(Kind::R, {X, Y, A});
    }
    M lhat(ObjExpr const& A) {
      return M::constraint(Kind::lhat, {A});
    }
    M rhat(ObjExpr const& A) {
      return M::constraint(Kind::rhat, {A});
    }

    DiagramSpec make(std::string              name,
                     std::vector<std::string> vars,
                     M                        lhs,
                     M                        rhs,
                     std::string              description,
                     std::vector<ObjExpr>     slots = {}) {
      return DiagramSpec{std::move(name),
                         std::move(vars),
                         std::move(slots),
                         std::move(lhs),
                         std::move(rhs),
                         std::move(description)};
    }

    void add_pic(std::vector<DiagramSpec>& out) {
      auto x = v(0), y = v(1), z = v(2), t = v(3);
      out.push_back(make("pentagon_plus",
                         {"x", "y", "z", "t"},
                         aplus(x + y, z, t) >> aplus(x, y, z + t),
                         (aplus(x, y, z) + id(t)) >> aplus(x, y + z, t)
                             >> (id(x) + aplus(y, z, t)),
                         "pentagon for the additive associativity"));
      out.push_back(make("hexagon",
                         {"x", "y", "z"},
                         aplus(x, y, z) >> c(x, y + z) >> aplus(y, z, x),
                         (c(x, y) + id(z)) >> aplus(y, x, z) >> (id(y) + c(x, z)),
                         "hexagon relating commutativity and associativity"));
      out.push_back(make("symmetry",
                         {"x", "y"},
                         c(x, y) >> c(y, x),
                         id(x + y),
                         "commutativity is its own inverse"));
      out.push_back(make("triangle_plus",
                         {"x", "y"},
                         aplus(x, ObjExpr::zero(), y) >> (id(x) + g(y)),
                         d(x) + id(y),
                         "triangle for the additive unit"));
    }

    void add_tensor(std::vector<DiagramSpec>& out) {
      auto x = v(0), y = v(1), z = v(2), t = v(3);
      out.push_back(make("pentagon_times",
                         {"x", "y", "z", "t"},
                         a(x, y, z * t) >> a(x * y, z, t),
                         (id(x) * a(y, z, t)) >> a(x, y * z, t)
                             >> (a(x, y, z) * id(t)),
                         "pentagon for the multiplicative associativity"));
      out.push_back(make("triangle_times",
                         {"x", "y"},
                         a(x, ObjExpr::one(), y) >> (r(x) * id(y)),
                         id(x) * l(y),
                         "triangle for the multiplicative unit"));
    }

    void add_naturality(std::vector<DiagramSpec>& out) {
      auto x = v(0), y = v(1), z = v(2);
      auto f0 = gen(0), f1 = gen(1), f2 = gen(2);
      auto O = ObjExpr::zero(), I = ObjExpr::one();
      out.push_back(make("nat_aplus",
                         {"x", "y", "z"},
                         ((f0 + f1) + f2) >> aplus(x, y, z),
                         aplus(x, y, z) >> (f0 + (f1 + f2)),
                         "naturality of aplus",
                         {x, y, z}));
      out.push_back(make("nat_c",
                         {"x", "y"},
                         (f0 + f1) >> c(x, y),
                         c(x, y) >> (f1 + f0),
                         "naturality of c",
                         {x, y}));
      out.push_back(make("nat_g",
                         {"x"},
                         (id(O) + f0) >> g(x),
                         g(x) >> f0,
                         "naturality of g",
                         {x}));
      out.push_back(make("nat_d",
                         {"x"},
                         (f0 + id(O)) >> d(x),
                         d(x) >> f0,
                         "naturality of d",
                         {x}));
      out.push_back(make("nat_a",
                         {"x", "y", "z"},
                         (f0 * (f1 * f2)) >> a(x, y, z),
                         a(x, y, z) >> ((f0 * f1) * f2),
                         "naturality of a",
                         {x, y, z}));
      out.push_back(make("nat_l",
                         {"x"},
                         (id(I) * f0) >> l(x),
                         l(x) >> f0,
                         "naturality of l",
                         {x}));
      out.push_back(make("nat_r",
                         {"x"},
                         (f0 * id(I)) >> r(x),
                         r(x) >> f0,
                         "naturality of r",
                         {x}));
      auto A = v(0), X = v(1), Y = v(2);
      out.push_back(make("nat_L",
                         {"A", "X", "Y"},
                         (f0 * (f1 + f2)) >> L(A, X, Y),
                         L(A, X, Y) >> ((f0 * f1) + (f0 * f2)),
                         "naturality of the left distributivity",
                         {A, X, Y}));
      out.push_back(make("nat_R",
                         {"X", "Y", "A"},
                         ((f0 + f1) * f2) >> R(X, Y, A),
                         R(X, Y, A) >> ((f0 * f2) + (f1 * f2)),
                         "naturality of the right distributivity",
                         {X, Y, A}));
    }

    // L^A and R^A as additive functors compatible with aplus and c.
    void add_functor_compat(std::vector<DiagramSpec>& out) {
      auto A = v(0), X = v(1), Y = v(2), Z = v(3);
      out.push_back(make("lfun_aplus",
                         {"A", "X", "Y", "Z"},
                         L(A, X + Y, Z) >> (L(A, X, Y) + id(A * Z))
                             >> aplus(A * X, A * Y, A * Z),
                         (id(A) * aplus(X, Y, Z)) >> L(A, X, Y + Z)
                             >> (id(A * X) + L(A, Y, Z)),
                         "A(-) is compatible with aplus"));
      out.push_back(make("lfun_c",
                         {"A", "X", "Y"},
                         (id(A) * c(X, Y)) >> L(A, Y, X),
                         L(A, X, Y) >> c(A * X, A * Y),
                         "A(-) is compatible with c"));
      out.push_back(make("rfun_aplus",
                         {"A", "X", "Y", "Z"},
                         R(X + Y, Z, A) >> (R(X, Y, A) + id(Z * A))
                             >> aplus(X * A, Y * A, Z * A),
                         (aplus(X, Y, Z) * id(A)) >> R(X, Y + Z, A)
                             >> (id(X * A) + R(Y, Z, A)),
                         "(-)A is compatible with aplus"));
      out.push_back(make("rfun_c",
                         {"A", "X", "Y"},
                         (c(X, Y) * id(A)) >> R(Y, X, A),
                         R(X, Y, A) >> c(X * A, Y * A),
                         "(-)A is compatible with c"));
    }

    void add_distributivity(std::vector<DiagramSpec>& out) {
      auto A = v(0), B = v(1), X = v(2), Y = v(3);
      out.push_back(make("d1.1",
                         {"A", "B", "X", "Y"},
                         a(A, B, X + Y) >> L(A * B, X, Y),
                         (id(A) * L(B, X, Y)) >> L(A, B * X, B * Y)
                             >> (a(A, B, X) + a(A, B, Y)),
                         "a(A,B,-) is an additive transformation A(B-) -> (AB)-"));
      out.push_back(make("d1.1p",
                         {"A", "B", "X", "Y"},
                         a(X + Y, B, A) >> (R(X, Y, B) * id(A)) >> R(X * B, Y * B, A),
                         R(X, Y, B * A) >> (a(X, B, A) + a(Y, B, A)),
                         "a(-,B,A) is an additive transformation"));
      out.push_back(make("d1.2",
                         {"A", "B", "X", "Y"},
                         a(A, X + Y, B) >> (L(A, X, Y) * id(B)) >> R(A * X, A * Y, B),
                         (id(A) * R(X, Y, B)) >> L(A, X * B, Y * B)
                             >> (a(A, X, B) + a(A, Y, B)),
                         "a(A,-,B) is an additive transformation"));
      out.push_back(make("d1.3",
                         {"A", "B", "X", "Y"},
                         L(A + B, X, Y) >> (R(A, B, X) + R(A, B, Y))
                             >> build_v(A * X, B * X, A * Y, B * Y),
                         R(A, B, X + Y) >> (L(A, X, Y) + L(B, X, Y)),
                         "the two distributivities of (A+B)(X+Y) agree up to v"));
      auto X0 = v(0), Y0 = v(1);
      auto I  = ObjExpr::one();
      out.push_back(make("d1.4",
                         {"X", "Y"},
                         L(I, X0, Y0) >> (l(X0) + l(Y0)),
                         l(X0 + Y0),
                         "l is additive"));
      out.push_back(make("d1.4p",
                         {"X", "Y"},
                         R(X0, Y0, I) >> (r(X0) + r(Y0)),
                         r(X0 + Y0),
                         "r is additive"));
    }

    void add_units(std::vector<DiagramSpec>& out) {
      auto A = v(0), X = v(1);
      auto O = ObjExpr::zero();
      out.push_back(make("d1.5",
                         {"A", "X"},
                         id(A) * g(X),
                         L(A, O, X) >> (lhat(A) + id(A * X)) >> g(A * X),
                         "A(-) is compatible with the left additive unit"));
      out.push_back(make("d1.5p",
                         {"A", "X"},
                         id(A) * d(X),
                         L(A, X, O) >> (id(A * X) + lhat(A)) >> d(A * X),
                         "A(-) is compatible with the right additive unit"));
      out.push_back(make("d1.6",
                         {"A", "X"},
                         g(X) * id(A),
                         R(O, X, A) >> (rhat(A) + id(X * A)) >> g(X * A),
                         "(-)A is compatible with the left additive unit"));
      out.push_back(make("d1.6p",
                         {"A", "X"},
                         d(X) * id(A),
                         R(X, O, A) >> (id(X * A) + rhat(A)) >> d(X * A),
                         "(-)A is compatible with the right additive unit"));
    }

    void add_categorical_ring(std::vector<DiagramSpec>& out) {
      {
        auto X = v(0), A = v(1), B = v(2);
        auto I = ObjExpr::one();
        out.push_back(make("d2.1",
                           {"X", "A", "B"},
                           L(X, A * I, B * I) >> c(X * (A * I), X * (B * I)),
                           (id(X) * c(A * I, B * I)) >> L(X, B * I, A * I),
                           "X(-) is compatible with c on objects of the form A1"));
      }
      {
        auto r0 = v(0), x = v(1), y = v(2), z = v(3), t = v(4);
        out.push_back(make("d3.1",
                           {"r", "x", "y", "z", "t"},
                           L(r0, x + y, z + t) >> (L(r0, x, y) + L(r0, z, t))
                               >> build_v(r0 * x, r0 * y, r0 * z, r0 * t),
                           (id(r0) * build_v(x, y, z, t)) >> L(r0, x + z, y + t)
                               >> (L(r0, x, z) + L(r0, y, t)),
                           "left distributivity commutes with v"));
      }
      {
        auto x = v(0), y = v(1), z = v(2), t = v(3), s = v(4);
        out.push_back(make("d3.1p",
                           {"x", "y", "z", "t", "s"},
                           R(x + y, z + t, s) >> (R(x, y, s) + R(z, t, s))
                               >> build_v(x * s, y * s, z * s, t * s),
                           (build_v(x, y, z, t) * id(s)) >> R(x + z, y + t, s)
                               >> (R(x, z, s) + R(y, t, s)),
                           "right distributivity commutes with v"));
      }
      {
        auto x = v(0), A = v(1), B = v(2), C = v(3);
        out.push_back(make("d3.2",
                           {"x", "A", "B", "C"},
                           L(x, A, B + C) >> (id(x * A) + L(x, B, C))
                               >> inv(aplus(x * A, x * B, x * C)),
                           (id(x) * inv(aplus(A, B, C))) >> L(x, A + B, C)
                               >> (L(x, A, B) + id(x * C)),
                           "x(-) is compatible with the inverse of aplus"));
        out.push_back(make("d3.2p",
                           {"x", "A", "B", "C"},
                           R(A, B + C, x) >> (id(A * x) + R(B, C, x))
                               >> inv(aplus(A * x, B * x, C * x)),
                           (inv(aplus(A, B, C)) * id(x)) >> R(A + B, C, x)
                               >> (R(A, B, x) + id(C * x)),
                           "(-)x is compatible with the inverse of aplus"));
      }
    }

    std::vector<DiagramSpec> build_catalog() {
      std::vector<DiagramSpec> out;
      add_pic(out);
      add_tensor(out);
      add_distributivity(out);
      add_units(out);
      add_functor_compat(out);
      add_categorical_ring(out);
      add_naturality(out);
      return out;
    }

  }  // namespace

  std::vector<DiagramSpec> const& catalog() {
    static std::vector<DiagramSpec> const specs = build_catalog();
    return specs;
  }

  DiagramSpec const* find_diagram(std::string_view name) noexcept {
    for (auto const& spec : catalog()) {
      if (spec.name == name) {
        return &spec;
      }
    }
    return nullptr;
  }

  DiagramSpec const& diagram(std::string_view name) {
    if (auto const* spec = find_diagram(name)) {
      return *spec;
    }
    throw ModelError("unknown diagram \"" + std::string(name) + "\"");
  }

}  // namespace anncat
