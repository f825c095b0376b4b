// Shared fixtures for the unit and acceptance tests. The closed forms below
// are written out by hand from the diagrams and deliberately avoid the term
// evaluator, so they serve as independent oracles.
#ifndef ANNCAT_TESTS_SUPPORT_HPP_
#define ANNCAT_TESTS_SUPPORT_HPP_

#include <random>

#include "anncat/algebra.hpp"
#include "anncat/model.hpp"

namespace anncat::testing {

  inline SkeletalModel trivial_model(std::size_t n) {
    FiniteRing R = cyclic_ring(n);
    return SkeletalModel(R, ring_bimodule(R));
  }

  // Upper triangular 2x2 matrices over F2, element a*4 + b*2 + c for
  // [[a, b], [0, c]]. Noncommutative of order 8.
  inline FiniteRing upper_triangular_f2() {
    RawTable add(8, std::vector<int>(8)), mul(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x) {
      for (int y = 0; y < 8; ++y) {
        int const a = x >> 2, b = (x >> 1) & 1, c = x & 1;
        int const p = y >> 2, q = (y >> 1) & 1, s = y & 1;
        add[x][y]   = x ^ y;
        mul[x][y]   = ((a & p) << 2) | ((((a & q) ^ (b & s)) & 1) << 1) | (c & s);
      }
    }
    return FiniteRing::from_tables(add, mul, 0, 5);
  }

  // Every table entry drawn uniformly from M.
  inline void randomize(SkeletalModel& model, std::mt19937_64& rng) {
    auto const m = model.module().order();
    for (std::size_t i = 0; i < kTableCount; ++i) {
      for (Elem& e : model.table(static_cast<TableId>(i)).data()) {
        e = static_cast<Elem>(rng() % m);
      }
    }
  }

  inline SkeletalModel random_model(FiniteRing const&     ring,
                                    FiniteBimodule const& module,
                                    std::mt19937_64&      rng) {
    SkeletalModel model(ring, module);
    randomize(model, rng);
    return model;
  }

  ////////////////////////////////////////////////////////////////////////
  // Closed-form sides of individual diagrams
  ////////////////////////////////////////////////////////////////////////

  struct Sides {
    Elem lhs;
    Elem rhs;
  };

  // a(A,B,X+Y) then L(AB,X,Y)  versus  A.L(B,X,Y), L(A,BX,BY), a(A,B,X) + a(A,B,Y)
  inline Sides d11_sides(SkeletalModel const& m, Elem A, Elem B, Elem X, Elem Y) {
    auto const& R = m.ring();
    auto const& M = m.module();
    Elem lhs = M.add(m.alpha()(A, B, R.add(X, Y)), m.Ldist()(R.mul(A, B), X, Y));
    Elem rhs = M.left(A, m.Ldist()(B, X, Y));
    rhs      = M.add(rhs, m.Ldist()(A, R.mul(B, X), R.mul(B, Y)));
    rhs      = M.add(rhs, m.alpha()(A, B, X));
    rhs      = M.add(rhs, m.alpha()(A, B, Y));
    return {lhs, rhs};
  }

  // L(1,X,Y) + l(X) + l(Y)  versus  l(X+Y)
  inline Sides d14_sides(SkeletalModel const& m, Elem X, Elem Y) {
    auto const& R   = m.ring();
    auto const& M   = m.module();
    Elem        lhs = M.add(m.Ldist()(R.one(), X, Y),
                     M.add(m.lam_u()(X), m.lam_u()(Y)));
    return {lhs, m.lam_u()(R.add(X, Y))};
  }

  // A.c(X,Y) + L(A,Y,X)  versus  L(A,X,Y) + c(AX,AY)
  inline Sides lfun_c_sides(SkeletalModel const& m, Elem A, Elem X, Elem Y) {
    auto const& R = m.ring();
    auto const& M = m.module();
    return {M.add(M.left(A, m.eta()(X, Y)), m.Ldist()(A, Y, X)),
            M.add(m.Ldist()(A, X, Y), m.eta()(R.mul(A, X), R.mul(A, Y)))};
  }

  // L(A,X+Y,Z) + L(A,X,Y) + aplus(AX,AY,AZ)
  //   versus  A.aplus(X,Y,Z) + L(A,X,Y+Z) + L(A,Y,Z)
  inline Sides lfun_aplus_sides(SkeletalModel const& m, Elem A, Elem X, Elem Y, Elem Z) {
    auto const& R   = m.ring();
    auto const& M   = m.module();
    Elem        lhs = M.add(m.Ldist()(A, R.add(X, Y), Z), m.Ldist()(A, X, Y));
    lhs = M.add(lhs, m.xi()(R.mul(A, X), R.mul(A, Y), R.mul(A, Z)));
    Elem rhs = M.add(M.left(A, m.xi()(X, Y, Z)), m.Ldist()(A, X, R.add(Y, Z)));
    rhs      = M.add(rhs, m.Ldist()(A, Y, Z));
    return {lhs, rhs};
  }

  // Value of the interchange (U+V)+(Z+T) -> (U+Z)+(V+T):
  //   xi(U,V,Z+T) - xi(V,Z,T) + eta(V,Z) + xi(Z,V,T) - xi(U,Z,V+T)
  inline Elem v_value(SkeletalModel const& m, Elem U, Elem V, Elem Z, Elem T) {
    auto const& R = m.ring();
    auto const& M = m.module();
    Elem        s = m.xi()(U, V, R.add(Z, T));
    s             = M.sub(s, m.xi()(V, Z, T));
    s             = M.add(s, m.eta()(V, Z));
    s             = M.add(s, m.xi()(Z, V, T));
    return M.sub(s, m.xi()(U, Z, R.add(V, T)));
  }

  // L(r,x+y,z+t) + L(r,x,y) + L(r,z,t) + v(rx,ry,rz,rt)
  //   versus  r.v(x,y,z,t) + L(r,x+z,y+t) + L(r,x,z) + L(r,y,t)
  inline Sides d31_sides(SkeletalModel const& m, Elem r, Elem x, Elem y, Elem z, Elem t) {
    auto const& R   = m.ring();
    auto const& M   = m.module();
    auto        L   = [&](Elem a, Elem b, Elem c) { return m.Ldist()(a, b, c); };
    Elem        lhs = M.add(L(r, R.add(x, y), R.add(z, t)), L(r, x, y));
    lhs             = M.add(lhs, L(r, z, t));
    lhs = M.add(lhs, v_value(m, R.mul(r, x), R.mul(r, y), R.mul(r, z), R.mul(r, t)));
    Elem rhs = M.add(M.left(r, v_value(m, x, y, z, t)), L(r, R.add(x, z), R.add(y, t)));
    rhs      = M.add(rhs, L(r, x, z));
    rhs      = M.add(rhs, L(r, y, t));
    return {lhs, rhs};
  }

  // A.g(X)  versus  L(A,0,X) + lhat(A) + g(AX)
  inline Sides d15_sides(SkeletalModel const& m, std::vector<Elem> const& lhat, Elem A,
                         Elem X) {
    auto const& R = m.ring();
    auto const& M = m.module();
    Elem rhs = M.add(m.Ldist()(A, R.zero(), X), lhat[A]);
    return {M.left(A, m.g()(X)), M.add(rhs, m.g()(R.mul(A, X)))};
  }

  // Model with lam_u random and L(1,-,-) chosen so that d1.4 holds; with
  // probability one half a single entry of L(1,-,-) is then disturbed.
  inline SkeletalModel d14_biased_model(FiniteRing const&     ring,
                                        FiniteBimodule const& module,
                                        std::mt19937_64&      rng) {
    SkeletalModel model = random_model(ring, module, rng);
    auto const&   M     = model.module();
    auto const    n     = ring.order();
    for (std::size_t X = 0; X < n; ++X) {
      for (std::size_t Y = 0; Y < n; ++Y) {
        Elem x = static_cast<Elem>(X), y = static_cast<Elem>(Y);
        Elem want = M.sub(model.lam_u()(ring.add(x, y)),
                          M.add(model.lam_u()(x), model.lam_u()(y)));
        model.table(TableId::Ldist).data()[(ring.one() * n + X) * n + Y] = want;
      }
    }
    if (rng() % 2 == 0) {
      std::size_t cell = ring.one() * n * n + rng() % (n * n);
      Elem&       e    = model.table(TableId::Ldist).data()[cell];
      e                = M.add(e, static_cast<Elem>(1 + rng() % (M.order() - 1)));
    }
    return model;
  }

  // Model over a cyclic ring acting on itself, with eta antisymmetric and L
  // chosen so that lfun_c holds; then disturbed at one entry with
  // probability one half.
  inline SkeletalModel lfun_c_biased_model(FiniteRing const&     ring,
                                           FiniteBimodule const& module,
                                           std::mt19937_64&      rng) {
    SkeletalModel model = random_model(ring, module, rng);
    auto const&   M     = model.module();
    auto const    n     = ring.order();
    auto&         L     = model.table(TableId::Ldist);
    auto&         eta   = model.table(TableId::eta);

    // Diagonal: A.c(X,X) = c(AX,AX) and 2c(X,X) = 0, so c(X,X) = X.e with
    // 2e = 0.
    std::vector<Elem> halves;
    for (std::size_t e = 0; e < M.order(); ++e) {
      if (M.add(static_cast<Elem>(e), static_cast<Elem>(e)) == M.zero()) {
        halves.push_back(static_cast<Elem>(e));
      }
    }
    Elem const e = halves[rng() % halves.size()];
    for (std::size_t X = 0; X < n; ++X) {
      Elem x                       = static_cast<Elem>(X);
      eta.data()[X * n + X]        = M.left(x, e);
      for (std::size_t Y = X + 1; Y < n; ++Y) {
        eta.data()[Y * n + X] = M.neg(eta(x, static_cast<Elem>(Y)));
      }
    }
    // Keep L(A,X,Y) for X < Y and solve for L(A,Y,X).
    for (std::size_t A = 0; A < n; ++A) {
      for (std::size_t X = 0; X < n; ++X) {
        for (std::size_t Y = X + 1; Y < n; ++Y) {
          Elem a = static_cast<Elem>(A), x = static_cast<Elem>(X), y = static_cast<Elem>(Y);
          Elem v = M.add(L(a, x, y), eta(ring.mul(a, x), ring.mul(a, y)));
          v      = M.sub(v, M.left(a, eta(x, y)));
          L.data()[(A * n + Y) * n + X] = v;
        }
      }
    }
    if (rng() % 2 == 0) {
      std::size_t cell = rng() % L.size();
      L.data()[cell]   = M.add(L.data()[cell], static_cast<Elem>(1 + rng() % (M.order() - 1)));
    }
    return model;
  }

}  // namespace anncat::testing

#endif  // ANNCAT_TESTS_SUPPORT_HPP_
