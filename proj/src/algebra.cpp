#include "anncat/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "anncat/error.hpp"

namespace anncat {

  namespace {

    void check_order(std::size_t n, char const* what) {
      if (n == 0 || n > kMaxOrder) {
        throw ShapeError(std::string(what) + " order must lie in 1.."
                         + std::to_string(kMaxOrder) + ", got "
                         + std::to_string(n));
      }
    }

    void check_table(std::vector<Elem> const& t,
                     std::size_t              size,
                     std::size_t              bound,
                     char const*              what) {
      if (t.size() != size) {
        throw ShapeError(std::string(what) + " has " + std::to_string(t.size())
                         + " entries, expected " + std::to_string(size));
      }
      auto it = std::find_if(
          t.begin(), t.end(), [bound](Elem e) { return e >= bound; });
      if (it != t.end()) {
        throw ShapeError(std::string(what) + " entry "
                         + std::to_string(it - t.begin()) + " is out of range");
      }
    }

    void check_index(Elem e, std::size_t bound, char const* what) {
      if (e >= bound) {
        throw ShapeError(std::string(what) + " index out of range");
      }
    }

    std::vector<Elem> flatten(RawTable const& rows,
                              std::size_t     nrows,
                              std::size_t     ncols,
                              std::size_t     bound,
                              char const*     what) {
      if (rows.size() != nrows) {
        throw ShapeError(std::string(what) + " has " + std::to_string(rows.size())
                         + " rows, expected " + std::to_string(nrows));
      }
      std::vector<Elem> out;
      out.reserve(nrows * ncols);
      for (auto const& row : rows) {
        if (row.size() != ncols) {
          throw ShapeError(std::string(what) + " row has "
                           + std::to_string(row.size()) + " entries, expected "
                           + std::to_string(ncols));
        }
        for (int v : row) {
          if (v < 0 || static_cast<std::size_t>(v) >= bound) {
            throw ShapeError(std::string(what) + " entry " + std::to_string(v)
                             + " is out of range");
          }
          out.push_back(static_cast<Elem>(v));
        }
      }
      return out;
    }

    std::vector<Elem> derive_neg(std::vector<Elem> const& add,
                                 std::size_t              n,
                                 Elem                     zero) {
      std::vector<Elem> neg(n, kNoElem);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (add[x * n + y] == zero) {
            neg[x] = static_cast<Elem>(y);
            break;
          }
        }
      }
      return neg;
    }

    // Records the first witness of a law, in the order checks are made.
    class Recorder {
     public:
      explicit Recorder(ValidationReport& report) : report_(report) {}

      void fail(std::string const& law, std::vector<int> witness) {
        if (!report_.violates(law)) {
          report_.violations.push_back({law, std::move(witness)});
        }
      }

     private:
      ValidationReport& report_;
    };

    template <typename Add, typename Neg>
    void check_abelian_group(std::size_t n,
                             Add         add,
                             Elem        zero,
                             Neg         neg,
                             Recorder&   rec) {
      for (int x = 0; x < static_cast<int>(n); ++x) {
        for (int y = 0; y < static_cast<int>(n); ++y) {
          for (int z = 0; z < static_cast<int>(n); ++z) {
            if (add(add(x, y), z) != add(x, add(y, z))) {
              rec.fail("additive associativity", {x, y, z});
            }
          }
        }
      }
      for (int x = 0; x < static_cast<int>(n); ++x) {
        for (int y = 0; y < static_cast<int>(n); ++y) {
          if (add(x, y) != add(y, x)) {
            rec.fail("additive commutativity", {x, y});
          }
        }
      }
      for (int x = 0; x < static_cast<int>(n); ++x) {
        if (add(zero, x) != x || add(x, zero) != x) {
          rec.fail("additive identity", {x});
        }
      }
      for (int x = 0; x < static_cast<int>(n); ++x) {
        Elem nx = neg(x);
        if (nx == kNoElem || nx >= n || add(x, nx) != zero) {
          rec.fail("additive inverse", {x});
        }
      }
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteRing
  ////////////////////////////////////////////////////////////////////////

  FiniteRing::FiniteRing(std::size_t       order,
                         std::vector<Elem> add,
                         std::vector<Elem> mul,
                         Elem              zero,
                         Elem              one,
                         std::vector<Elem> neg)
      : order_(order),
        add_(std::move(add)),
        mul_(std::move(mul)),
        zero_(zero),
        one_(one),
        neg_(std::move(neg)) {
    check_order(order_, "ring");
    check_table(add_, order_ * order_, order_, "ring add");
    check_table(mul_, order_ * order_, order_, "ring mul");
    check_index(zero_, order_, "ring zero");
    check_index(one_, order_, "ring one");
    if (neg_.size() != order_) {
      throw ShapeError("ring neg must have one entry per element");
    }
  }

  FiniteRing FiniteRing::from_tables(RawTable const& add,
                                     RawTable const& mul,
                                     int             zero,
                                     int             one) {
    std::size_t n = add.size();
    check_order(n, "ring");
    auto a = flatten(add, n, n, n, "ring add");
    auto m = flatten(mul, n, n, n, "ring mul");
    if (zero < 0 || static_cast<std::size_t>(zero) >= n || one < 0
        || static_cast<std::size_t>(one) >= n) {
      throw ShapeError("ring zero/one index out of range");
    }
    auto neg = derive_neg(a, n, static_cast<Elem>(zero));
    return FiniteRing(n,
                      std::move(a),
                      std::move(m),
                      static_cast<Elem>(zero),
                      static_cast<Elem>(one),
                      std::move(neg));
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteBimodule
  ////////////////////////////////////////////////////////////////////////

  FiniteBimodule::FiniteBimodule(std::size_t       order,
                                 std::size_t       ring_order,
                                 std::vector<Elem> add,
                                 Elem              zero,
                                 std::vector<Elem> neg,
                                 std::vector<Elem> left_action,
                                 std::vector<Elem> right_action)
      : order_(order),
        ring_order_(ring_order),
        add_(std::move(add)),
        zero_(zero),
        neg_(std::move(neg)),
        left_(std::move(left_action)),
        right_(std::move(right_action)) {
    check_order(order_, "module");
    check_order(ring_order_, "ring");
    check_table(add_, order_ * order_, order_, "module add");
    check_index(zero_, order_, "module zero");
    check_table(left_, ring_order_ * order_, order_, "left_action");
    check_table(right_, order_ * ring_order_, order_, "right_action");
    if (neg_.size() != order_) {
      throw ShapeError("module neg must have one entry per element");
    }
  }

  FiniteBimodule FiniteBimodule::from_tables(RawTable const& add,
                                             int             zero,
                                             RawTable const& left,
                                             RawTable const& right) {
    std::size_t m = add.size();
    check_order(m, "module");
    std::size_t n = left.size();
    check_order(n, "ring");
    auto a = flatten(add, m, m, m, "module add");
    auto l = flatten(left, n, m, m, "left_action");
    auto r = flatten(right, m, n, m, "right_action");
    if (zero < 0 || static_cast<std::size_t>(zero) >= m) {
      throw ShapeError("module zero index out of range");
    }
    auto neg = derive_neg(a, m, static_cast<Elem>(zero));
    return FiniteBimodule(m,
                          n,
                          std::move(a),
                          static_cast<Elem>(zero),
                          std::move(neg),
                          std::move(l),
                          std::move(r));
  }

  ////////////////////////////////////////////////////////////////////////
  // ValidationReport
  ////////////////////////////////////////////////////////////////////////

  bool ValidationReport::violates(std::string const& law) const {
    return std::any_of(violations.begin(),
                       violations.end(),
                       [&law](Violation const& v) { return v.law == law; });
  }

  std::string ValidationReport::summary() const {
    if (passed()) {
      return "ok";
    }
    std::ostringstream os;
    bool               first = true;
    for (auto const& v : violations) {
      if (!first) {
        os << "; ";
      }
      first = false;
      os << v.law << " fails at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        os << (i ? "," : "") << v.witness[i];
      }
      os << ")";
    }
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Builders
  ////////////////////////////////////////////////////////////////////////

  FiniteRing cyclic_ring(std::size_t n) {
    if (n == 0 || n > kMaxOrder) {
      throw ShapeError("cyclic_ring: n must lie in 1.." + std::to_string(kMaxOrder)
                       + ", got " + std::to_string(n));
    }
    std::vector<Elem> add(n * n), mul(n * n), neg(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        add[x * n + y] = static_cast<Elem>((x + y) % n);
        mul[x * n + y] = static_cast<Elem>((x * y) % n);
      }
      neg[x] = static_cast<Elem>((n - x) % n);
    }
    return FiniteRing(n, std::move(add), std::move(mul), 0,
                      static_cast<Elem>(1 % n), std::move(neg));
  }

  FiniteBimodule ring_bimodule(FiniteRing const& ring) {
    std::vector<Elem> add(ring.add_table().begin(), ring.add_table().end());
    std::vector<Elem> mul(ring.mul_table().begin(), ring.mul_table().end());
    std::vector<Elem> neg(ring.neg_table().begin(), ring.neg_table().end());
    return FiniteBimodule(
        ring.order(), ring.order(), std::move(add), ring.zero(), std::move(neg),
        mul, mul);
  }

  FiniteBimodule cyclic_bimodule(FiniteRing const& ring, std::size_t m) {
    if (m == 0 || m > kMaxOrder) {
      throw ShapeError("cyclic_bimodule: m must lie in 1.."
                       + std::to_string(kMaxOrder));
    }
    std::size_t const n = ring.order();
    // multiple[x] = k with x = k.1, the first k reaching x.
    std::vector<std::size_t> multiple(n, n + 1);
    Elem                     x = ring.zero();
    for (std::size_t k = 0; k < n && multiple[x] == n + 1; ++k) {
      multiple[x] = k;
      x           = ring.add(x, ring.one());
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (multiple[i] == n + 1) {
        throw ShapeError("cyclic_bimodule: ring is not additively generated by 1");
      }
    }
    std::vector<Elem> add(m * m), neg(m), left(n * m), right(m * n);
    for (std::size_t u = 0; u < m; ++u) {
      for (std::size_t v = 0; v < m; ++v) {
        add[u * m + v] = static_cast<Elem>((u + v) % m);
      }
      neg[u] = static_cast<Elem>((m - u) % m);
      for (std::size_t r = 0; r < n; ++r) {
        Elem prod        = static_cast<Elem>((multiple[r] * u) % m);
        left[r * m + u]  = prod;
        right[u * n + r] = prod;
      }
    }
    return FiniteBimodule(
        m, n, std::move(add), 0, std::move(neg), std::move(left), std::move(right));
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  ValidationReport validate_ring(FiniteRing const& R) {
    ValidationReport report;
    Recorder         rec(report);
    int const        n   = static_cast<int>(R.order());
    auto             add = [&R](int x, int y) {
      return static_cast<int>(R.add(static_cast<Elem>(x), static_cast<Elem>(y)));
    };
    auto mul = [&R](int x, int y) {
      return static_cast<int>(R.mul(static_cast<Elem>(x), static_cast<Elem>(y)));
    };
    auto neg = [&R](int x) { return R.neg(static_cast<Elem>(x)); };

    check_abelian_group(R.order(), add, R.zero(), neg, rec);

    int const one = R.one();
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
            rec.fail("multiplicative associativity", {x, y, z});
          }
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      if (mul(one, x) != x || mul(x, one) != x) {
        rec.fail("multiplicative identity", {x});
      }
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))) {
            rec.fail("left distributivity", {x, y, z});
          }
          if (mul(add(x, y), z) != add(mul(x, z), mul(y, z))) {
            rec.fail("right distributivity", {x, y, z});
          }
        }
      }
    }
    return report;
  }

  ValidationReport validate_bimodule(FiniteRing const&     R,
                                     FiniteBimodule const& M) {
    if (M.ring_order() != R.order()) {
      throw ShapeError("bimodule action tables are sized for a ring of order "
                       + std::to_string(M.ring_order()) + ", ring has order "
                       + std::to_string(R.order()));
    }
    ValidationReport report;
    Recorder         rec(report);
    int const        n = static_cast<int>(R.order());
    int const        m = static_cast<int>(M.order());

    auto add = [&M](int u, int v) {
      return static_cast<int>(M.add(static_cast<Elem>(u), static_cast<Elem>(v)));
    };
    auto neg  = [&M](int u) { return M.neg(static_cast<Elem>(u)); };
    auto radd = [&R](int x, int y) {
      return static_cast<int>(R.add(static_cast<Elem>(x), static_cast<Elem>(y)));
    };
    auto rmul = [&R](int x, int y) {
      return static_cast<int>(R.mul(static_cast<Elem>(x), static_cast<Elem>(y)));
    };
    auto lact = [&M](int x, int u) {
      return static_cast<int>(M.left(static_cast<Elem>(x), static_cast<Elem>(u)));
    };
    auto ract = [&M](int u, int x) {
      return static_cast<int>(M.right(static_cast<Elem>(u), static_cast<Elem>(x)));
    };

    check_abelian_group(M.order(), add, M.zero(), neg, rec);

    int const one = R.one();
    for (int u = 0; u < m; ++u) {
      if (lact(one, u) != u || ract(u, one) != u) {
        rec.fail("unital action", {u});
      }
    }
    // Left action, module argument; left, ring argument; then the right side.
    for (int x = 0; x < n; ++x) {
      for (int u = 0; u < m; ++u) {
        for (int v = 0; v < m; ++v) {
          if (lact(x, add(u, v)) != add(lact(x, u), lact(x, v))) {
            rec.fail("additivity of action", {x, u, v});
          }
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int u = 0; u < m; ++u) {
          if (lact(radd(x, y), u) != add(lact(x, u), lact(y, u))) {
            rec.fail("additivity of action", {x, y, u});
          }
        }
      }
    }
    for (int u = 0; u < m; ++u) {
      for (int v = 0; v < m; ++v) {
        for (int x = 0; x < n; ++x) {
          if (ract(add(u, v), x) != add(ract(u, x), ract(v, x))) {
            rec.fail("additivity of action", {u, v, x});
          }
        }
      }
    }
    for (int u = 0; u < m; ++u) {
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (ract(u, radd(x, y)) != add(ract(u, x), ract(u, y))) {
            rec.fail("additivity of action", {u, x, y});
          }
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int u = 0; u < m; ++u) {
          if (lact(rmul(x, y), u) != lact(x, lact(y, u))) {
            rec.fail("associativity of action", {x, y, u});
          }
          if (ract(u, rmul(x, y)) != ract(ract(u, x), y)) {
            rec.fail("associativity of action", {u, x, y});
          }
          if (ract(lact(x, u), y) != lact(x, ract(u, y))) {
            rec.fail("commuting actions", {x, u, y});
          }
        }
      }
    }
    return report;
  }

}  // namespace anncat
