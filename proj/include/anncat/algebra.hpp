#ifndef ANNCAT_ALGEBRA_HPP_
#define ANNCAT_ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace anncat {

  // Dense element index into a finite ring or bimodule.
  using Elem = std::uint8_t;

  inline constexpr std::size_t kMaxOrder = 64;
  inline constexpr Elem        kNoElem   = 0xFF;

  // Square operation table given as rows of raw indices, before range checks.
  using RawTable = std::vector<std::vector<int>>;

  //! A finite unital ring on the elements 0..order-1.
  //!
  //! Construction checks only the shape of the tables and the index range;
  //! the ring laws are checked by validate_ring so that broken tables can be
  //! loaded and diagnosed.
  class FiniteRing {
   public:
    FiniteRing(std::size_t       order,
               std::vector<Elem> add,
               std::vector<Elem> mul,
               Elem              zero,
               Elem              one,
               std::vector<Elem> neg);

    // Derives the negation vector from the addition table; elements without
    // an additive inverse get kNoElem.
    static FiniteRing from_tables(RawTable const& add,
                                  RawTable const& mul,
                                  int             zero,
                                  int             one);

    std::size_t order() const noexcept {
      return order_;
    }
    Elem zero() const noexcept {
      return zero_;
    }
    Elem one() const noexcept {
      return one_;
    }

    Elem add(Elem x, Elem y) const noexcept {
      return add_[x * order_ + y];
    }
    Elem mul(Elem x, Elem y) const noexcept {
      return mul_[x * order_ + y];
    }
    Elem neg(Elem x) const noexcept {
      return neg_[x];
    }

    std::span<Elem const> add_table() const noexcept {
      return add_;
    }
    std::span<Elem const> mul_table() const noexcept {
      return mul_;
    }
    std::span<Elem const> neg_table() const noexcept {
      return neg_;
    }

    friend bool operator==(FiniteRing const&, FiniteRing const&) = default;

   private:
    std::size_t       order_;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    Elem              zero_;
    Elem              one_;
    std::vector<Elem> neg_;
  };

  //! A finite abelian group with left and right actions of a ring of order
  //! ring_order. left(x, u) is x.u and right(u, x) is u.x.
  class FiniteBimodule {
   public:
    FiniteBimodule(std::size_t       order,
                   std::size_t       ring_order,
                   std::vector<Elem> add,
                   Elem              zero,
                   std::vector<Elem> neg,
                   std::vector<Elem> left_action,
                   std::vector<Elem> right_action);

    // left is ring_order x order, right is order x ring_order.
    static FiniteBimodule from_tables(RawTable const& add,
                                      int             zero,
                                      RawTable const& left,
                                      RawTable const& right);

    std::size_t order() const noexcept {
      return order_;
    }
    std::size_t ring_order() const noexcept {
      return ring_order_;
    }
    Elem zero() const noexcept {
      return zero_;
    }

    Elem add(Elem u, Elem v) const noexcept {
      return add_[u * order_ + v];
    }
    Elem neg(Elem u) const noexcept {
      return neg_[u];
    }
    Elem sub(Elem u, Elem v) const noexcept {
      return add(u, neg(v));
    }
    Elem left(Elem x, Elem u) const noexcept {
      return left_[x * order_ + u];
    }
    Elem right(Elem u, Elem x) const noexcept {
      return right_[u * ring_order_ + x];
    }

    std::span<Elem const> add_table() const noexcept {
      return add_;
    }
    std::span<Elem const> neg_table() const noexcept {
      return neg_;
    }
    std::span<Elem const> left_table() const noexcept {
      return left_;
    }
    std::span<Elem const> right_table() const noexcept {
      return right_;
    }

    friend bool operator==(FiniteBimodule const&, FiniteBimodule const&)
        = default;

   private:
    std::size_t       order_;
    std::size_t       ring_order_;
    std::vector<Elem> add_;
    Elem              zero_;
    std::vector<Elem> neg_;
    std::vector<Elem> left_;
    std::vector<Elem> right_;
  };

  struct Violation {
    std::string      law;
    std::vector<int> witness;

    friend bool operator==(Violation const&, Violation const&) = default;
  };

  // One entry per violated law, carrying the lexicographically first witness.
  struct ValidationReport {
    std::vector<Violation> violations;

    bool passed() const noexcept {
      return violations.empty();
    }
    bool violates(std::string const& law) const;
    std::string summary() const;

    friend bool operator==(ValidationReport const&, ValidationReport const&)
        = default;
  };

  //! Z/n with the usual tables, 1 <= n <= 64.
  FiniteRing cyclic_ring(std::size_t n);

  //! The ring acting on its own additive group by multiplication.
  FiniteBimodule ring_bimodule(FiniteRing const& ring);

  //! Z/m as a bimodule over an additively cyclic ring R, where x = k.1 acts
  //! on both sides as multiplication by k mod m. Only a bimodule when the
  //! additive order of 1 in R is a multiple of m; validate_bimodule says so.
  FiniteBimodule cyclic_bimodule(FiniteRing const& ring, std::size_t m);

  ValidationReport validate_ring(FiniteRing const& ring);
  ValidationReport validate_bimodule(FiniteRing const&     ring,
                                     FiniteBimodule const& module);

}  // namespace anncat

#endif  // ANNCAT_ALGEBRA_HPP_
