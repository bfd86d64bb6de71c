#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "stringy/polynomial.hpp"
#include "stringy/rational.hpp"
#include "stringy/report.hpp"

namespace stringy {

/// Hodge numbers h^{p,q}, 0 <= p, q <= n, of a smooth projective variety.
class HodgeDiamond {
 public:
  /// Entries not listed are zero. Throws DomainError for negative values or
  /// indices outside [0, n]^2.
  HodgeDiamond(int n, std::map<Exponent, Integer> entries);

  /// Inverse of e_polynomial: h^{p,q} = (-1)^{p+q} [u^p v^q] E.
  static HodgeDiamond from_e_polynomial(const BiPoly& e, int n);

  int dimension() const { return n_; }
  Integer h(int p, int q) const;
  const std::map<Exponent, Integer>& entries() const { return entries_; }

  /// Broken diamond invariants: unit corners, Hodge symmetry, Poincare
  /// duality. Empty for a well-formed diamond.
  std::vector<std::string> violations() const;

  /// b_i = sum_{p+q=i} h^{p,q}, for i = 0..2n.
  std::vector<Integer> betti() const;

 private:
  int n_;
  std::map<Exponent, Integer> entries_;
};

struct ChernData {
  Integer c_n;
  Rat c1_cn1;
};

BiPoly e_polynomial(const HodgeDiamond& d);

/// E(1, 1).
Integer euler_number(const BiPoly& e);

/// sum_{p,q} [u^p v^q]E * (p - n/2)^2, the left side of the Libgober-Wood
/// identity in Hodge-number form.
Rat centered_second_moment(const BiPoly& e, int n);

/// c_1 c_{n-1} as forced by the Hodge numbers: 6 (moment - (n/12) c_n).
Rat inferred_c1_cn1(const BiPoly& e, int n);

/// Throws PreconditionError naming the first (p, q) where E(u,v) differs
/// from (uv)^n E(1/u, 1/v).
void require_poincare_duality(const BiPoly& e, int n);

/// d/du E(u,1) at 1 equals (n/2) c_n.
Report first_derivative_check(const BiPoly& e, int n);

/// sum (-1)^{p+q} h^{p,q} (p - n/2)^2 = (n/12) c_n + (1/6) c_1 c_{n-1}.
/// Also exposes extras["c1_cn1_inferred"].
Report libgober_wood_check(const BiPoly& e, int n, const ChernData& chern);

/// d^2/du^2 E(u,1) at 1 equals ((3n^2 - 5n)/12) c_n + (1/6) c_1 c_{n-1}.
Report second_derivative_check(const BiPoly& e, int n, const ChernData& chern);

/// The c_1 = 0 specialization: moment = (n/12) c_n. No preconditions.
Report cy_relation_check(const BiPoly& e, int n);

/// 2 sum_{j=1}^{2m} (-1)^j (3j^2 - m) b_{2m-j} = m b_{2m} for a manifold of
/// dimension 2m given by its Betti numbers b_0..b_{4m}. A list of the wrong
/// length is evaluated with missing Betti numbers read as zero and noted in
/// the report; an asymmetric list throws PreconditionError.
Report hyperkaehler_betti_check(std::span<const Integer> betti, int half_n);

/// c_4 = 6 (8 + h^{1,1} - h^{2,1} + h^{3,1}) for Calabi-Yau fourfolds with
/// h^{1,0} = h^{2,0} = h^{3,0} = 0. Requires Hodge symmetry, Poincare duality
/// in dimension 4, and h^{0,0} = h^{4,0} = 1.
Report cy4_linear_relation(const BiPoly& e);

/// c_4 = 6 (8 - h^{1,1} + h^{2,1} - h^{3,1}), the same relation with the
/// signs flipped. It fails on real fourfolds. Same preconditions.
Report cy4_flipped_sign_relation(const BiPoly& e);

/// sum (-1)^{p+q} h^{p,q} ((n+1)/2 - p)(p - (n-1)/2)
///   = (1/6)(((3-n)/2) c_n - c_1 c_{n-1}).
/// Throws std::logic_error if its verdict ever differs from
/// libgober_wood_check on the same input.
Report virasoro_identity_form(const BiPoly& e, int n, const ChernData& chern);

/// Diamonds of standard smooth projective varieties.
namespace diamonds {
HodgeDiamond point();
HodgeDiamond projective_space(int k);
HodgeDiamond curve(int genus);
HodgeDiamond k3();
HodgeDiamond abelian_surface();
HodgeDiamond quintic_threefold();
HodgeDiamond sextic_fourfold();
}  // namespace diamonds

}  // namespace stringy
