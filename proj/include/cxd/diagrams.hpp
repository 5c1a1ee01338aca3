#pragma once

#include <string>
#include <vector>

#include "cxd/monoidal.hpp"

namespace cxd {

// Both legs of a commutative diagram, built on concrete complexes.
struct Sides {
  ChainMap lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

struct DiagramInfo {
  std::string id;
  int arity;  // number of complexes consumed
  std::string statement;
};

// Catalogue of every diagram that `diagram` can build. Ids:
//   D4..D11        compatibility of ev/coev with the shift isomorphisms
//   pentagon, hexagon, unit_triangle, sym_involution
//   row14..row18   shift/tensor coherences evaluated on complexes
//   triangle_l, triangle_r   adjunction identities for (- (x) A) -| [A, -]
//   curry, uncurry           direct formula against the coevaluation/evaluation composites
//   dd_literal     direct tensor-of-duals map against its literal composite
//   bid_scalar     bidual on one-dimensional complexes
//   P.shift        shifted bidual square, with the sign kShiftedBidualSign
const std::vector<DiagramInfo>& diagram_catalogue();
const DiagramInfo& diagram_info(const std::string& id);

// Builds both legs. Throws std::invalid_argument on a bad id or arity, and std::logic_error if a
// structural map fails to be a chain map under the assignment in `m`.
Sides diagram(const Monoidal& m, const std::string& id, const std::vector<Complex>& objs, Rng& rng);

// Sign relating the shifted bidual to the bidual of the shift; see P.shift.
// Found by evaluation: -1 on every pair of point complexes and on random complexes, for both b.
constexpr int kShiftedBidualSign = -1;

// +1 or -1 if T[th2,K] o th1 o bid(A,K) = +-th2 o bid(A,TK); 0 if neither.
int shifted_bidual_sign(const Monoidal& m, const Complex& a, const Complex& k);

}  // namespace cxd
