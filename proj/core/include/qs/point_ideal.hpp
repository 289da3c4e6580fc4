#ifndef QS_POINT_IDEAL_HPP
#define QS_POINT_IDEAL_HPP

#include <map>

#include "qs/multipoly.hpp"

namespace qs {

// A maximal ideal of Q[X] given by a rational point: the assignment
// x_i -> a_i for a subset X of the context variables.  The trivial ideal
// (empty assignment, base ring Q) is allowed.  Localizing Q[X] at the
// complement of this ideal gives the local ring R used throughout; the
// residue field is Q, via evaluation at the point.
class PointIdeal {
 public:
  PointIdeal() = default;  // usable only after assignment
  PointIdeal(VarContextPtr ctx, std::map<std::size_t, Rational> point);

  static PointIdeal trivial(VarContextPtr ctx) { return PointIdeal(std::move(ctx), {}); }

  const VarContextPtr& context() const noexcept { return ctx_; }
  const std::map<std::size_t, Rational>& point() const noexcept { return point_; }
  bool is_trivial() const noexcept { return point_.empty(); }
  bool assigns(std::size_t var) const { return point_.count(var) != 0; }

  // Image of f under evaluation at the point (unassigned variables remain).
  MultiPoly residue(const MultiPoly& f) const;
  // residue(f) == 0.
  bool vanishes(const MultiPoly& f) const { return residue(f).is_zero(); }

  bool operator==(const PointIdeal& o) const;

 private:
  VarContextPtr ctx_;
  std::map<std::size_t, Rational> point_;
};

}  // namespace qs

#endif  // QS_POINT_IDEAL_HPP
