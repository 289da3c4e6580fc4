#include "qs/point_ideal.hpp"

#include "qs/error.hpp"

namespace qs {

PointIdeal::PointIdeal(VarContextPtr ctx, std::map<std::size_t, Rational> point)
    : ctx_(std::move(ctx)), point_(std::move(point)) {
  if (!ctx_) fail(ErrorKind::Internal, "null context");
  for (const auto& [var, value] : point_) {
    (void)value;
    if (var >= ctx_->size())
      fail(ErrorKind::UnknownVariable, "point assigns a variable outside the context");
  }
}

MultiPoly PointIdeal::residue(const MultiPoly& f) const {
  require_same_context(ctx_, f.context(), "PointIdeal::residue");
  if (point_.empty()) return f;
  return evaluate_partial(f, point_);
}

bool PointIdeal::operator==(const PointIdeal& o) const {
  return same_context(ctx_, o.ctx_) && point_ == o.point_;
}

}  // namespace qs
