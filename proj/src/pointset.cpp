#include "pointset.hpp"

#include <sstream>

#include "error.hpp"

namespace zcross {

PointSet PointSet::finite_mask(std::vector<bool> mask) {
  PointSet s(Kind::FiniteMask);
  s.mask_ = std::move(mask);
  return s;
}

PointSet PointSet::all_but_roots(GPoly excluded) {
  if (poly::is_zero(excluded))
    throw Error(ErrorCode::InvalidArgument, "root set of the zero polynomial is not a point set");
  if (poly::degree(excluded) <= 0) return all();
  PointSet s(Kind::AllButRoots);
  s.poly_ = poly::monic(std::move(excluded));
  return s;
}

PointSet PointSet::roots_only(GPoly roots) {
  if (poly::is_zero(roots))
    throw Error(ErrorCode::InvalidArgument, "root set of the zero polynomial is not a point set");
  if (poly::degree(roots) <= 0) return empty();
  PointSet s(Kind::RootsOnly);
  s.poly_ = poly::monic(std::move(roots));
  return s;
}

const std::vector<bool>& PointSet::mask() const {
  if (kind_ != Kind::FiniteMask)
    throw Error(ErrorCode::WrongVariant, "point set is symbolic, not a finite mask");
  return mask_;
}

const GPoly& PointSet::poly() const {
  if (kind_ != Kind::AllButRoots && kind_ != Kind::RootsOnly)
    throw Error(ErrorCode::WrongVariant, "point set carries no root polynomial");
  return poly_;
}

bool PointSet::is_empty_set() const {
  if (kind_ == Kind::Empty) return true;
  if (kind_ == Kind::FiniteMask) return mask_count() == 0;
  // AllButRoots and All are cofinite in an infinite space, hence non-empty.
  // RootsOnly may or may not contain circle points; treat it as non-empty
  // only when it provably is, which we do not decide here.
  return false;
}

size_t PointSet::mask_count() const {
  size_t n = 0;
  for (bool b : mask()) n += b ? 1 : 0;
  return n;
}

PointSet PointSet::complement() const {
  switch (kind_) {
    case Kind::FiniteMask: {
      std::vector<bool> flipped = mask_;
      flipped.flip();
      return finite_mask(std::move(flipped));
    }
    case Kind::All: return empty();
    case Kind::Empty: return all();
    case Kind::AllButRoots: {
      PointSet s(Kind::RootsOnly);
      s.poly_ = poly_;
      return s;
    }
    case Kind::RootsOnly: {
      PointSet s(Kind::AllButRoots);
      s.poly_ = poly_;
      return s;
    }
  }
  throw Error(ErrorCode::InternalInvariantViolation, "unreachable point-set kind");
}

PointSet PointSet::intersect(const PointSet& a, const PointSet& b) {
  if (a.kind_ == Kind::FiniteMask && b.kind_ == Kind::FiniteMask) {
    if (a.mask_.size() != b.mask_.size())
      throw Error(ErrorCode::DimensionMismatch, "mask sizes differ");
    std::vector<bool> m(a.mask_.size());
    for (size_t i = 0; i < m.size(); ++i) m[i] = a.mask_[i] && b.mask_[i];
    return finite_mask(std::move(m));
  }
  if (a.kind_ == Kind::Empty || b.kind_ == Kind::Empty) return empty();
  if (a.kind_ == Kind::All) return b;
  if (b.kind_ == Kind::All) return a;
  if (a.kind_ == Kind::AllButRoots && b.kind_ == Kind::AllButRoots)
    return all_but_roots(poly::radical(poly::mul(a.poly_, b.poly_)));
  throw Error(ErrorCode::WrongVariant, "unsupported point-set intersection");
}

std::string PointSet::describe(const std::vector<std::string>* labels) const {
  switch (kind_) {
    case Kind::All: return "all";
    case Kind::Empty: return "empty";
    case Kind::AllButRoots: {
      std::ostringstream oss;
      oss << "all but circle roots of [";
      for (size_t k = 0; k < poly_.size(); ++k) {
        if (k) oss << ",";
        oss << poly_[k].str();
      }
      oss << "]";
      return oss.str();
    }
    case Kind::RootsOnly: {
      std::ostringstream oss;
      oss << "circle roots of [";
      for (size_t k = 0; k < poly_.size(); ++k) {
        if (k) oss << ",";
        oss << poly_[k].str();
      }
      oss << "]";
      return oss.str();
    }
    case Kind::FiniteMask: {
      std::ostringstream oss;
      oss << "{";
      bool first = true;
      for (size_t x = 0; x < mask_.size(); ++x) {
        if (!mask_[x]) continue;
        if (!first) oss << ",";
        first = false;
        if (labels && x < labels->size()) oss << (*labels)[x];
        else oss << x;
      }
      oss << "}";
      return oss.str();
    }
  }
  throw Error(ErrorCode::InternalInvariantViolation, "unreachable point-set kind");
}

}  // namespace zcross
