#pragma once

#include <stdexcept>

#include "homothets/point.hpp"

namespace homothets {

// x  ->  ratio * x + translation, ratio > 0.
class Homothety {
 public:
  Homothety(Rational ratio, Point translation)
      : ratio_(std::move(ratio)), translation_(std::move(translation)) {
    if (ratio_ <= 0) throw std::invalid_argument("homothety ratio must be positive");
  }

  const Rational& ratio() const { return ratio_; }
  const Point& translation() const { return translation_; }

  Point apply(const Point& p) const { return ratio_ * p + translation_; }

  // The fixed point t / (1 - ratio); undefined for a pure translation.
  Point centre() const {
    if (ratio_ == 1)
      throw std::domain_error("a translation has no homothety centre");
    return (Rational(1) / (Rational(1) - ratio_)) * translation_;
  }

 private:
  Rational ratio_;
  Point translation_;
};

}  // namespace homothets
