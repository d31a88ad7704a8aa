#pragma once

#include <gmpxx.h>

#include <string>

#include "gsp/errors.hpp"

namespace gsp {

// Exact rational scalar. Every quantity that feeds a verdict is a Rat;
// doubles appear only in display paths (SVG coordinates, --approx).
using Rat = mpq_class;

// Parses "3", "-2", "0.25", "7/2". No exponents, no whitespace.
Rat rat_from_string(const std::string& text);

// Canonical rendering: integers without denominator, otherwise "p/q".
std::string rat_to_string(const Rat& r);

// Decimal rendering for display paths.
std::string rat_to_decimal(const Rat& r, int digits = 6);

// If r is the square of a rational, stores it in *root and returns true.
bool rational_sqrt(const Rat& r, Rat* root);

// Nonnegative rational extended with +infinity. Bids live here: the tight
// instance family uses an unbeatable bid, and deviation menus price slots
// behind such a bid at +infinity.
class ExtRat {
 public:
  ExtRat() : inf_(false), q_(0) {}
  ExtRat(Rat q) : inf_(false), q_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  ExtRat(int v) : inf_(false), q_(v) {}             // NOLINT

  static ExtRat infinity() {
    ExtRat e;
    e.inf_ = true;
    return e;
  }

  bool is_inf() const { return inf_; }

  const Rat& finite() const {
    if (inf_) throw internal_error("finite() on +inf");
    return q_;
  }

  // d * b with the zero-discount convention: 0 * inf == 0.
  friend ExtRat operator*(const Rat& d, const ExtRat& b) {
    if (b.inf_) {
      if (sgn(d) == 0) return ExtRat(Rat(0));
      if (sgn(d) < 0) throw internal_error("negative discount times +inf");
      return infinity();
    }
    return ExtRat(d * b.q_);
  }

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
    if (a.inf_ || b.inf_) return infinity();
    return ExtRat(a.q_ + b.q_);
  }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
    return a.q_ == b.q_;
  }
  friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.q_ < b.q_;
  }
  friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) { return !(b < a); }
  friend bool operator>=(const ExtRat& a, const ExtRat& b) { return !(a < b); }

 private:
  bool inf_;
  Rat q_;
};

// "inf" or the usual rational forms.
ExtRat ext_from_string(const std::string& text);
std::string ext_to_string(const ExtRat& e);

}  // namespace gsp
