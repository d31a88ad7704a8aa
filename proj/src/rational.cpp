#include "gsp/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace gsp {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw input_error("empty numeric literal");
  std::string body = text;
  bool negative = false;
  if (body[0] == '+' || body[0] == '-') {
    negative = body[0] == '-';
    body = body.substr(1);
  }

  auto slash = body.find('/');
  if (slash != std::string::npos) {
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw input_error("bad fraction literal: \"" + text + "\"");
    mpz_class p(num, 10), q(den, 10);
    if (q == 0) throw input_error("zero denominator: \"" + text + "\"");
    Rat r(p, q);
    r.canonicalize();
    return negative ? Rat(-r) : r;
  }

  auto dot = body.find('.');
  if (dot != std::string::npos) {
    std::string whole = body.substr(0, dot);
    std::string frac = body.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    if (!all_digits(whole) || !all_digits(frac))
      throw input_error("bad decimal literal: \"" + text + "\"");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class p = mpz_class(whole, 10) * scale + mpz_class(frac, 10);
    Rat r(p, scale);
    r.canonicalize();
    return negative ? Rat(-r) : r;
  }

  if (!all_digits(body)) throw input_error("bad numeric literal: \"" + text + "\"");
  Rat r{mpz_class(body, 10)};
  return negative ? Rat(-r) : r;
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rat_to_decimal(const Rat& r, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class num = r.get_num() * scale;
  mpz_class q = num / r.get_den();  // truncates toward zero
  bool neg = sgn(q) < 0;
  mpz_class a = abs(q);
  std::string s = a.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  // trim trailing zeros but keep at least one fractional digit
  auto last = s.find_last_not_of('0');
  if (s[last] == '.') ++last;
  s.erase(last + 1);
  return neg ? "-" + s : s;
}

bool rational_sqrt(const Rat& r, Rat* root) {
  if (sgn(r) < 0) return false;
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  if (root) {
    *root = Rat(sn, sd);
    root->canonicalize();
  }
  return true;
}

ExtRat ext_from_string(const std::string& text) {
  if (text == "inf") return ExtRat::infinity();
  return ExtRat(rat_from_string(text));
}

std::string ext_to_string(const ExtRat& e) {
  if (e.is_inf()) return "inf";
  return rat_to_string(e.finite());
}

}  // namespace gsp
