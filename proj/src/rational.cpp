#include "ennorm/rational.hpp"

#include <cctype>

namespace ennorm {

namespace {

std::string rational_str(const mpq_class& q) { return q.get_str(); }

// Appends "q" or "q i" (with q possibly 1/-1 collapsing to ""/"-") for the
// imaginary part, including the leading sign when `with_sign`.
void append_imag(std::string& out, const mpq_class& q, bool with_sign) {
  mpq_class a = q < 0 ? mpq_class(-q) : q;
  if (with_sign) out += q < 0 ? "-" : "+";
  else if (q < 0) out += "-";
  if (a != 1) out += rational_str(a);
  out += "i";
}

}  // namespace

std::string GaussianRational::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (re_ != 0) {
    out += rational_str(re_);
    if (im_ != 0) append_imag(out, im_, true);
  } else {
    append_imag(out, im_, false);
  }
  return out;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> GaussianRational {
    throw std::invalid_argument("bad Gaussian rational '" + std::string(text) + "': " + why);
  };

  mpq_class re(0), im(0);
  skip_ws();
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) {
      if (first) return fail("empty");
      break;
    }
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      return fail("expected '+' or '-'");
    }
    if (pos >= text.size()) return fail("dangling sign");

    mpq_class mag(1);
    bool have_digits = false;
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      std::string num(text.substr(start, pos - start));
      std::string den = "1";
      skip_ws();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_ws();
        size_t dstart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (dstart == pos) return fail("missing denominator");
        den = std::string(text.substr(dstart, pos - dstart));
      }
      mag = mpq_class(num + "/" + den);
      mag.canonicalize();
      have_digits = true;
      skip_ws();
    }
    if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'I')) {
      ++pos;
      im += sign * mag;
    } else if (have_digits) {
      re += sign * mag;
    } else {
      return fail("expected digits or 'i'");
    }
    first = false;
  }
  return GaussianRational(re, im);
}

}  // namespace ennorm
