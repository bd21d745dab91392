#include "nahmrat/gauss.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace nahmrat {

GaussScalar& GaussScalar::operator/=(const GaussScalar& o) {
  if (o.is_zero()) throw std::domain_error("GaussScalar: division by zero");
  mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string GaussScalar::str() const {
  if (im_ == 0) return re_.get_str();
  std::string out = re_.get_str();
  if (im_ > 0) out += "+";
  out += im_.get_str();
  out += "i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussScalar& s) { return os << s.str(); }

namespace {

// One signed rational literal, optionally suffixed by 'i': "3", "-3/4", "i",
// "-i", "3/4i".  Returns the value and whether it was imaginary.
struct Term {
  mpq_class value;
  bool imaginary = false;
};

Term parse_term(const std::string& s, size_t& pos) {
  Term t;
  std::string digits;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) digits += s[pos++];
  while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
    digits += s[pos++];
  if (pos < s.size() && s[pos] == 'i') {
    t.imaginary = true;
    ++pos;
    if (digits.empty() || digits == "+")
      digits = "1";
    else if (digits == "-")
      digits = "-1";
  }
  if (!digits.empty() && digits.front() == '+') digits.erase(digits.begin());
  if (digits.empty() || digits.back() == '/' || digits.find("//") != std::string::npos)
    throw std::invalid_argument("GaussScalar: malformed literal '" + s + "'");
  try {
    t.value = mpq_class(digits);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("GaussScalar: malformed literal '" + s + "'");
  }
  t.value.canonicalize();
  return t;
}

}  // namespace

GaussScalar GaussScalar::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw std::invalid_argument("GaussScalar: empty literal");

  size_t pos = 0;
  mpq_class re(0), im(0);
  int terms = 0;
  while (pos < s.size()) {
    if (terms >= 2) throw std::invalid_argument("GaussScalar: too many terms in '" + text + "'");
    Term t = parse_term(s, pos);
    (t.imaginary ? im : re) += t.value;
    ++terms;
  }
  if (terms == 0) throw std::invalid_argument("GaussScalar: empty literal");
  return GaussScalar(re, im);
}

}  // namespace nahmrat
