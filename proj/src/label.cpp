#include "tarb/label.hpp"

#include <cctype>
#include <stdexcept>

namespace tarb {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Label::Label(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
  if (sgn(value_) < 0) throw std::invalid_argument("negative label");
}

Label::Label(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
  if (sgn(value_) < 0) throw std::invalid_argument("negative label");
}

Label Label::parse(std::string_view text) {
  if (!text.empty() && text.front() == '-') throw std::invalid_argument("negative label '" + std::string(text) + "'");
  const auto slash = text.find('/');
  const auto dot = text.find('.');
  mpq_class q;
  if (slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("malformed label '" + std::string(text) + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in label '" + std::string(text) + "'");
    q = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("malformed label '" + std::string(text) + "'");
    }
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::string digits = std::string(whole) + std::string(frac);
    q = mpq_class(mpz_class(digits.empty() ? "0" : digits, 10), den);
  } else {
    if (!all_digits(text)) throw std::invalid_argument("malformed label '" + std::string(text) + "'");
    q = mpq_class(mpz_class(std::string(text), 10));
  }
  return Label(std::move(q));
}

std::string Label::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

}  // namespace tarb
