#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace tarb {

// Exact nonnegative rational time label.
class Label {
 public:
  Label() = default;
  Label(long numerator, long denominator = 1);

  // Accepts "p", "p/q" and decimal "p.q" forms. Throws std::invalid_argument
  // on malformed text, zero denominators and negative values.
  static Label parse(std::string_view text);

  const mpq_class& value() const { return value_; }

  // Canonical text: "p" for integers, "p/q" otherwise.
  std::string str() const;

  friend bool operator==(const Label& a, const Label& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend Label operator+(const Label& a, const Label& b) { return Label(mpq_class(a.value_ + b.value_)); }

 private:
  explicit Label(mpq_class value);

  mpq_class value_{0};
};

}  // namespace tarb
