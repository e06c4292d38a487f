#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ringprob {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact probability count/total. The raw pair keeps the total equal to
// |S|*|K| of the computation; value() is the reduced fraction.
class ProbValue {
 public:
  ProbValue() : count_(0), total_(1), value_(0) {}
  ProbValue(BigInt count, BigInt total);

  const BigInt& raw_count() const noexcept { return count_; }
  const BigInt& raw_total() const noexcept { return total_; }
  const Rational& value() const noexcept { return value_; }
  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  // "5/8"
  std::string fraction() const;
  // Six decimal places, e.g. "0.625000".
  std::string decimal() const;

  // Compares reduced values only.
  friend bool operator==(const ProbValue& a, const ProbValue& b) { return a.value_ == b.value_; }
  friend bool operator==(const ProbValue& a, const Rational& b) { return a.value_ == b; }

 private:
  BigInt count_;
  BigInt total_;
  Rational value_;
};

std::string to_string(const Rational& q);
std::string to_decimal(const Rational& q, int places = 6);

}  // namespace ringprob
