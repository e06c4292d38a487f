#include "ringprob/prob_value.hpp"

#include <sstream>

#include "ringprob/errors.hpp"

namespace ringprob {

ProbValue::ProbValue(BigInt count, BigInt total)
    : count_(std::move(count)), total_(std::move(total)) {
  if (total_ <= 0) throw Error(ErrorKind::InvalidArgument, "probability total must be positive");
  if (count_ < 0 || count_ > total_)
    throw Error(ErrorKind::InvalidArgument, "probability count outside [0, total]");
  value_ = Rational(count_, total_);
}

std::string ProbValue::fraction() const { return to_string(value_); }

std::string ProbValue::decimal() const { return to_decimal(value_); }

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q) << "/" << boost::multiprecision::denominator(q);
  return os.str();
}

std::string to_decimal(const Rational& q, int places) {
  BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  const bool negative = num < 0;
  if (negative) num = -num;
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // round half up
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  const BigInt whole = scaled / scale;
  const BigInt rest = scaled % scale;
  std::string frac = rest.str();
  std::ostringstream os;
  if (negative && scaled != 0) os << "-";
  os << whole;
  if (places > 0) os << "." << std::string(static_cast<std::size_t>(places) - frac.size(), '0') << frac;
  return os.str();
}

}  // namespace ringprob
