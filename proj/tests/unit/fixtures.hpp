#pragma once

#include <gtest/gtest.h>

#include <initializer_list>
#include <vector>

#include "ringprob/catalog.hpp"
#include "ringprob/errors.hpp"
#include "ringprob/prob_value.hpp"
#include "ringprob/subring.hpp"

namespace fx {

using namespace ringprob;

// nc4a elements: (x,y) encoded as 2x + y.
inline constexpr Index B = 1, A = 2, C = 3;

inline RingPtr ring(std::string_view spec) { return share(builtin_from_spec(spec)); }

inline Subring sub(const RingPtr& r, std::initializer_list<Index> members) {
  return Subring::from_indices(r, std::vector<Index>(members));
}

inline std::vector<Index> members(const Subring& s) { return {s.members().begin(), s.members().end()}; }
inline std::vector<Index> members(const ElementSet& s) { return s.members(); }

inline Rational q(long a, long b = 1) { return Rational(a, b); }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an exception";
  return ErrorKind::InvalidArgument;
}

}  // namespace fx

#define EXPECT_ERROR(kind, expr) EXPECT_EQ(::fx::kind_of([&] { (void)(expr); }), ::ringprob::ErrorKind::kind)
