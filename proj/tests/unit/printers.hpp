#pragma once

#include <sstream>

#include "deltacompat/expression.hpp"
#include "deltacompat/lattice.hpp"
#include "doctest.h"

namespace doctest {

template <>
struct StringMaker<deltacompat::RatFunc> {
  static String convert(const deltacompat::RatFunc& f) { return deltacompat::to_string(f).c_str(); }
};

template <>
struct StringMaker<deltacompat::MultiPoly> {
  static String convert(const deltacompat::MultiPoly& p) { return deltacompat::to_string(p).c_str(); }
};

template <>
struct StringMaker<deltacompat::IntVector> {
  static String convert(const deltacompat::IntVector& v) {
    std::ostringstream s;
    s << "(";
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
    s << ")";
    return s.str().c_str();
  }
};

template <class A, class B>
struct StringMaker<std::pair<A, B>> {
  static String convert(const std::pair<A, B>& p) {
    std::ostringstream s;
    s << "(" << p.first << ", " << p.second << ")";
    return s.str().c_str();
  }
};

}  // namespace doctest
