#pragma once

#include <doctest.h>

#include "oracles.hpp"
#include "qparikh/matrix.hpp"
#include "qparikh/polynomial.hpp"
#include "qparikh/words.hpp"

namespace doctest {
template <>
struct StringMaker<qparikh::IntPoly> {
  static String convert(const qparikh::IntPoly& p) { return qparikh::to_string(p).c_str(); }
};
template <>
struct StringMaker<qparikh::Word> {
  static String convert(const qparikh::Word& w) {
    return ("\"" + qparikh::format_word(w, qparikh::Script::Digits) + "\"").c_str();
  }
};
template <>
struct StringMaker<qparikh::PolyMatrix> {
  static String convert(const qparikh::PolyMatrix& m) { return ("\n" + qparikh::to_string(m)).c_str(); }
};
template <>
struct StringMaker<qparikh::Integer> {
  static String convert(const qparikh::Integer& c) { return c.get_str().c_str(); }
};
}  // namespace doctest

inline qparikh::Word w(const char* text) { return qparikh::parse_word(text); }
inline qparikh::IntPoly P(const char* text) { return qparikh::parse_poly(text); }
