#pragma once

#include <stdexcept>
#include <string>

namespace t2 {

// Base class for every error the library throws deliberately.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A composite chained two pieces whose boundary widths disagree.
struct WidthMismatchError : Error {
  WidthMismatchError(std::string where, int expected, int actual)
      : Error("width mismatch at " + where + ": expected " + std::to_string(expected) +
              " strands, got " + std::to_string(actual)),
        where(std::move(where)), expected(expected), actual(actual) {}
  std::string where;
  int expected;
  int actual;
};

// A 2-morphism term whose boundaries fail to line up.
struct Ill2TypedError : Error {
  Ill2TypedError(std::string where, std::string reason)
      : Error("ill-typed 2-morphism at " + where + ": " + reason),
        where(std::move(where)), reason(std::move(reason)) {}
  std::string where;
  std::string reason;
};

// A relation schema was given an argument of the wrong kind.
struct KindMismatchError : Error {
  KindMismatchError(std::string schema, int position, std::string expected)
      : Error("schema " + schema + ": argument " + std::to_string(position) +
              " must be " + expected),
        schema(std::move(schema)), position(position), expected(std::move(expected)) {}
  std::string schema;
  int position;
  std::string expected;
};

// Two 2-morphisms compared for equivalence do not share source and target.
struct NotParallelError : Error {
  explicit NotParallelError(std::string reason)
      : Error("not parallel: " + reason), reason(std::move(reason)) {}
  std::string reason;
};

// A rewrite was requested at a site where the rule does not match.
struct NoMatchError : Error {
  explicit NoMatchError(std::string site)
      : Error("rule does not match at " + site), site(std::move(site)) {}
  std::string site;
};

// Text input that does not conform to the term or model grammar.
struct ParseError : Error {
  ParseError(int line, int column, std::string expected)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) +
              ": expected " + expected),
        line(line), column(column), expected(std::move(expected)) {}
  int line;
  int column;
  std::string expected;
};

// A model was built on a bilinear form with no inverse.
struct SingularFormError : Error {
  explicit SingularFormError(int dim)
      : Error("bilinear form of dimension " + std::to_string(dim) + " is singular"),
        dim(dim) {}
  int dim;
};

}  // namespace t2
