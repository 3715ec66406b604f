#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "t2/morphisms.hpp"
#include "t2/relations.hpp"
#include "t2/two_terms.hpp"

namespace t2 {

// Dense matrix of exact rationals, row-major. Small by design: evaluation
// shapes are dim^width and widths stay in single digits.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<mpq_class> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, mpq_class(0)) {}

  static Matrix identity(int n);

  mpq_class& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  const mpq_class& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix kronecker(const Matrix& a, const Matrix& b);

// Gauss-Jordan inverse. SingularFormError when the matrix has no inverse.
Matrix inverse(const Matrix& form);

// A linear evaluation: strands map to a dim-dimensional rational space,
// width-n frames to its n-fold tensor power, and the four strand generators
// to the matrices below. All 2-cells are witnessed as identities, so a 2-cell
// evaluates to the comparison of its two boundary matrices.
struct Model {
  int dim = 0;
  Matrix form;  // the pairing matrix defining cup

  // Generator images. cap is dim^2 x 1, cup is 1 x dim^2, pos and neg are
  // dim^2 x dim^2. cap is derived from the form so that both snake
  // composites evaluate to the identity exactly; neg is pos rotated by a
  // cap below and a cup above, which for the default swap crossing is the
  // swap again.
  Matrix cap;
  Matrix cup;
  Matrix pos;
  Matrix neg;

  // Builds a model from an invertible form, with the factor-swap crossing by
  // default. A symmetric form makes the model admissible; asymmetry is
  // allowed and surfaces as failing writhing witnesses, not as an error.
  static Model linear(int dim, const Matrix& form);
  static Model linear(int dim, const Matrix& form, const Matrix& crossing);
};

// The matrix of a 1-cell, shape dim^target_width x dim^source_width.
// Composition reverses: a composite "f then g" evaluates to the product
// matrix(g) * matrix(f).
Matrix evaluate(const MorNormal& f, const Model& model);
Matrix evaluate(const MorTerm& f, const Model& model);

// Comparison of a 2-cell's two boundary matrices. `scalar` is set exactly
// when both boundaries are the empty 1-cell, where the matrices are 1x1.
struct Witness {
  Matrix source;
  Matrix target;
  mpq_class max_deviation;
  bool pass = false;
  std::optional<mpq_class> scalar;
};

Witness evaluate(const TwoTerm& alpha, const Model& model, const mpq_class& tolerance = 0);

// One verified relation instance: the boundary witnesses of both sides, and
// whether everything agreed within the tolerance.
struct ReportEntry {
  int index = 0;
  std::string schema;
  bool pass = false;
  mpq_class max_deviation;
};

struct Report {
  std::vector<ReportEntry> entries;
  int passed = 0;
  int failed = 0;
};

// Evaluates every instance: both sides' boundary witnesses must pass and the
// two sides' matrices must agree. Failures become report entries, never
// errors. Deterministic: entries in input order.
Report verify_model(const Model& model, const std::vector<RelationInstance>& instances,
                    const mpq_class& tolerance = 0);

// Deterministic sample of the whole catalog: every schema instantiated a few
// times with small arguments drawn from the given seed. Arguments are kept
// model-friendly: cell arguments avoid unit and counit (see the admissibility
// note below) and widths stay small enough for dense evaluation, so in an
// admissible model every sampled instance verifies exactly.
std::vector<RelationInstance> sample_catalog(unsigned seed);

// The generator 2-cells whose boundaries must evaluate equal for the model
// to count as admissible: identity cells, tensorator cells over the strand
// generators, the strand braidings, the triangulator, and the writhing.
// Unit and counit cells are excluded on purpose: their targets evaluate to
// form contractions (a circle is dim, not 1), so no linear model witnesses
// them as identities; their content is covered by the snake and writhing
// checks instead.
Report admissibility(const Model& model, const mpq_class& tolerance = 0);

bool admissible(const Model& model);

}  // namespace t2
