#pragma once

#include <string>
#include <variant>

#include "t2/models.hpp"
#include "t2/morphisms.hpp"
#include "t2/movies.hpp"
#include "t2/two_terms.hpp"

namespace t2 {

// A parsed source line is either a 1-cell or a 2-cell term.
using ParsedTerm = std::variant<MorTerm, TwoTerm>;

// Parses the term grammar. Morphisms: `id(n)`, `cap`, `cup`, `pos`, `neg`,
// `w(l,f,r)`, `f ; g`. 2-morphisms: `id2(f)`, `tens(f,g)`, `rzf(g)`,
// `rfz(f)`, `i(f)`, `e(f)`, `T`, `W`, `dual(a)`, `adj(a)`, `v(a,b)`,
// `h(a,b)`, `w2(l,a,r)`. `dual` dispatches on its argument and works at both
// levels. `#` starts a comment; whitespace never matters. Throws ParseError
// with the line and column of the offending token.
ParsedTerm parse_term(const std::string& text);

// Canonical text for a term. Structural: no normalization happens, and
// parsing the result rebuilds the same tree. The whisker constructors already
// collapse trivial paddings, so `w(0,f,0)` never appears.
std::string serialize(const MorTerm& term);
std::string serialize(const TwoTerm& term);

// Canonical text for normal forms, via their evident terms.
std::string serialize(const MorNormal& normal);
std::string serialize(const Movie& movie);

// Short display form for a 1-cell boundary: `1_I` for the empty identity,
// `1_Z^n` for wider ones, the canonical term text otherwise.
std::string display_boundary(const MorNormal& normal);

// Multi-line listing of a movie: the source frame, then one line per sheet
// with its cell, orientation, and placement.
std::string movie_listing(const Movie& movie);

// One text band per slice, reading top to bottom: strands are `|`, births
// `/\`, deaths `\/`, crossings `X` (positive) and `X'` (negative). A leading
// band shows the source strands.
std::string render_ascii(const MorNormal& normal);

// The same diagram as a standalone SVG document with strands as lines and
// arcs; the under strand of a crossing is drawn broken.
std::string render_svg(const MorNormal& normal);

// Parses model-file text: a `dim n` row, then `form` rows (dim of them, dim
// entries each), then optional `crossing` rows (dim^2 of them). Entries are
// exact rationals written as integers, fractions `a/b`, or finite decimals.
// Throws ParseError on malformed input and SingularFormError on a
// non-invertible form.
Model load_model(const std::string& text);
Model load_model_file(const std::string& path);

// Loads extra relation schemas from catalog-file text: lines of the shape
//   rule NAME : LHS = RHS
// where both sides are 2-cell terms in the grammar above. Each rule becomes
// an argument-free schema registered under NAME; the sides must be parallel.
// Returns the number of schemas added.
int load_catalog(const std::string& text);
int load_catalog_file(const std::string& path);

// Exact rational from an integer, a fraction `a/b`, or a finite decimal,
// with an optional sign. Throws ParseError on anything else.
mpq_class parse_rational(const std::string& text);

// Stable JSON bytes for a report: schema tag "t2/1", one entry per instance
// in order, then the pass/fail summary. Byte-identical across runs.
std::string export_report_json(const Report& report);

}  // namespace t2
