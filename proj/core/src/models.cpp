#include "t2/models.hpp"

#include <random>
#include <utility>

#include "t2/errors.hpp"
#include "t2/movies.hpp"

namespace t2 {

namespace {

// dim^exp as a matrix dimension, guarded so absurd widths fail loudly
// instead of overflowing.
int pow_dim(int dim, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) {
    out *= dim;
    if (out > (1 << 24)) throw Error("evaluation width too large for a dense matrix");
  }
  return static_cast<int>(out);
}

// The factor-swap crossing on two strands.
Matrix swap_matrix(int dim) {
  Matrix out(dim * dim, dim * dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) out.at(b * dim + a, a * dim + b) = 1;
  return out;
}

const Matrix& generator_image(const Model& model, MorGen gen) {
  switch (gen) {
    case MorGen::cap: return model.cap;
    case MorGen::cup: return model.cup;
    case MorGen::pos: return model.pos;
    case MorGen::neg: break;
  }
  return model.neg;
}

// Applies (identity on `left` strands) tensor M tensor (identity on `right`
// strands) to the columns of `a`, without materializing the Kronecker
// product.
Matrix apply_slice(const Matrix& m, int left_size, int right_size, const Matrix& a) {
  Matrix out(left_size * m.rows * right_size, a.cols);
  for (int x = 0; x < left_size; ++x)
    for (int u = 0; u < m.rows; ++u)
      for (int v = 0; v < m.cols; ++v) {
        const mpq_class& weight = m.at(u, v);
        if (weight == 0) continue;
        for (int y = 0; y < right_size; ++y) {
          int in_row = (x * m.cols + v) * right_size + y;
          int out_row = (x * m.rows + u) * right_size + y;
          for (int c = 0; c < a.cols; ++c) out.at(out_row, c) += weight * a.at(in_row, c);
        }
      }
  return out;
}

mpq_class deviation(const Matrix& a, const Matrix& b) {
  mpq_class worst = 0;
  for (size_t i = 0; i < a.data.size(); ++i) {
    mpq_class d = a.data[i] - b.data[i];
    if (d < 0) d = -d;
    if (d > worst) worst = d;
  }
  return worst;
}

}  // namespace

Matrix Matrix::identity(int n) {
  Matrix out(n, n);
  for (int i = 0; i < n; ++i) out.at(i, i) = 1;
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows)
    throw WidthMismatchError("matrix product", a.cols, b.rows);
  Matrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const mpq_class& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows * b.rows, a.cols * b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) {
      const mpq_class& aij = a.at(i, j);
      if (aij == 0) continue;
      for (int k = 0; k < b.rows; ++k)
        for (int l = 0; l < b.cols; ++l)
          out.at(i * b.rows + k, j * b.cols + l) = aij * b.at(k, l);
    }
  return out;
}

Matrix inverse(const Matrix& form) {
  if (form.rows != form.cols) throw Error("inverse of a non-square matrix");
  int n = form.rows;
  Matrix work = form;
  Matrix out = Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (work.at(row, col) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw SingularFormError(n);
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(out.at(pivot, j), out.at(col, j));
      }
    mpq_class lead = work.at(col, col);
    for (int j = 0; j < n; ++j) {
      work.at(col, j) /= lead;
      out.at(col, j) /= lead;
    }
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      mpq_class factor = work.at(row, col);
      if (factor == 0) continue;
      for (int j = 0; j < n; ++j) {
        work.at(row, j) -= factor * work.at(col, j);
        out.at(row, j) -= factor * out.at(col, j);
      }
    }
  }
  return out;
}

Model Model::linear(int dim, const Matrix& form) {
  return linear(dim, form, swap_matrix(dim));
}

Model Model::linear(int dim, const Matrix& form, const Matrix& crossing) {
  if (dim < 1) throw Error("model dimension must be positive");
  if (form.rows != dim || form.cols != dim)
    throw WidthMismatchError("model form", dim, form.rows == dim ? form.cols : form.rows);
  if (crossing.rows != dim * dim || crossing.cols != dim * dim)
    throw WidthMismatchError("model crossing", dim * dim,
                             crossing.rows == dim * dim ? crossing.cols : crossing.rows);
  Matrix cocycle = inverse(form);

  Model model;
  model.dim = dim;
  model.form = form;
  model.cup = Matrix(1, dim * dim);
  model.cap = Matrix(dim * dim, 1);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      model.cup.at(0, i * dim + j) = form.at(i, j);
      model.cap.at(i * dim + j, 0) = cocycle.at(i, j);
    }
  model.pos = crossing;

  // neg is pos rotated by the duality: feed a cap in below-right, cross the
  // middle pair, close with a cup above-left. With the swap crossing this
  // collapses back to the swap for every form.
  Matrix grow = kronecker(Matrix::identity(dim * dim), model.cap);
  Matrix cross = kronecker(kronecker(Matrix::identity(dim), model.pos), Matrix::identity(dim));
  Matrix shrink = kronecker(model.cup, Matrix::identity(dim * dim));
  model.neg = multiply(shrink, multiply(cross, grow));
  return model;
}

Matrix evaluate(const MorNormal& f, const Model& model) {
  int width = f.source_width;
  Matrix current = Matrix::identity(pow_dim(model.dim, width));
  for (const Slice& slice : f.slices) {
    if (slice.source_width() != width)
      throw WidthMismatchError("evaluate", width, slice.source_width());
    const Matrix& image = generator_image(model, slice.gen);
    current = apply_slice(image, pow_dim(model.dim, slice.left), pow_dim(model.dim, slice.right),
                          current);
    width = slice.target_width();
  }
  return current;
}

Matrix evaluate(const MorTerm& f, const Model& model) { return evaluate(normalize(f), model); }

namespace {

Witness witness_of(const MorNormal& src, const MorNormal& tgt, const Model& model,
                   const mpq_class& tolerance) {
  Witness out;
  out.source = evaluate(src, model);
  out.target = evaluate(tgt, model);
  out.max_deviation = deviation(out.source, out.target);
  out.pass = out.max_deviation <= tolerance;
  if (src.source_width == 0 && src.slices.empty() && tgt.source_width == 0 && tgt.slices.empty())
    out.scalar = out.source.at(0, 0);
  return out;
}

}  // namespace

Witness evaluate(const TwoTerm& alpha, const Model& model, const mpq_class& tolerance) {
  TwoType type = typecheck(alpha);
  return witness_of(type.source, type.target, model, tolerance);
}

Report verify_model(const Model& model, const std::vector<RelationInstance>& instances,
                    const mpq_class& tolerance) {
  Report report;
  for (size_t i = 0; i < instances.size(); ++i) {
    const RelationInstance& instance = instances[i];
    ReportEntry entry;
    entry.index = static_cast<int>(i);
    entry.schema = instance.schema;
    try {
      Witness lhs = evaluate(instance.lhs, model, tolerance);
      Witness rhs = evaluate(instance.rhs, model, tolerance);
      mpq_class worst = lhs.max_deviation;
      if (rhs.max_deviation > worst) worst = rhs.max_deviation;
      mpq_class across = deviation(lhs.source, rhs.source);
      if (across > worst) worst = across;
      across = deviation(lhs.target, rhs.target);
      if (across > worst) worst = across;
      entry.max_deviation = worst;
      entry.pass = worst <= tolerance;
    } catch (const Error&) {
      entry.pass = false;
      entry.max_deviation = 0;
    }
    (entry.pass ? report.passed : report.failed) += 1;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::vector<RelationInstance> sample_catalog(unsigned seed) {
  std::mt19937_64 engine(seed);
  auto below = [&engine](int n) { return static_cast<int>(engine() % static_cast<unsigned>(n)); };
  const MorGen gens[] = {MorGen::cap, MorGen::cup, MorGen::pos, MorGen::neg};
  auto random_gen_term = [&]() { return MorTerm::generator(gens[below(4)]); };
  // Cell arguments stick to writhing, triangulator, and identities: those are
  // exactly the generator cells whose boundaries evaluate equally in an
  // admissible model. Folding in unit or counit cells would make every
  // containing instance fail for the reason documented on admissibility.
  auto random_cell = [&]() -> TwoTerm {
    switch (below(3)) {
      case 0: return TwoTerm::writhing();
      case 1: return TwoTerm::triangulator();
      default: return TwoTerm::identity(random_gen_term());
    }
  };
  // A follow-up 2-cell whose source morphism starts where `first` ends, so
  // horizontal composites typecheck.
  auto compatible_cell = [&](const TwoTerm& first) -> TwoTerm {
    int width = typecheck(first).source.target_width();
    MorTerm stub = width >= 2 ? MorTerm::whisker(0, MorTerm::generator(MorGen::cup), width - 2)
                              : MorTerm::whisker(0, MorTerm::generator(MorGen::cap), width);
    return TwoTerm::identity(stub);
  };

  std::vector<RelationInstance> out;
  for (const RelationSchema& schema : catalog()) {
    int accepted = 0;
    for (int attempt = 0; attempt < 12 && accepted < 3; ++attempt) {
      std::vector<RelationArg> args;
      for (size_t i = 0; i < schema.arg_kinds.size(); ++i) {
        switch (schema.arg_kinds[i]) {
          // Widths stay at 1 or 2 so even three-argument braiding relations
          // keep their frames within dense-evaluation reach at dim 3.
          case ArgKind::object: args.emplace_back(Object{1 + below(2)}); break;
          case ArgKind::morphism: args.emplace_back(random_gen_term()); break;
          case ArgKind::two_morphism:
            if (i == 1)
              args.emplace_back(compatible_cell(std::get<TwoTerm>(args[0])));
            else
              args.emplace_back(random_cell());
            break;
        }
      }
      try {
        out.push_back(instantiate(schema.name, std::move(args)));
        ++accepted;
      } catch (const Error&) {
      }
    }
  }
  return out;
}

Report admissibility(const Model& model, const mpq_class& tolerance) {
  const MorGen gens[] = {MorGen::cap, MorGen::cup, MorGen::pos, MorGen::neg};
  std::vector<std::pair<std::string, TwoTerm>> cells;
  for (MorGen g : gens)
    cells.emplace_back(std::string("identity(") + gen_name(g) + ")",
                       TwoTerm::identity(MorTerm::generator(g)));
  for (MorGen f : gens)
    for (MorGen g : gens)
      cells.emplace_back(std::string("tensorator(") + gen_name(f) + "," + gen_name(g) + ")",
                         TwoTerm::tensorator(MorTerm::generator(f), MorTerm::generator(g)));
  for (MorGen g : gens)
    cells.emplace_back(std::string("braid-under(") + gen_name(g) + ")",
                       TwoTerm::braid_zf(MorTerm::generator(g)));
  for (MorGen f : gens)
    cells.emplace_back(std::string("braid-over(") + gen_name(f) + ")",
                       TwoTerm::braid_fz(MorTerm::generator(f)));
  cells.emplace_back("triangulator", TwoTerm::triangulator());
  cells.emplace_back("writhing", TwoTerm::writhing());

  Report report;
  for (size_t i = 0; i < cells.size(); ++i) {
    Witness witness = evaluate(cells[i].second, model, tolerance);
    ReportEntry entry;
    entry.index = static_cast<int>(i);
    entry.schema = cells[i].first;
    entry.pass = witness.pass;
    entry.max_deviation = witness.max_deviation;
    (entry.pass ? report.passed : report.failed) += 1;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

bool admissible(const Model& model) { return admissibility(model).failed == 0; }

}  // namespace t2
