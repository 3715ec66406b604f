#include "t2/two_terms.hpp"


#include <utility>

#include "t2/errors.hpp"

namespace t2 {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::shared_ptr<const TwoNode> make(TwoNode node) {
  return std::make_shared<const TwoNode>(std::move(node));
}

}  // namespace

TwoTerm TwoTerm::identity(MorTerm f) { return TwoTerm(make({TwoIdentity{std::move(f)}})); }

TwoTerm TwoTerm::tensorator(MorTerm f, MorTerm g) {
  return TwoTerm(make({TwoTensorator{std::move(f), std::move(g)}}));
}

TwoTerm TwoTerm::braid_zf(MorTerm g) { return TwoTerm(make({TwoBraidZf{std::move(g)}})); }

TwoTerm TwoTerm::braid_fz(MorTerm f) { return TwoTerm(make({TwoBraidFz{std::move(f)}})); }

TwoTerm TwoTerm::unit(MorTerm f) { return TwoTerm(make({TwoUnit{std::move(f)}})); }

TwoTerm TwoTerm::triangulator() { return TwoTerm(make({TwoTriangulator{}})); }

TwoTerm TwoTerm::writhing() { return TwoTerm(make({TwoWrithing{}})); }

TwoTerm TwoTerm::whisker(int left, TwoTerm body, int right) {
  if (left == 0 && right == 0) return body;
  return TwoTerm(make({TwoWhisker{left, std::move(body), right}}));
}

TwoTerm TwoTerm::vertical(TwoTerm first, TwoTerm second) {
  return TwoTerm(make({TwoVertical{std::move(first), std::move(second)}}));
}

TwoTerm TwoTerm::horizontal(TwoTerm first, TwoTerm second) {
  return TwoTerm(make({TwoHorizontal{std::move(first), std::move(second)}}));
}

TwoTerm TwoTerm::dual(TwoTerm body) { return TwoTerm(make({TwoDual{std::move(body)}})); }

namespace {

// Appends `slices` padded by `left` and `right` extra strands.
void append_shifted(std::vector<Slice>& out, const std::vector<Slice>& slices, int left,
                    int right) {
  for (const Slice& s : slices) out.push_back({s.left + left, s.gen, s.right + right});
}

TwoType check(const TwoTerm& term) {
  return std::visit(
      overloaded{
          [](const TwoIdentity& t) -> TwoType {
            MorNormal n = normalize(t.f);
            return {n, n};
          },
          [](const TwoTensorator& t) -> TwoType {
            MorNormal f = normalize(t.f);
            MorNormal g = normalize(t.g);
            int a = f.source_width, a2 = f.target_width();
            int b = g.source_width, b2 = g.target_width();
            MorNormal src{a + b, {}};
            append_shifted(src.slices, g.slices, a, 0);
            append_shifted(src.slices, f.slices, 0, b2);
            MorNormal tgt{a + b, {}};
            append_shifted(tgt.slices, f.slices, 0, b);
            append_shifted(tgt.slices, g.slices, a2, 0);
            return {std::move(src), std::move(tgt)};
          },
          [](const TwoBraidZf& t) -> TwoType {
            MorNormal g = normalize(t.g);
            int b = g.source_width, b2 = g.target_width();
            MorNormal src{1 + b, {}};
            append_shifted(src.slices, g.slices, 1, 0);
            append_shifted(src.slices, normalize(braiding(1, b2)).slices, 0, 0);
            MorNormal tgt{1 + b, {}};
            append_shifted(tgt.slices, normalize(braiding(1, b)).slices, 0, 0);
            append_shifted(tgt.slices, g.slices, 0, 1);
            return {std::move(src), std::move(tgt)};
          },
          [](const TwoBraidFz& t) -> TwoType {
            MorNormal f = normalize(t.f);
            int a = f.source_width, a2 = f.target_width();
            MorNormal src{a + 1, {}};
            append_shifted(src.slices, f.slices, 0, 1);
            append_shifted(src.slices, normalize(braiding(a2, 1)).slices, 0, 0);
            MorNormal tgt{a + 1, {}};
            append_shifted(tgt.slices, normalize(braiding(a, 1)).slices, 0, 0);
            append_shifted(tgt.slices, f.slices, 1, 0);
            return {std::move(src), std::move(tgt)};
          },
          [](const TwoUnit& t) -> TwoType {
            MorNormal f = normalize(t.f);
            MorNormal tgt = f;
            append_shifted(tgt.slices, dual(f).slices, 0, 0);
            return {MorNormal{f.source_width, {}}, std::move(tgt)};
          },
          [](const TwoTriangulator&) -> TwoType {
            return {MorNormal{1, {{0, MorGen::cap, 1}, {1, MorGen::cup, 0}}}, MorNormal{1, {}}};
          },
          [](const TwoWrithing&) -> TwoType {
            return {MorNormal{0, {{0, MorGen::cap, 0}}},
                    MorNormal{0, {{0, MorGen::cap, 0}, {0, MorGen::pos, 0}}}};
          },
          [](const TwoWhisker& t) -> TwoType {
            TwoType inner = check(t.body);
            MorNormal src{t.left + inner.source.source_width + t.right, {}};
            append_shifted(src.slices, inner.source.slices, t.left, t.right);
            MorNormal tgt{src.source_width, {}};
            append_shifted(tgt.slices, inner.target.slices, t.left, t.right);
            return {std::move(src), std::move(tgt)};
          },
          [](const TwoVertical& t) -> TwoType {
            TwoType a = check(t.first);
            TwoType b = check(t.second);
            if (a.target != b.source)
              throw Ill2TypedError("vertical", "target " + to_string(a.target) +
                                                   " does not match source " + to_string(b.source));
            return {std::move(a.source), std::move(b.target)};
          },
          [](const TwoHorizontal& t) -> TwoType {
            TwoType a = check(t.first);
            TwoType b = check(t.second);
            if (a.source.target_width() != b.source.source_width)
              throw Ill2TypedError("horizontal",
                                   "boundaries end at " + to_string(Object{a.source.target_width()}) +
                                       " but continue from " +
                                       to_string(Object{b.source.source_width}));
            MorNormal src = a.source;
            append_shifted(src.slices, b.source.slices, 0, 0);
            MorNormal tgt = a.target;
            append_shifted(tgt.slices, b.target.slices, 0, 0);
            return {std::move(src), std::move(tgt)};
          },
          [](const TwoDual& t) -> TwoType {
            TwoType inner = check(t.body);
            return {std::move(inner.target), std::move(inner.source)};
          },
      },
      term.node().v);
}

}  // namespace

TwoType typecheck(const TwoTerm& term) { return check(term); }

TwoTerm counit(const MorTerm& f) { return TwoTerm::dual(TwoTerm::unit(dual(f))); }

TwoTerm adjoint(const TwoTerm& a) {
  TwoType ty = typecheck(a);
  MorTerm f = term_of(ty.source);
  MorTerm g = term_of(ty.target);
  TwoTerm gd = TwoTerm::identity(dual(g));
  TwoTerm fd = TwoTerm::identity(dual(f));
  TwoTerm bend_in = TwoTerm::horizontal(gd, TwoTerm::unit(f));
  TwoTerm middle = TwoTerm::horizontal(TwoTerm::horizontal(gd, a), fd);
  TwoTerm bend_out = TwoTerm::horizontal(counit(g), fd);
  return TwoTerm::vertical(TwoTerm::vertical(bend_in, middle), bend_out);
}

TwoTerm triangulator_of(int width) {
  if (width <= 0) return TwoTerm::identity(MorTerm::identity(0));
  if (width == 1) return TwoTerm::triangulator();
  // Split as Z (x) rest and stitch the two triangulators together. The first
  // layer rearranges the nested units and counits with an inverse tensorator
  // so that the two zig-zags sit side by side.
  int a = 1;
  int b = width - 1;
  MorTerm i_a = object_unit(a);
  MorTerm e_a = object_counit(a);
  MorTerm i_b = object_unit(b);
  MorTerm e_b = object_counit(b);
  TwoTerm untensor = TwoTerm::dual(TwoTerm::tensorator(i_b, e_a));
  TwoTerm rearrange = TwoTerm::horizontal(
      TwoTerm::horizontal(TwoTerm::identity(MorTerm::whisker(0, i_a, a + b)),
                          TwoTerm::whisker(a, untensor, b)),
      TwoTerm::identity(MorTerm::whisker(a + b, e_b, 0)));
  TwoTerm pair = TwoTerm::horizontal(TwoTerm::whisker(0, triangulator_of(a), b),
                                     TwoTerm::whisker(a, triangulator_of(b), 0));
  return TwoTerm::vertical(rearrange, pair);
}

}  // namespace t2
