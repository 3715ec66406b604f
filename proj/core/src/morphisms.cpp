#include "t2/morphisms.hpp"

#include <utility>

namespace t2 {

std::string to_string(Object a) {
  if (a.width == 0) return "I";
  if (a.width == 1) return "Z";
  return "Z^" + std::to_string(a.width);
}

Object gen_source(MorGen g) {
  switch (g) {
    case MorGen::cap: return Object{0};
    case MorGen::cup: return Object{2};
    case MorGen::pos:
    case MorGen::neg: return Object{2};
  }
  return Object{0};
}

Object gen_target(MorGen g) {
  switch (g) {
    case MorGen::cap: return Object{2};
    case MorGen::cup: return Object{0};
    case MorGen::pos:
    case MorGen::neg: return Object{2};
  }
  return Object{0};
}

MorGen gen_dual(MorGen g) {
  switch (g) {
    case MorGen::cap: return MorGen::cup;
    case MorGen::cup: return MorGen::cap;
    case MorGen::pos: return MorGen::neg;
    case MorGen::neg: return MorGen::pos;
  }
  return g;
}

const char* gen_name(MorGen g) {
  switch (g) {
    case MorGen::cap: return "cap";
    case MorGen::cup: return "cup";
    case MorGen::pos: return "pos";
    case MorGen::neg: return "neg";
  }
  return "?";
}

MorTerm MorTerm::identity(int width) {
  return MorTerm(std::make_shared<const MorNode>(MorNode{MorIdentity{Object{width}}}));
}

MorTerm MorTerm::generator(MorGen g) {
  return MorTerm(std::make_shared<const MorNode>(MorNode{MorGenerator{g}}));
}

MorTerm MorTerm::whisker(int left, const MorTerm& body, int right) {
  if (left == 0 && right == 0) return body;
  return MorTerm(std::make_shared<const MorNode>(MorNode{MorWhisker{left, body, right}}));
}

MorTerm MorTerm::then(const MorTerm& next) const {
  return MorTerm(std::make_shared<const MorNode>(MorNode{MorCompose{*this, next}}));
}

int MorNormal::target_width() const {
  return slices.empty() ? source_width : slices.back().target_width();
}

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

MorType check(const MorTerm& t, const std::string& path) {
  return std::visit(
      overloaded{
          [](const MorIdentity& n) { return MorType{n.object, n.object}; },
          [](const MorGenerator& n) { return MorType{gen_source(n.gen), gen_target(n.gen)}; },
          [&](const MorWhisker& n) {
            MorType inner = check(n.body, path + ".body");
            int pad = n.left + n.right;
            return MorType{Object{inner.source.width + pad}, Object{inner.target.width + pad}};
          },
          [&](const MorCompose& n) {
            MorType a = check(n.first, path + ".first");
            MorType b = check(n.second, path + ".second");
            if (a.target != b.source)
              throw WidthMismatchError(path + ".second", a.target.width, b.source.width);
            return MorType{a.source, b.target};
          },
      },
      t.node().v);
}

void emit(const MorTerm& t, int left, int right, std::vector<Slice>& out) {
  std::visit(overloaded{
                 [](const MorIdentity&) {},
                 [&](const MorGenerator& n) { out.push_back(Slice{left, n.gen, right}); },
                 [&](const MorWhisker& n) { emit(n.body, left + n.left, right + n.right, out); },
                 [&](const MorCompose& n) {
                   emit(n.first, left, right, out);
                   emit(n.second, left, right, out);
                 },
             },
             t.node().v);
}

}  // namespace

MorType typecheck(const MorTerm& term) { return check(term, "term"); }

MorNormal normalize(const MorTerm& term) {
  MorType ty = typecheck(term);
  MorNormal out{ty.source.width, {}};
  emit(term, 0, 0, out.slices);
  return out;
}

MorTerm term_of(const MorNormal& normal) {
  MorTerm acc = MorTerm::identity(normal.source_width);
  if (normal.slices.empty()) return acc;
  bool first = true;
  for (const Slice& s : normal.slices) {
    MorTerm layer = MorTerm::whisker(s.left, MorTerm::generator(s.gen), s.right);
    acc = first ? layer : acc.then(layer);
    first = false;
  }
  return acc;
}

MorTerm dual(const MorTerm& term) {
  return std::visit(
      overloaded{
          [&](const MorIdentity&) { return term; },
          [](const MorGenerator& n) { return MorTerm::generator(gen_dual(n.gen)); },
          [](const MorWhisker& n) { return MorTerm::whisker(n.left, dual(n.body), n.right); },
          [](const MorCompose& n) { return dual(n.second).then(dual(n.first)); },
      },
      term.node().v);
}

MorNormal dual(const MorNormal& normal) {
  MorNormal out{normal.target_width(), {}};
  out.slices.reserve(normal.slices.size());
  for (auto it = normal.slices.rbegin(); it != normal.slices.rend(); ++it)
    out.slices.push_back(it->dualized());
  return out;
}

bool equal(const MorTerm& a, const MorTerm& b) { return normalize(a) == normalize(b); }

std::string to_string(const MorNormal& normal) {
  std::string out = "[" + std::to_string(normal.source_width) + "->" +
                    std::to_string(normal.target_width()) + ":";
  for (const Slice& s : normal.slices)
    out += " (" + std::to_string(s.left) + " " + gen_name(s.gen) + " " + std::to_string(s.right) +
           ")";
  out += "]";
  return out;
}

MorTerm braiding(int left_width, int right_width) {
  const int m = left_width, n = right_width;
  if (m == 0 || n == 0) return MorTerm::identity(m + n);
  MorTerm acc = MorTerm::identity(m + n);
  bool first = true;
  // Row i moves the (m-i)-th strand of the left block across the whole right
  // block. Row 0 is the rightmost strand of the block, so earlier strands
  // still sit to its left while later rows pass underneath the settled ones.
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      MorTerm crossing =
          MorTerm::whisker(m - 1 - i + j, MorTerm::generator(MorGen::pos), n - 1 - j + i);
      acc = first ? crossing : acc.then(crossing);
      first = false;
    }
  }
  return acc;
}

MorTerm object_unit(int width) {
  if (width == 0) return MorTerm::identity(0);
  if (width == 1) return MorTerm::generator(MorGen::cap);
  return MorTerm::generator(MorGen::cap).then(MorTerm::whisker(1, object_unit(width - 1), 1));
}

MorTerm object_counit(int width) { return dual(object_unit(width)); }

MorTerm balancing(int width) {
  if (width == 0) return MorTerm::identity(0);
  return MorTerm::whisker(0, object_unit(width), width)
      .then(MorTerm::whisker(width, braiding(width, width), 0))
      .then(MorTerm::whisker(0, object_counit(width), width));
}

}  // namespace t2
