#include "t2/relations.hpp"

#include <utility>

#include "t2/errors.hpp"
#include "t2/movies.hpp"

namespace t2 {

const char* kind_name(ArgKind kind) {
  switch (kind) {
    case ArgKind::object: return "object";
    case ArgKind::morphism: return "morphism";
    case ArgKind::two_morphism: return "2-morphism";
  }
  return "?";
}

ArgKind kind_of(const RelationArg& arg) {
  if (std::holds_alternative<Object>(arg)) return ArgKind::object;
  if (std::holds_alternative<MorTerm>(arg)) return ArgKind::morphism;
  return ArgKind::two_morphism;
}

namespace {

int object_arg(const std::vector<RelationArg>& args, int i) {
  return std::get<Object>(args[i]).width;
}

MorTerm mor_arg(const std::vector<RelationArg>& args, int i) {
  return std::get<MorTerm>(args[i]);
}

TwoTerm two_arg(const std::vector<RelationArg>& args, int i) {
  return std::get<TwoTerm>(args[i]);
}

TwoTerm id2(const MorNormal& normal) {
  return TwoTerm::identity(term_of(normal));
}

// gamma then its reversal, against the identity on gamma's source; the -op
// twin reverses first, which lands on the target instead. Both are needed:
// reversing one equation reproduces that same equation, not its twin.
RelationInstance cancellation(std::string schema, std::vector<RelationArg> args,
                              const TwoTerm& gamma, bool reversed_first) {
  TwoType type = typecheck(gamma);
  TwoTerm lhs = reversed_first ? TwoTerm::vertical(TwoTerm::dual(gamma), gamma)
                               : TwoTerm::vertical(gamma, TwoTerm::dual(gamma));
  TwoTerm rhs = id2(reversed_first ? type.target : type.source);
  return {std::move(schema), std::move(args), std::move(lhs), std::move(rhs)};
}

using CellBuilder = std::function<TwoTerm(const std::vector<RelationArg>&)>;

void add_cancellation_pair(std::vector<RelationSchema>& out, const std::string& name,
                           std::vector<ArgKind> kinds, const std::string& what,
                           CellBuilder cell) {
  out.push_back({name, kinds,
                 "Cancelling " + what + " against its reversal leaves the identity on its source.",
                 [name, cell](std::vector<RelationArg> args) {
                   TwoTerm gamma = cell(args);
                   return cancellation(name, std::move(args), gamma, false);
                 }});
  std::string op = name + "-op";
  out.push_back({op, std::move(kinds),
                 "Cancelling the reversal of " + what + " against it leaves the identity on its target.",
                 [op, cell](std::vector<RelationArg> args) {
                   TwoTerm gamma = cell(args);
                   return cancellation(op, std::move(args), gamma, true);
                 }});
}

TwoTerm vcomp(std::initializer_list<TwoTerm> parts) {
  const TwoTerm* it = parts.begin();
  TwoTerm acc = *it++;
  for (; it != parts.end(); ++it) acc = TwoTerm::vertical(acc, *it);
  return acc;
}

// Both movies that trade a positive kink on a bent strand for a negative
// crossing behind the bend, built at the single strand. The crossing block
// comparison cells degenerate to identities because both block readings
// expand to the same crossing lattice.
RelationInstance writhing_equation() {
  MorTerm cap = MorTerm::generator(MorGen::cap);
  MorTerm cup = MorTerm::generator(MorGen::cup);
  MorTerm pos = MorTerm::generator(MorGen::pos);
  MorTerm neg = MorTerm::generator(MorGen::neg);
  MorTerm birth_cross = cap.then(pos);
  MorTerm cross_die = pos.then(cup);

  // Kink in front: cusp, then the kink, then slide it through the bend with
  // the braiding's mate and cancel the crossing pair against the unit.
  TwoTerm p1 = adjoint(TwoTerm::triangulator());
  TwoTerm p2 = TwoTerm::horizontal(TwoTerm::whisker(1, TwoTerm::writhing(), 0),
                                   TwoTerm::identity(MorTerm::whisker(0, cup, 1)));
  TwoTerm p3 = TwoTerm::horizontal(TwoTerm::identity(MorTerm::whisker(1, birth_cross, 0)),
                                   adjoint(TwoTerm::braid_zf(cap)));
  TwoTerm p4 = TwoTerm::horizontal(
      TwoTerm::horizontal(TwoTerm::identity(MorTerm::whisker(1, birth_cross, 0)),
                          TwoTerm::identity(dual(braiding(1, 2)))),
      TwoTerm::identity(MorTerm::whisker(1, cup, 0)));
  TwoTerm p5 = TwoTerm::horizontal(
      TwoTerm::horizontal(
          TwoTerm::whisker(1,
                           TwoTerm::horizontal(TwoTerm::identity(cap),
                                               TwoTerm::dual(TwoTerm::unit(pos))),
                           0),
          TwoTerm::identity(MorTerm::whisker(0, neg, 1))),
      TwoTerm::identity(MorTerm::whisker(1, cup, 0)));
  TwoTerm lhs = vcomp({p1, p2, p3, p4, p5});

  // Kink behind: mirrored cusp, grow the crossing pair from the unit, cancel
  // the kink against the writhing's mate, pull the rest through the bend.
  TwoTerm q1 = TwoTerm::dual(TwoTerm::triangulator());
  TwoTerm q2 = TwoTerm::horizontal(
      TwoTerm::identity(MorTerm::whisker(0, cap, 1)),
      TwoTerm::whisker(1, TwoTerm::horizontal(TwoTerm::unit(pos), TwoTerm::identity(cup)), 0));
  TwoTerm q3 = TwoTerm::horizontal(
      TwoTerm::identity(MorTerm::whisker(0, cap, 1)),
      TwoTerm::whisker(1,
                       TwoTerm::horizontal(TwoTerm::identity(pos), adjoint(TwoTerm::writhing())),
                       0));
  TwoTerm q4 = TwoTerm::horizontal(TwoTerm::dual(adjoint(TwoTerm::braid_fz(cup))),
                                   TwoTerm::identity(MorTerm::whisker(1, cross_die, 0)));
  TwoTerm q5 = TwoTerm::horizontal(
      TwoTerm::horizontal(TwoTerm::identity(MorTerm::whisker(1, cap, 0)),
                          TwoTerm::identity(dual(braiding(2, 1)))),
      TwoTerm::identity(MorTerm::whisker(1, cross_die, 0)));
  TwoTerm q6 = TwoTerm::horizontal(
      TwoTerm::horizontal(TwoTerm::identity(MorTerm::whisker(1, cap, 0)),
                          TwoTerm::identity(MorTerm::whisker(0, neg, 1))),
      TwoTerm::whisker(1, TwoTerm::horizontal(counit(pos), TwoTerm::identity(cup)), 0));
  TwoTerm rhs = vcomp({q1, q2, q3, q4, q5, q6});

  return {"writhing-equation", {}, lhs, rhs};
}

std::vector<RelationSchema> build_catalog() {
  std::vector<RelationSchema> out;

  add_cancellation_pair(out, "tensorator-unitary", {ArgKind::morphism, ArgKind::morphism},
                        "the tensorator", [](const std::vector<RelationArg>& args) {
                          return TwoTerm::tensorator(mor_arg(args, 0), mor_arg(args, 1));
                        });
  add_cancellation_pair(out, "T-unitary", {ArgKind::object}, "the triangulator",
                        [](const std::vector<RelationArg>& args) {
                          return triangulator_of(object_arg(args, 0));
                        });
  add_cancellation_pair(out, "W-unitary", {}, "the writhing",
                        [](const std::vector<RelationArg>&) { return TwoTerm::writhing(); });
  add_cancellation_pair(out, "iR-unitary", {ArgKind::object, ArgKind::object},
                        "the unit on a block crossing", [](const std::vector<RelationArg>& args) {
                          return TwoTerm::unit(braiding(object_arg(args, 0), object_arg(args, 1)));
                        });
  add_cancellation_pair(out, "eR-unitary", {ArgKind::object, ArgKind::object},
                        "the counit on a block crossing", [](const std::vector<RelationArg>& args) {
                          return counit(braiding(object_arg(args, 0), object_arg(args, 1)));
                        });
  add_cancellation_pair(out, "RZf-unitary", {ArgKind::morphism},
                        "the strand-over-morphism braiding cell",
                        [](const std::vector<RelationArg>& args) {
                          return TwoTerm::braid_zf(mor_arg(args, 0));
                        });
  add_cancellation_pair(out, "RfZ-unitary", {ArgKind::morphism},
                        "the morphism-over-strand braiding cell",
                        [](const std::vector<RelationArg>& args) {
                          return TwoTerm::braid_fz(mor_arg(args, 0));
                        });
  // The cell comparing the two block readings of a crossing. Both readings
  // expand to the same lattice here, so the cell is an identity and the
  // equation is a degenerate cancellation; it stays in the registry so the
  // name is instantiable.
  add_cancellation_pair(out, "Rtilde-unitary",
                        {ArgKind::object, ArgKind::object, ArgKind::object},
                        "the block-compatibility cell",
                        [](const std::vector<RelationArg>& args) {
                          return TwoTerm::identity(
                              braiding(object_arg(args, 0), object_arg(args, 1) + object_arg(args, 2)));
                        });

  out.push_back(
      {"zigzag-2cell", {ArgKind::morphism},
       "Bending a morphism around its unit and counit straightens back to the morphism.",
       [](std::vector<RelationArg> args) {
         MorTerm f = mor_arg(args, 0);
         TwoTerm lhs = TwoTerm::vertical(
             TwoTerm::horizontal(TwoTerm::unit(f), TwoTerm::identity(f)),
             TwoTerm::horizontal(TwoTerm::identity(f), counit(f)));
         return RelationInstance{"zigzag-2cell", std::move(args), std::move(lhs),
                                 TwoTerm::identity(f)};
       }});
  out.push_back(
      {"zigzag-2cell-dual", {ArgKind::morphism},
       "The mirror zigzag straightens to the dual morphism.",
       [](std::vector<RelationArg> args) {
         MorTerm f = mor_arg(args, 0);
         MorTerm fd = dual(f);
         TwoTerm lhs = TwoTerm::vertical(
             TwoTerm::horizontal(TwoTerm::identity(fd), TwoTerm::unit(f)),
             TwoTerm::horizontal(counit(f), TwoTerm::identity(fd)));
         return RelationInstance{"zigzag-2cell-dual", std::move(args), std::move(lhs),
                                 TwoTerm::identity(fd)};
       }});
  out.push_back({"adjoint-dual-commute", {ArgKind::two_morphism},
                 "Reversing a 2-cell commutes with taking its mate.",
                 [](std::vector<RelationArg> args) {
                   TwoTerm alpha = two_arg(args, 0);
                   TwoTerm lhs = TwoTerm::dual(adjoint(alpha));
                   TwoTerm rhs = adjoint(TwoTerm::dual(alpha));
                   return RelationInstance{"adjoint-dual-commute", std::move(args), std::move(lhs),
                                           std::move(rhs)};
                 }});
  out.push_back(
      {"triangulator-equation", {ArgKind::object},
       "The two cusps on a block's unit cancel through the tensorator, leaving the unit alone.",
       [](std::vector<RelationArg> args) {
         int a = object_arg(args, 0);
         MorTerm i_a = object_unit(a);
         MorTerm e_a = object_counit(a);
         TwoTerm t = triangulator_of(a);
         TwoTerm piece1 = TwoTerm::horizontal(TwoTerm::identity(i_a),
                                              TwoTerm::whisker(a, adjoint(t), 0));
         TwoTerm piece2 = TwoTerm::horizontal(TwoTerm::dual(TwoTerm::tensorator(i_a, i_a)),
                                              TwoTerm::identity(MorTerm::whisker(a, e_a, a)));
         TwoTerm piece3 = TwoTerm::horizontal(TwoTerm::identity(i_a), TwoTerm::whisker(0, t, a));
         TwoTerm lhs = vcomp({piece1, piece2, piece3});
         return RelationInstance{"triangulator-equation", std::move(args), std::move(lhs),
                                 TwoTerm::identity(i_a)};
       }});
  out.push_back({"writhing-equation",
                 {},
                 "Trading a positive kink on a bent strand for a negative crossing behind the "
                 "bend: the front and back movies agree.",
                 [](std::vector<RelationArg>) { return writhing_equation(); }});
  out.push_back(
      {"interchange", {ArgKind::two_morphism, ArgKind::two_morphism},
       "Two horizontally adjacent cells can run in either vertical order.",
       [](std::vector<RelationArg> args) {
         TwoTerm alpha = two_arg(args, 0);
         TwoTerm beta = two_arg(args, 1);
         TwoType ta = typecheck(alpha);
         TwoType tb = typecheck(beta);
         TwoTerm lhs = TwoTerm::vertical(
             TwoTerm::horizontal(alpha, id2(tb.source)),
             TwoTerm::horizontal(id2(ta.target), beta));
         TwoTerm rhs = TwoTerm::vertical(
             TwoTerm::horizontal(id2(ta.source), beta),
             TwoTerm::horizontal(alpha, id2(tb.target)));
         return RelationInstance{"interchange", std::move(args), std::move(lhs), std::move(rhs)};
       }});
  out.push_back(
      {"hcomp-expansion-order", {ArgKind::two_morphism, ArgKind::two_morphism},
       "A horizontal composite equals its right-then-left expansion; left-then-right is the "
       "normal form.",
       [](std::vector<RelationArg> args) {
         TwoTerm alpha = two_arg(args, 0);
         TwoTerm beta = two_arg(args, 1);
         TwoType ta = typecheck(alpha);
         TwoType tb = typecheck(beta);
         TwoTerm lhs = TwoTerm::horizontal(alpha, beta);
         TwoTerm rhs = TwoTerm::vertical(
             TwoTerm::horizontal(id2(ta.source), beta),
             TwoTerm::horizontal(alpha, id2(tb.target)));
         return RelationInstance{"hcomp-expansion-order", std::move(args), std::move(lhs),
                                 std::move(rhs)};
       }});

  return out;
}

}  // namespace

namespace {

std::vector<RelationSchema>& mutable_catalog() {
  static std::vector<RelationSchema> schemas = build_catalog();
  return schemas;
}

}  // namespace

const std::vector<RelationSchema>& catalog() { return mutable_catalog(); }

void register_schema(RelationSchema schema) {
  if (schema.name.empty()) throw Error("relation schema needs a name");
  if (!schema.build) throw Error("relation schema " + schema.name + " needs a build function");
  if (find_schema(schema.name) != nullptr)
    throw Error("relation schema " + schema.name + " is already registered");
  mutable_catalog().push_back(std::move(schema));
}

const RelationSchema* find_schema(const std::string& name) {
  for (const RelationSchema& schema : catalog())
    if (schema.name == name) return &schema;
  return nullptr;
}

RelationInstance instantiate(const std::string& schema, std::vector<RelationArg> args) {
  const RelationSchema* found = find_schema(schema);
  if (found == nullptr) throw Error("no relation schema named " + schema);
  if (args.size() != found->arg_kinds.size())
    throw KindMismatchError(schema, static_cast<int>(found->arg_kinds.size()),
                            "exactly " + std::to_string(found->arg_kinds.size()) + " arguments");
  for (size_t i = 0; i < args.size(); ++i)
    if (kind_of(args[i]) != found->arg_kinds[i])
      throw KindMismatchError(schema, static_cast<int>(i), kind_name(found->arg_kinds[i]));
  RelationInstance instance = found->build(std::move(args));
  TwoType lhs = typecheck(instance.lhs);
  TwoType rhs = typecheck(instance.rhs);
  if (lhs.source != rhs.source || lhs.target != rhs.target)
    throw NotParallelError("schema " + schema + " produced sides " + to_string(lhs.source) +
                           " => " + to_string(lhs.target) + " and " + to_string(rhs.source) +
                           " => " + to_string(rhs.target));
  return instance;
}

}  // namespace t2
