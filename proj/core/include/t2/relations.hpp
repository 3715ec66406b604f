#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "t2/morphisms.hpp"
#include "t2/objects.hpp"
#include "t2/two_terms.hpp"

namespace t2 {

// Kinds of argument a relation schema accepts.
enum class ArgKind { object, morphism, two_morphism };

const char* kind_name(ArgKind kind);

using RelationArg = std::variant<Object, MorTerm, TwoTerm>;

ArgKind kind_of(const RelationArg& arg);

// An equation between two parallel 2-cells, produced by filling in a schema's
// arguments. Sides are kept as terms; rewriting normalizes them on demand.
struct RelationInstance {
  std::string schema;
  std::vector<RelationArg> args;
  TwoTerm lhs;
  TwoTerm rhs;
};

// A named family of equations indexed by typed arguments.
struct RelationSchema {
  std::string name;
  std::vector<ArgKind> arg_kinds;
  std::string description;
  std::function<RelationInstance(std::vector<RelationArg>)> build;
};

// The built-in equations, in the fixed order rewriting and search use. The
// catalog is an open registry keyed by name: the engines take instances, not
// names, so extending it never touches them.
const std::vector<RelationSchema>& catalog();

// Schema by name, or nullptr when absent.
const RelationSchema* find_schema(const std::string& name);

// Appends a schema to the registry behind catalog(). Names must be fresh.
// Meant for startup-time extension (for example from a catalog file); the
// registry is not guarded against concurrent mutation.
void register_schema(RelationSchema schema);

// Builds an instance after checking argument kinds. KindMismatchError on a
// wrong kind or arity, Ill2TypedError when arguments do not fit the schema's
// composites. Every instance is verified to have parallel sides before it is
// returned; a failure there is a catalog bug and raises NotParallelError.
RelationInstance instantiate(const std::string& schema, std::vector<RelationArg> args);

}  // namespace t2
