#pragma once

#include <compare>
#include <string>

namespace t2 {

// An object of the calculus: a tensor power of the single generating strand
// type Z. Width 0 is the tensor unit I. The generator is self dual, so an
// object is nothing more than a strand count.
struct Object {
  int width = 0;
  auto operator<=>(const Object&) const = default;
};

inline constexpr Object unit_object{0};
inline constexpr Object strand{1};

constexpr Object tensor(Object a, Object b) { return Object{a.width + b.width}; }
constexpr Object dual(Object a) { return a; }

// "I", "Z", "Z^2", ...
std::string to_string(Object a);

}  // namespace t2
