#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace logdiv {

// Exact rational scalar used throughout. GMP keeps every computation
// arbitrary-precision; no floating point anywhere in the engine.
using Rat = mpq_class;
using Int = mpz_class;

inline int sign(const Rat &q) { return sgn(q); }

inline bool is_integer(const Rat &q) { return q.get_den() == 1; }

// Canonical "p/q" (or "p") rendering, matching the expression grammar.
std::string rat_to_string(const Rat &q);

// lcm of denominators, gcd of numerators: used to rescale vectors to
// primitive integer form.
Int denominator_lcm(const std::vector<Rat> &v);
Int numerator_gcd(const std::vector<Rat> &v);

// Scales a nonzero vector so entries are coprime integers and the first
// nonzero entry is positive. Identity on the zero vector.
void make_primitive(std::vector<Rat> &v);

} // namespace logdiv
