#ifndef HCONV_CORPUS_HPP
#define HCONV_CORPUS_HPP

#include <string>

#include "hconv/classes.hpp"
#include "hconv/oracle.hpp"
#include "hconv/random.hpp"

// Seeded generators of test functions with known class membership. Bump
// kCorpusVersion whenever a generator changes the sequence it draws.

namespace hconv::corpus {

inline constexpr int kCorpusVersion = 1;

struct SmoothCase {
  std::string family;
  RealFn f;
  RealFn f_prime;
  double a;
  double b;
};

/// Polynomial, power or exponential function on a random interval.
SmoothCase random_smooth(Rng& rng);

/// Class of |f'|^q a witness is built for.
enum class WitnessClass {
  Convex,           // h = t
  SConvex,          // h = t^s
  PFunction,        // h = 1
  Concave,          // h-concave, h = t
  ConcaveSquared,   // h-concave, h = t^2 (custom modulus)
};

std::string to_string(WitnessClass c);

/// A TestFunction whose |f'|^q provably lies in the requested class, with
/// the matching certificate attached. `s` is used only for SConvex.
TestFunction random_witness(Rng& rng, WitnessClass cls, double q, double s = 1.0);

/// The custom modulus t^2, under which every nonnegative concave function is
/// h-concave.
HModulus squared_modulus();

struct HadamardCase {
  std::string family;
  RealFn f;
  double a;
  double b;
  HModulus h;
};

/// A function f in the class belonging to `variant` (s for SConvex). For
/// HConvex the modulus is drawn from t, t^s and 1.
HadamardCase random_hadamard(Rng& rng, HadamardVariant variant, double s = 0.5);

}  // namespace hconv::corpus

#endif  // HCONV_CORPUS_HPP
