#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace platbraid {

enum class Family { Classical, Handlebody, Surface };

// Generator kinds: Sigma crossings act on adjacent moving strands, loop
// generators wind the first moving strand around a hole of the ambient space.
enum class GenKind { Sigma, LoopAlpha, LoopA, LoopB };

struct Generator {
  GenKind kind = GenKind::Sigma;
  int index = 1;     // Sigma: 1..strands-1, loops: 1..genus
  int exponent = 1;  // +1 or -1, powers are expanded at parse time

  bool operator==(const Generator&) const = default;
};

inline Generator sigma(int i, int e = 1) { return {GenKind::Sigma, i, e}; }
inline Generator loop_alpha(int i, int e = 1) { return {GenKind::LoopAlpha, i, e}; }
inline Generator loop_a(int i, int e = 1) { return {GenKind::LoopA, i, e}; }
inline Generator loop_b(int i, int e = 1) { return {GenKind::LoopB, i, e}; }

struct Setting {
  Family family = Family::Classical;
  int genus = 0;    // 0 for classical
  int strands = 1;  // moving strands only; fixed strands are implicit

  bool operator==(const Setting&) const = default;
};

enum class Closure { Plat, Standard };

class BraidError : public std::runtime_error {
 public:
  enum class Kind {
    IndexOutOfRange,
    WrongFamilyGenerator,
    OddStrandsForPlat,
    WrongFamily,
    CapExceeded,
    InternalInconsistency,
    Syntax,
  };
  BraidError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

struct BraidWord {
  Setting setting;
  std::vector<Generator> word;

  bool operator==(const BraidWord&) const = default;
};

// images[p-1] = image of top position p, 1-based values
using Permutation = std::vector<int>;

// Throws BraidError if any generator is invalid for the setting.
void validate(const BraidWord& w);

// Cancels adjacent inverse pairs until none remain. Group element unchanged.
BraidWord free_reduce(BraidWord w);

// Underlying permutation: sigma_i acts as the transposition (i i+1), loop
// generators fix all moving-strand positions.
Permutation permutation(const BraidWord& w);

bool is_identity(const Permutation& p);

// Converts a handlebody word to the surface a_i convention via
//   alpha_i^k = a_g^-1 ... a_{i+1}^-1 a_i^-k a_{i+1} ... a_g,  k = +-1.
// Sigma generators pass through.
BraidWord alpha_to_a(const BraidWord& w);

std::string to_string(const Generator& g);
std::string to_string(const BraidWord& w);

}  // namespace platbraid
