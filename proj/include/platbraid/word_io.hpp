#pragma once

#include <string>

#include "platbraid/braid.hpp"

namespace platbraid {

// One braid file: a header line fixing the setting and the intended closure,
// followed by the word in one-letter tokens (s = sigma, l = alpha, a/b =
// surface loops), each optionally with an integer exponent ^k.
struct BraidFile {
  Closure closure = Closure::Standard;
  BraidWord braid;

  bool operator==(const BraidFile&) const = default;
};

// Grammar, bit-exact:
//   line 1: setting=<classical|handlebody|surface> genus=<int> strands=<int>
//           closure=<plat|standard>
//   rest:   whitespace separated tokens s<i> a<i> b<i> l<i>, optional ^<k>,
//           k a nonzero integer expanded to |k| generators of sign k.
//   '#' starts a comment to end of line. Blank lines allowed.
BraidFile parse(const std::string& text);

// Canonical form: header, then a single body line with runs of equal
// generators collapsed to ^k. parse(serialize(f)) == f.
std::string serialize(const BraidFile& f);

// Deterministic fixed-width picture: one closure row at top and bottom (plat
// caps/cups or standard return arcs), one row per generator.
std::string render_ascii(const BraidFile& f);

}  // namespace platbraid
