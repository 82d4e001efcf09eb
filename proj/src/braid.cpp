#include "platbraid/braid.hpp"

#include <algorithm>
#include <numeric>

namespace platbraid {

static void check_generator(const Setting& s, const Generator& g, size_t pos) {
  if (g.exponent != 1 && g.exponent != -1)
    throw BraidError(BraidError::Kind::InternalInconsistency,
                     "generator exponent must be +-1 at position " + std::to_string(pos));
  switch (g.kind) {
    case GenKind::Sigma:
      if (g.index < 1 || g.index > s.strands - 1)
        throw BraidError(BraidError::Kind::IndexOutOfRange,
                         "sigma index " + std::to_string(g.index) + " out of range at position " +
                             std::to_string(pos));
      break;
    case GenKind::LoopAlpha:
      if (s.family != Family::Handlebody)
        throw BraidError(BraidError::Kind::WrongFamilyGenerator,
                         "alpha generator outside handlebody word at position " + std::to_string(pos));
      if (g.index < 1 || g.index > s.genus)
        throw BraidError(BraidError::Kind::IndexOutOfRange,
                         "alpha index " + std::to_string(g.index) + " out of range at position " +
                             std::to_string(pos));
      break;
    case GenKind::LoopA:
    case GenKind::LoopB:
      if (s.family != Family::Surface)
        throw BraidError(BraidError::Kind::WrongFamilyGenerator,
                         "surface loop generator outside surface word at position " + std::to_string(pos));
      if (g.index < 1 || g.index > s.genus)
        throw BraidError(BraidError::Kind::IndexOutOfRange,
                         "loop index " + std::to_string(g.index) + " out of range at position " +
                             std::to_string(pos));
      break;
  }
}

void validate(const BraidWord& w) {
  if (w.setting.strands < 1)
    throw BraidError(BraidError::Kind::IndexOutOfRange, "strand count must be positive");
  if (w.setting.genus < 0)
    throw BraidError(BraidError::Kind::IndexOutOfRange, "genus must be non-negative");
  if (w.setting.family == Family::Classical && w.setting.genus != 0)
    throw BraidError(BraidError::Kind::WrongFamilyGenerator, "classical setting requires genus 0");
  for (size_t i = 0; i < w.word.size(); ++i) check_generator(w.setting, w.word[i], i);
}

static bool inverse_pair(const Generator& a, const Generator& b) {
  return a.kind == b.kind && a.index == b.index && a.exponent == -b.exponent;
}

BraidWord free_reduce(BraidWord w) {
  std::vector<Generator> out;
  out.reserve(w.word.size());
  for (const Generator& g : w.word) {
    if (!out.empty() && inverse_pair(out.back(), g))
      out.pop_back();
    else
      out.push_back(g);
  }
  w.word = std::move(out);
  return w;
}

Permutation permutation(const BraidWord& w) {
  Permutation img(w.setting.strands);
  std::iota(img.begin(), img.end(), 1);
  // img maps top position -> current position; compose transpositions in order.
  std::vector<int> pos_of(w.setting.strands + 1);
  for (int p = 1; p <= w.setting.strands; ++p) pos_of[p] = p;
  std::vector<int> at(w.setting.strands + 1);
  for (int p = 1; p <= w.setting.strands; ++p) at[p] = p;
  for (const Generator& g : w.word) {
    if (g.kind != GenKind::Sigma) continue;
    int a = at[g.index], b = at[g.index + 1];
    std::swap(at[g.index], at[g.index + 1]);
    std::swap(pos_of[a], pos_of[b]);
  }
  for (int p = 1; p <= w.setting.strands; ++p) img[p - 1] = pos_of[p];
  return img;
}

bool is_identity(const Permutation& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != int(i) + 1) return false;
  return true;
}

BraidWord alpha_to_a(const BraidWord& w) {
  validate(w);
  if (w.setting.family != Family::Handlebody)
    throw BraidError(BraidError::Kind::WrongFamilyGenerator, "alpha_to_a expects a handlebody word");
  BraidWord out;
  out.setting = w.setting;
  out.setting.family = Family::Surface;
  const int g = w.setting.genus;
  for (const Generator& gen : w.word) {
    if (gen.kind == GenKind::Sigma) {
      out.word.push_back(gen);
      continue;
    }
    // alpha_i^k = a_g^-1 ... a_{i+1}^-1 a_i^-k a_{i+1} ... a_g
    const int i = gen.index;
    for (int j = g; j > i; --j) out.word.push_back(loop_a(j, -1));
    out.word.push_back(loop_a(i, -gen.exponent));
    for (int j = i + 1; j <= g; ++j) out.word.push_back(loop_a(j, 1));
  }
  return out;
}

std::string to_string(const Generator& g) {
  const char* t = "s";
  switch (g.kind) {
    case GenKind::Sigma: t = "s"; break;
    case GenKind::LoopAlpha: t = "l"; break;
    case GenKind::LoopA: t = "a"; break;
    case GenKind::LoopB: t = "b"; break;
  }
  std::string s = t + std::to_string(g.index);
  if (g.exponent != 1) s += "^" + std::to_string(g.exponent);
  return s;
}

std::string to_string(const BraidWord& w) {
  std::string s;
  for (size_t i = 0; i < w.word.size(); ++i) {
    if (i) s += ' ';
    s += to_string(w.word[i]);
  }
  return s;
}

}  // namespace platbraid
