#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>

namespace platbraid {

// Laurent polynomial in one variable A with exact int64 coefficients.
class Laurent {
 public:
  Laurent() = default;
  static Laurent zero() { return Laurent(); }
  static Laurent one() { return monomial(1, 0); }
  static Laurent monomial(long long coeff, int degree) {
    Laurent p;
    if (coeff != 0) p.c_[degree] = coeff;
    return p;
  }
  // loop value d = -A^2 - A^-2
  static Laurent loop_factor() {
    Laurent p;
    p.c_[2] = -1;
    p.c_[-2] = -1;
    return p;
  }

  bool is_zero() const { return c_.empty(); }

  Laurent& operator+=(const Laurent& o) {
    for (auto& [d, c] : o.c_) {
      auto it = c_.find(d);
      if (it == c_.end()) {
        c_[d] = c;
      } else {
        it->second += c;
        if (it->second == 0) c_.erase(it);
      }
    }
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (auto& [da, ca] : a.c_)
      for (auto& [db, cb] : b.c_) {
        long long& slot = r.c_[da + db];
        slot += ca * cb;
      }
    for (auto it = r.c_.begin(); it != r.c_.end();)
      it = it->second == 0 ? r.c_.erase(it) : std::next(it);
    return r;
  }

  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  // multiply by coeff * A^degree
  void mul_monomial(long long coeff, int degree) {
    std::map<int, long long> next;
    for (auto& [d, c] : c_) next[d + degree] = c * coeff;
    c_ = std::move(next);
  }

  // (-A^3)^k
  static Laurent neg_a_cubed_pow(int k) {
    Laurent p = one();
    p.mul_monomial((k % 2 == 0) ? 1 : -1, 3 * k);
    return p;
  }

  Laurent pow(int k) const {
    Laurent r = one();
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }

  bool operator==(const Laurent& o) const { return c_ == o.c_; }
  bool operator<(const Laurent& o) const { return c_ < o.c_; }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [d, c] : c_) {
      if (!first) out << (c > 0 ? " + " : " - ");
      else if (c < 0) out << "-";
      first = false;
      long long a = c > 0 ? c : -c;
      if (a != 1 || d == 0) out << a;
      if (d != 0) {
        if (a != 1) out << "*";
        out << "A";
        if (d != 1) out << "^" << d;
      }
    }
    return out.str();
  }

 private:
  std::map<int, long long> c_;  // degree -> coefficient, no zero entries
};

}  // namespace platbraid
