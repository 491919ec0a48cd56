#include "torex/sturm.hpp"

namespace torex {

namespace {

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int sign_changes(const std::vector<UniPoly>& seq, const Rational& x) {
  int changes = 0, prev = 0;
  for (const auto& p : seq) {
    int s = sign_of(p(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  UniPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    const UniPoly& a = seq[seq.size() - 2];
    const UniPoly& b = seq[seq.size() - 1];
    UniPoly r = a.rem(b);
    if (r.is_zero()) break;
    seq.push_back(r * Rational(-1));
    if (seq.back().degree() == 0) break;
  }
  return seq;
}

int count_roots(const std::vector<UniPoly>& seq, const Rational& a, const Rational& b) {
  if (seq.empty()) return 0;
  return sign_changes(seq, a) - sign_changes(seq, b);
}

int count_roots(const UniPoly& p, const Rational& a, const Rational& b) {
  return count_roots(sturm_sequence(p), a, b);
}

std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rational& a, const Rational& b) {
  std::vector<RootInterval> out;
  auto seq = sturm_sequence(p);
  int total = count_roots(seq, a, b);
  if (total == 0) return out;
  struct Item {
    Rational lo, hi;
    int n;
  };
  std::vector<Item> stack{{a, b, total}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.n == 0) continue;
    if (it.n == 1) {
      out.push_back({it.lo, it.hi});
      continue;
    }
    Rational mid = (it.lo + it.hi) / 2;
    int left = count_roots(seq, it.lo, mid);
    stack.push_back({it.lo, mid, left});
    stack.push_back({mid, it.hi, it.n - left});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

RootInterval refine_root(const UniPoly& p, RootInterval iv, const Rational& width) {
  auto seq = sturm_sequence(p);
  while (iv.hi - iv.lo > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    if (count_roots(seq, iv.lo, mid) >= 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
  return iv;
}

bool positive_on_open_interval(const UniPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) return false;
  // Sample sign at the midpoint, then certify there is no root strictly inside.
  Rational mid = (a + b) / 2;
  Rational v = p(mid);
  if (v < 0) return false;
  if (v == 0) return false;
  // (a, b) root-free <=> count over (a, b] minus a possible root at b itself.
  int n = count_roots(p, a, b);
  if (n == 0) return true;
  if (p(b) == 0 && n == 1) return true;
  return false;
}

}  // namespace torex
