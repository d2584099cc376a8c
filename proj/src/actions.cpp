#include "descentlab/actions.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <stdexcept>

namespace descentlab {

namespace {

constexpr int kInfinity = std::numeric_limits<int>::max();

void check_letter(const Permutation& p, int x) {
  if (x < 1 || x > p.size()) throw std::invalid_argument("letter " + std::to_string(x) + " out of range");
}

void check_orbit_size(int n) {
  if (n > kMaxOrbitN) throw std::length_error("orbit enumeration too large");
}

}  // namespace

XFactorization x_factorize(const Permutation& p, int x) {
  check_letter(p, x);
  const auto& a = p.letters();
  auto pos = static_cast<std::size_t>(std::find(a.begin(), a.end(), x) - a.begin());
  std::size_t lo = pos;
  while (lo > 0 && a[lo - 1] < x) --lo;
  std::size_t hi = pos + 1;
  while (hi < a.size() && a[hi] < x) ++hi;
  XFactorization f;
  f.x = x;
  f.w1.assign(a.begin(), a.begin() + static_cast<long>(lo));
  f.w2.assign(a.begin() + static_cast<long>(lo), a.begin() + static_cast<long>(pos));
  f.w4.assign(a.begin() + static_cast<long>(pos) + 1, a.begin() + static_cast<long>(hi));
  f.w5.assign(a.begin() + static_cast<long>(hi), a.end());
  return f;
}

Permutation phi_x(const Permutation& p, int x) {
  auto f = x_factorize(p, x);
  std::vector<int> out = f.w1;
  out.insert(out.end(), f.w4.begin(), f.w4.end());
  out.push_back(x);
  out.insert(out.end(), f.w2.begin(), f.w2.end());
  out.insert(out.end(), f.w5.begin(), f.w5.end());
  return Permutation(std::move(out));
}

Permutation phi_prime(const Permutation& p, int x) {
  auto f = x_factorize(p, x);
  if (f.w2.empty() == f.w4.empty()) return p;
  return phi_x(p, x);
}

Permutation phi_prime_set(const Permutation& p, const std::vector<int>& S) {
  Permutation r = p;
  for (int x : S) r = phi_prime(r, x);
  return r;
}

std::vector<Permutation> mfs_orbit(const Permutation& p) {
  check_orbit_size(p.size());
  std::set<Permutation> seen{p};
  std::deque<Permutation> todo{p};
  while (!todo.empty()) {
    Permutation cur = todo.front();
    todo.pop_front();
    for (int x = 1; x <= cur.size(); ++x) {
      Permutation nxt = phi_prime(cur, x);
      if (seen.insert(nxt).second) todo.push_back(nxt);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<Permutation>> mfs_orbits(int n) {
  check_orbit_size(n);
  std::set<Permutation> assigned;
  std::vector<std::vector<Permutation>> out;
  for (const auto& p : enumerate_sn(n)) {
    if (assigned.count(p)) continue;
    auto orb = mfs_orbit(p);
    assigned.insert(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool is_mfs_closed(const std::set<Permutation>& pi) {
  for (const auto& p : pi) {
    for (int x = 1; x <= p.size(); ++x) {
      if (!pi.count(phi_prime(p, x))) return false;
    }
  }
  return true;
}

std::vector<LetterClass> classify_letters(const Permutation& p, Padding pad) {
  int n = p.size();
  std::vector<LetterClass> out;
  for (int i = 1; i <= n; ++i) {
    int left = i > 1 ? p(i - 1) : (pad == Padding::inf_inf ? kInfinity : 0);
    int right = i < n ? p(i + 1) : kInfinity;
    int mid = p(i);
    if (left < mid && mid > right) out.push_back(LetterClass::peak);
    else if (left > mid && mid < right) out.push_back(LetterClass::valley);
    else if (left < mid) out.push_back(LetterClass::dasc);
    else out.push_back(LetterClass::ddes);
  }
  return out;
}

PaddedCounts padded_counts(const Permutation& p, Padding pad) {
  PaddedCounts c;
  for (auto k : classify_letters(p, pad)) {
    switch (k) {
      case LetterClass::peak: ++c.pk; break;
      case LetterClass::valley: ++c.val; break;
      case LetterClass::dasc: ++c.dasc; break;
      case LetterClass::ddes: ++c.ddes; break;
    }
  }
  return c;
}

std::vector<SignedPermutation> sign_orbit(const Permutation& p) {
  if (p.size() > kMaxEnumerateBn) throw std::length_error("sign orbit too large");
  std::vector<SignedPermutation> out;
  for (unsigned long mask = 0; mask < (1UL << p.size()); ++mask) out.push_back(with_signs(p, mask));
  return out;
}

std::vector<SignedPermutation> b_of_set(const std::vector<Permutation>& pi) {
  std::set<SignedPermutation> all;
  for (const auto& p : pi) {
    for (auto& s : sign_orbit(p)) all.insert(std::move(s));
  }
  return {all.begin(), all.end()};
}

std::vector<int> bdes_prediction(const SignedPermutation& sigma) {
  Permutation p = sigma.absolute();
  auto cls = classify_letters(p, Padding::zero_inf);
  std::vector<int> d;
  for (int i = 1; i <= p.size(); ++i) {
    bool neg = sigma(i) < 0;
    switch (cls[static_cast<std::size_t>(i - 1)]) {
      case LetterClass::peak:
        if (neg) d.push_back(i - 1);
        else d.push_back(i);
        break;
      case LetterClass::dasc:
        if (neg) d.push_back(i - 1);
        break;
      case LetterClass::ddes:
        if (!neg) d.push_back(i);
        break;
      case LetterClass::valley:
        break;
    }
  }
  return d;
}

}  // namespace descentlab
