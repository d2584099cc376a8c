#include "descentlab/signed.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace descentlab {

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  std::vector<bool> seen(window_.size() + 1, false);
  for (int v : window_) {
    int a = std::abs(v);
    if (a < 1 || a > size() || seen[static_cast<std::size_t>(a)]) {
      throw std::invalid_argument("not a signed permutation of 1.." + std::to_string(size()));
    }
    seen[static_cast<std::size_t>(a)] = true;
  }
}

Permutation SignedPermutation::absolute() const {
  std::vector<int> v;
  for (int x : window_) v.push_back(std::abs(x));
  return Permutation(std::move(v));
}

std::string SignedPermutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(window_[i]);
  }
  return s;
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
  std::vector<int> v;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    bool neg = false;
    if (c == '-') {
      neg = true;
      ++i;
    }
    if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("bad signed permutation text");
    }
    int x = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      x = x * 10 + (text[i++] - '0');
      if (x > 1000000) throw std::invalid_argument("signed permutation letter too large");
    }
    v.push_back(neg ? -x : x);
  }
  return SignedPermutation(std::move(v));
}

std::vector<int> descent_set_b(const SignedPermutation& s) {
  std::vector<int> d;
  for (int i = 0; i < s.size(); ++i) {
    if (s(i) > s(i + 1)) d.push_back(i);
  }
  return d;
}

SignedStats signed_stats(const SignedPermutation& s) {
  SignedStats r;
  r.des_b = static_cast<int>(descent_set_b(s).size());
  r.fdes = 2 * r.des_b - (s.size() > 0 && s(1) < 0 ? 1 : 0);
  for (int v : s.window()) r.neg += v < 0;
  return r;
}

SignedPermutation with_signs(const Permutation& p, unsigned long mask) {
  int n = p.size();
  std::vector<int> w(p.letters());
  for (int i = 0; i < n; ++i) {
    if (mask >> (n - 1 - i) & 1) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
  }
  return SignedPermutation(std::move(w));
}

std::vector<SignedPermutation> enumerate_bn(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n > kMaxEnumerateBn) throw std::length_error("enumeration too large");
  std::vector<SignedPermutation> out;
  for (const auto& p : enumerate_sn(n)) {
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) out.push_back(with_signs(p, mask));
  }
  return out;
}

namespace {

Poly tally(int n, bool flag) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n > kMaxEnumerateBn) throw std::length_error("enumeration too large");
  std::map<std::pair<int, int>, long> counts;
  for (const auto& p : enumerate_sn(n)) {
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
      auto st = signed_stats(with_signs(p, mask));
      ++counts[{st.neg, flag ? st.fdes : st.des_b}];
    }
  }
  std::vector<Poly::Term> terms;
  for (const auto& [k, c] : counts) {
    Monomial m = Monomial::of(Var::y, static_cast<unsigned>(k.first)) * Monomial::of(Var::t, static_cast<unsigned>(k.second));
    terms.emplace_back(m, Integer(c));
  }
  return Poly::from_terms(std::move(terms));
}

}  // namespace

Poly b_poly(int n) { return tally(n, false); }
Poly f_poly(int n) { return tally(n, true); }

}  // namespace descentlab
