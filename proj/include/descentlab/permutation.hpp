#pragma once

#include <compare>
#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "descentlab/composition.hpp"
#include "descentlab/poly.hpp"

namespace descentlab {

inline constexpr int kMaxEnumerateSn = 12;

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> letters);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(letters_.size()); }
  // 1-based: p(i) = pi_i.
  int operator()(int i) const { return letters_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& letters() const { return letters_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.letters_ <=> b.letters_; }

  std::string to_string() const;  // space separated
  static Permutation parse(std::string_view text);

  // Steps to the lexicographic successor; false (and p unchanged) at the last one.
  friend bool advance_lex(Permutation& p);

 private:
  std::vector<int> letters_;
};

struct StatRecord {
  int des = 0, pk = 0, lpk = 0, val = 0, udr = 0, dasc = 0, ddes = 0, br = 0;
  int inv = 0, maj = 0, imaj = 0, altdes = 0;
  std::vector<int> des_set;
  Composition comp;
  Composition alt_comp;
};

StatRecord compute_stats(const Permutation& p);

std::vector<int> descent_set(const Permutation& p);
int des(const Permutation& p);
int pk(const Permutation& p);
int lpk(const Permutation& p);
int val(const Permutation& p);
int udr(const Permutation& p);
int br(const Permutation& p);
int dasc(const Permutation& p);
int ddes(const Permutation& p);
int inv(const Permutation& p);
int maj(const Permutation& p);
int imaj(const Permutation& p);
std::vector<int> alt_descent_set(const Permutation& p);
int altdes(const Permutation& p);
Composition comp(const Permutation& p);
Composition alt_comp(const Permutation& p);

bool advance_lex(Permutation& p);

Permutation inverse(const Permutation& p);
Permutation reverse_complement(const Permutation& p);

Permutation stack_sort(const Permutation& p);
bool is_r_stack_sortable(const Permutation& p, int r);
bool avoids_231(const Permutation& p);
bool in_av_2341_and_barred(const Permutation& p);

enum class VincularPattern { p23_1, p13_2 };
VincularPattern vincular_from_name(std::string_view name);
int count_vincular(const Permutation& p, VincularPattern pattern);
int count_vincular(const Permutation& p, std::string_view pattern);

// Lexicographic stream over S_n.
class PermutationStream {
 public:
  explicit PermutationStream(int n);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    iterator() = default;
    explicit iterator(int n);
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    Permutation current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  int n_;
};

PermutationStream enumerate_sn(int n);
std::vector<Permutation> all_permutations(int n);

}  // namespace descentlab
