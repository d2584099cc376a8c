#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "descentlab/permutation.hpp"

namespace descentlab {

inline constexpr int kMaxCatalanN = 12;

Integer catalan(unsigned n);

// Binary tree on a flat node vector. Labels are 0 for unlabeled trees.
class BinaryTree {
 public:
  struct Node {
    int left = -1;
    int right = -1;
    int label = 0;
  };

  BinaryTree() = default;
  // Root is attached above the two subtrees.
  static BinaryTree join(const BinaryTree& left, const BinaryTree& right, int label = 0);

  int size() const { return static_cast<int>(nodes_.size()); }
  bool empty() const { return nodes_.empty(); }
  int root() const { return root_; }
  const Node& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  bool labeled() const;

  BinaryTree unlabeled() const;
  // Labels 1..n assigned in post-order.
  BinaryTree postorder_labeled() const;
  std::vector<int> postorder_labels() const;
  std::vector<int> inorder_labels() const;

  // "." for an empty tree, "(L,R)" for a node, "k(L,R)" for a node labelled k.
  std::string to_string() const;
  static BinaryTree parse(std::string_view text);

  friend bool operator==(const BinaryTree& a, const BinaryTree& b) { return a.to_string() == b.to_string(); }

 private:
  int copy_from(const BinaryTree& other, int idx);

  std::vector<Node> nodes_;
  int root_ = -1;
};

struct TreeStats {
  int nlc = 0;
  int tc = 0;
};
TreeStats tree_stats(const BinaryTree& t);

BinaryTree theta_tilde(const Permutation& p);
BinaryTree theta(const Permutation& p);  // throws "not 231-avoiding"
Permutation theta_inverse(const BinaryTree& t);

// By left-subtree size ascending, then recursively.
std::vector<BinaryTree> enumerate_trees(int n);

class DyckPath {
 public:
  DyckPath() = default;
  explicit DyckPath(std::string word);  // validates

  const std::string& word() const { return word_; }
  int semilength() const { return static_cast<int>(word_.size() / 2); }
  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath& a, const DyckPath& b) { return a.word_ <=> b.word_; }

 private:
  std::string word_;
};

struct DyckStats {
  int pk = 0;
  int hk = 0;
};
DyckStats dyck_stats(const DyckPath& d);

DyckPath psi(const Permutation& p);  // throws "not 231-avoiding"

// Lexicographic with U < D.
std::vector<DyckPath> enumerate_dyck(int n);

// Av_n(231), read back from the trees; sorted.
std::vector<Permutation> av231_via_trees(int n);

}  // namespace descentlab
