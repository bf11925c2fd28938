#pragma once

#include <Eigen/Core>

#include <span>
#include <string>
#include <vector>

namespace sharkovsky {

/// A single n-cycle on {1..n}, stored with 1-based images: images()[i-1] == pi(i).
///
/// This is the combinatorial shadow of a periodic orbit b_1 < ... < b_n of an
/// interval map: pi(i) = j when f(b_i) = b_j. Instances are only produced by
/// `validate`, so every CyclicPermutation is a bijection with a single cycle.
class CyclicPermutation {
 public:
  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  /// Conjugate by the index reversal i -> n+1-i.
  CyclicPermutation reflected() const;

  friend bool operator==(const CyclicPermutation&, const CyclicPermutation&) = default;

 private:
  friend CyclicPermutation validate(std::span<const int> images);
  explicit CyclicPermutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

/// Throws NotBijection or NotSingleCycle.
CyclicPermutation validate(std::span<const int> images);
inline CyclicPermutation validate(std::initializer_list<int> images) {
  return validate(std::span<const int>(images.begin(), images.size()));
}

/// Integer segment |lo, hi| = {lo, ..., hi} with lo < hi.
struct Segment {
  int lo;
  int hi;

  Segment(int lo_, int hi_);
  static Segment unit(int i) { return Segment(i, i + 1); }

  int card() const { return hi - lo + 1; }
  bool is_unit() const { return hi == lo + 1; }
  bool contains(const Segment& s) const { return lo <= s.lo && s.hi <= hi; }
  Segment reflected(int n) const { return Segment(n + 1 - hi, n + 1 - lo); }

  friend bool operator==(const Segment&, const Segment&) = default;
};

std::string to_string(const Segment& s);
std::string to_string(std::span<const Segment> chain);  // "|4,5| -> |3,7| -> ..."

/// Largest i in |1, n-1| with pi(i) > i. Requires n >= 2.
int pivot(const CyclicPermutation& pi);

/// |min pi(i), max pi(i)| over i in s.
Segment apply_A(const CyclicPermutation& pi, const Segment& s);

/// [s, A s, ..., A^k s].
std::vector<Segment> iterate_A(const CyclicPermutation& pi, const Segment& s, int k);

/// Least k with A^k |i0,*| = |1,n|. Requires n > 2; the result lies in [1, n-2].
int expansion_steps(const CyclicPermutation& pi);

/// mu(i,s) = 1 iff J_i covers J_s in the connect-the-dots model (0-based storage).
using TransitionMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

TransitionMatrix transition_matrix(const CyclicPermutation& pi);

/// Graphviz digraph with nodes J1..J(n-1).
std::string to_dot(const TransitionMatrix& mu);

struct ClassAMembership {
  bool member = false;
  std::vector<int> witnesses;  // every i* with i*, pi(i*) on the same side of the pivot
};

/// Membership in the class of permutations with an element that stays on its own
/// side of the pivot. Requires n > 2.
ClassAMembership is_class_A(const CyclicPermutation& pi);

}  // namespace sharkovsky
