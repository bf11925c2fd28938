#include "sharkovsky/permutation.hpp"

#include <algorithm>
#include <sstream>

#include "sharkovsky/error.hpp"

namespace sharkovsky {

namespace {

void require_in_bounds(const CyclicPermutation& pi, const Segment& s) {
  require(s.lo >= 1 && s.hi <= pi.size(), ErrorKind::kInvalidArgument,
          "segment " + to_string(s) + " outside |1," + std::to_string(pi.size()) + "|");
}

void require_length_above_two(const CyclicPermutation& pi, const char* op) {
  require(pi.size() > 2, ErrorKind::kPrecondition,
          std::string(op) + " requires n > 2, got n = " + std::to_string(pi.size()));
}

}  // namespace

CyclicPermutation validate(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  require(n >= 1, ErrorKind::kInvalidArgument, "empty permutation");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images) {
    require(v >= 1 && v <= n, ErrorKind::kNotBijection,
            "image " + std::to_string(v) + " outside |1," + std::to_string(n) + "|");
    require(!seen[static_cast<std::size_t>(v)], ErrorKind::kNotBijection,
            "image " + std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v)] = true;
  }
  int length = 0;
  int i = 1;
  do {
    i = images[static_cast<std::size_t>(i - 1)];
    ++length;
  } while (i != 1);
  require(length == n, ErrorKind::kNotSingleCycle,
          "cycle through 1 has length " + std::to_string(length) + ", expected " + std::to_string(n));
  return CyclicPermutation(std::vector<int>(images.begin(), images.end()));
}

CyclicPermutation CyclicPermutation::reflected() const {
  const int n = size();
  std::vector<int> out(images_.size());
  for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(n - i)] = n + 1 - (*this)(i);
  return CyclicPermutation(std::move(out));
}

Segment::Segment(int lo_, int hi_) : lo(lo_), hi(hi_) {
  require(lo < hi, ErrorKind::kInvalidArgument,
          "segment |" + std::to_string(lo) + "," + std::to_string(hi) + "| needs lo < hi");
}

std::string to_string(const Segment& s) {
  return "|" + std::to_string(s.lo) + "," + std::to_string(s.hi) + "|";
}

std::string to_string(std::span<const Segment> chain) {
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += " -> ";
    out += to_string(chain[i]);
  }
  return out;
}

int pivot(const CyclicPermutation& pi) {
  require(pi.size() >= 2, ErrorKind::kPrecondition, "pivot requires n >= 2 (n = 1 has no pivot)");
  for (int i = pi.size() - 1; i >= 1; --i) {
    if (pi(i) > i) return i;
  }
  fail(ErrorKind::kPrecondition, "no i with pi(i) > i");  // unreachable for cyclic pi
}

Segment apply_A(const CyclicPermutation& pi, const Segment& s) {
  require_in_bounds(pi, s);
  int lo = pi(s.lo);
  int hi = lo;
  for (int i = s.lo + 1; i <= s.hi; ++i) {
    lo = std::min(lo, pi(i));
    hi = std::max(hi, pi(i));
  }
  return Segment(lo, hi);
}

std::vector<Segment> iterate_A(const CyclicPermutation& pi, const Segment& s, int k) {
  require(k >= 0, ErrorKind::kInvalidArgument, "negative iteration count");
  require_in_bounds(pi, s);
  std::vector<Segment> chain{s};
  chain.reserve(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j < k; ++j) chain.push_back(apply_A(pi, chain.back()));
  return chain;
}

int expansion_steps(const CyclicPermutation& pi) {
  require_length_above_two(pi, "expansion_steps");
  const Segment full(1, pi.size());
  Segment s = Segment::unit(pivot(pi));
  for (int k = 1; k <= pi.size(); ++k) {
    s = apply_A(pi, s);
    if (s == full) return k;
  }
  fail(ErrorKind::kPrecondition, "A-iterates of the pivot segment never fill |1,n|");
}

TransitionMatrix transition_matrix(const CyclicPermutation& pi) {
  require(pi.size() >= 2, ErrorKind::kPrecondition, "transition matrix requires n >= 2");
  const int m = pi.size() - 1;
  TransitionMatrix mu = TransitionMatrix::Zero(m, m);
  for (int i = 1; i <= m; ++i) {
    const int a = std::min(pi(i), pi(i + 1));
    const int b = std::max(pi(i), pi(i + 1));
    for (int s = a; s < b; ++s) mu(i - 1, s - 1) = 1;
  }
  return mu;
}

std::string to_dot(const TransitionMatrix& mu) {
  std::ostringstream os;
  os << "digraph covering {\n";
  for (Eigen::Index i = 0; i < mu.rows(); ++i) os << "  J" << i + 1 << ";\n";
  for (Eigen::Index i = 0; i < mu.rows(); ++i) {
    for (Eigen::Index s = 0; s < mu.cols(); ++s) {
      if (mu(i, s)) os << "  J" << i + 1 << " -> J" << s + 1 << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

ClassAMembership is_class_A(const CyclicPermutation& pi) {
  require_length_above_two(pi, "is_class_A");
  const int i0 = pivot(pi);
  ClassAMembership out;
  for (int i = 1; i <= pi.size(); ++i) {
    if ((i <= i0) == (pi(i) <= i0)) out.witnesses.push_back(i);
  }
  out.member = !out.witnesses.empty();
  return out;
}

}  // namespace sharkovsky
