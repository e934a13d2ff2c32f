#pragma once

#include <Eigen/Dense>
#include <initializer_list>
#include <vector>

namespace gsf {

/// A point of the Cartan subalgebra of sl(n)/gl(n): the diagonal entries
/// x_1..x_n of a real diagonal matrix, in any order.
class CartanPoint {
 public:
  CartanPoint() = default;
  explicit CartanPoint(Eigen::VectorXd entries);
  CartanPoint(std::initializer_list<double> entries);

  int size() const { return static_cast<int>(x_.size()); }
  double operator[](int k) const { return x_(k); }
  const Eigen::VectorXd& entries() const { return x_; }
  double trace() const { return x_.sum(); }

 private:
  Eigen::VectorXd x_;
};

/// Sorted (non-increasing) representative of the Weyl orbit together with
/// the witnessing permutation: sorted[k] = X[source[k]].
struct ChamberProjection {
  CartanPoint sorted;
  std::vector<int> source;
};

ChamberProjection project_to_chamber(const CartanPoint& X);

/// Apply a permutation: result[k] = X[source[k]].
Eigen::VectorXd permute(const Eigen::VectorXd& x, const std::vector<int>& source);

/// Default relative block tolerance.
inline constexpr double kBlockTolerance = 1e-9;

/// Distinct decreasing levels a_1 > ... > a_r of a chamber-ordered point,
/// their multiplicities n_i and prefix sums N_0 = 0, ..., N_r = n.
struct BlockStructure {
  Eigen::VectorXd levels;
  std::vector<int> mults;
  std::vector<int> prefix;
  double tolerance = kBlockTolerance;

  int r() const { return static_cast<int>(mults.size()); }
  int n() const { return prefix.empty() ? 0 : prefix.back(); }
  bool regular() const { return r() == n(); }
  /// Sum of n_k a_k, the trace of the snapped point.
  double trace() const;
  /// The snapped chamber point diag[a_1,...,a_1,a_2,...].
  CartanPoint expand() const;
};

/// Groups consecutive entries of a chamber-ordered point whose gap is at most
/// tol * max(1, spread); each group is replaced by its mean.
BlockStructure block_structure(const CartanPoint& X, double tol = kBlockTolerance);

/// Relative position of H with respect to the convex hull C(X) of the Weyl orbit of X.
enum class HullPosition { interior, boundary, outside };

const char* to_string(HullPosition p);

/// Tightness tolerance used by rado_membership for a given X.
double hull_tolerance(const CartanPoint& X);

/// Majorization test: H lies in C(X) iff the traces agree and the sum of the k
/// largest entries of H never exceeds the sum of the k largest entries of X.
HullPosition rado_membership(const CartanPoint& H, const CartanPoint& X);
HullPosition rado_membership(const CartanPoint& H, const CartanPoint& X, double tol);

/// min over k < n of (sum of the k largest of X) - (sum of the k largest of H).
/// Positive iff H lies strictly inside the hull of points with the trace of H.
double rado_slack(const CartanPoint& H, const CartanPoint& X);

/// The interlacing box E(X) = {xi : x_{k+1} <= xi_k <= x_k} of a chamber-ordered X.
/// Coordinates pinned by the block structure have lower == upper; the free
/// coordinates sit at positions N_k - 1 (0-based) and carry eta_k.
struct InterlacingBox {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
  std::vector<int> free_index;

  int ambient_dimension() const { return static_cast<int>(lower.size()); }
  int dimension() const { return static_cast<int>(free_index.size()); }
  bool contains(const Eigen::VectorXd& xi, double tol = 0.0) const;
};

InterlacingBox interlacing_box(const BlockStructure& blocks);

/// Layout xi = [a_1 (n_1-1 times), eta_1, a_2 (n_2-1 times), eta_2, ..., a_r (n_r-1 times)].
Eigen::VectorXd assemble_xi(const BlockStructure& blocks, const Eigen::VectorXd& eta);

/// Free coordinates of xi (the entries at positions N_k - 1).
Eigen::VectorXd extract_eta(const BlockStructure& blocks, const Eigen::VectorXd& xi);

/// A point xi of E(X) with H' = (h_1..h_{n-1}) in C(xi); `interior` reports
/// whether xi lies in E(X)° and H' in C(xi)°.
struct DecompositionWitness {
  Eigen::VectorXd xi;
  bool interior = false;
};

/// Finds xi in E(X) with H' in C(xi). For H interior to C(X) the witness is
/// moved by mass-shifting steps until xi is in E(X)° and H' in C(xi)°.
/// Throws std::domain_error("not in hull") when H is outside C(X).
DecompositionWitness decompose_check(const CartanPoint& H, const CartanPoint& X);

}  // namespace gsf
