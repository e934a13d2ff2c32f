#include "gsf/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace gsf {

CartanPoint::CartanPoint(Eigen::VectorXd entries) : x_(std::move(entries)) {
  if (x_.size() < 1) throw std::invalid_argument("CartanPoint needs at least one entry");
  if (!x_.allFinite()) throw std::invalid_argument("CartanPoint entries must be finite");
}

CartanPoint::CartanPoint(std::initializer_list<double> entries)
    : CartanPoint(Eigen::Map<const Eigen::VectorXd>(entries.begin(),
                                                    static_cast<Eigen::Index>(entries.size()))) {}

ChamberProjection project_to_chamber(const CartanPoint& X) {
  std::vector<int> source(X.size());
  std::iota(source.begin(), source.end(), 0);
  // stable: equal entries keep their relative order, so the permutation is canonical
  std::stable_sort(source.begin(), source.end(),
                   [&](int i, int j) { return X[i] > X[j]; });
  return {CartanPoint(permute(X.entries(), source)), std::move(source)};
}

Eigen::VectorXd permute(const Eigen::VectorXd& x, const std::vector<int>& source) {
  Eigen::VectorXd out(x.size());
  for (Eigen::Index k = 0; k < x.size(); ++k) out(k) = x(source[k]);
  return out;
}

double BlockStructure::trace() const {
  double t = 0.0;
  for (int i = 0; i < r(); ++i) t += mults[i] * levels(i);
  return t;
}

CartanPoint BlockStructure::expand() const {
  Eigen::VectorXd x(n());
  for (int i = 0; i < r(); ++i) x.segment(prefix[i], mults[i]).setConstant(levels(i));
  return CartanPoint(std::move(x));
}

BlockStructure block_structure(const CartanPoint& X, double tol) {
  const auto& x = X.entries();
  const int n = X.size();
  for (int k = 0; k + 1 < n; ++k)
    if (x(k) < x(k + 1)) throw std::invalid_argument("block_structure expects a chamber-ordered point");

  const double threshold = tol * std::max(1.0, x(0) - x(n - 1));
  BlockStructure b;
  b.tolerance = tol;
  std::vector<double> levels;
  b.prefix.push_back(0);
  int start = 0;
  for (int k = 1; k <= n; ++k) {
    if (k == n || x(k - 1) - x(k) > threshold) {
      levels.push_back(x.segment(start, k - start).mean());
      b.mults.push_back(k - start);
      b.prefix.push_back(k);
      start = k;
    }
  }
  b.levels = Eigen::Map<Eigen::VectorXd>(levels.data(), static_cast<Eigen::Index>(levels.size()));
  return b;
}

const char* to_string(HullPosition p) {
  switch (p) {
    case HullPosition::interior: return "interior";
    case HullPosition::boundary: return "boundary";
    case HullPosition::outside: return "outside";
  }
  return "?";
}

double hull_tolerance(const CartanPoint& X) { return 1e-12 * (1.0 + std::abs(X.trace())); }

namespace {

Eigen::VectorXd sorted_desc(const Eigen::VectorXd& v) {
  Eigen::VectorXd s = v;
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

// Partial sums of the k largest entries, k = 1..n.
Eigen::VectorXd top_sums(const Eigen::VectorXd& v) {
  Eigen::VectorXd s = sorted_desc(v);
  std::partial_sum(s.begin(), s.end(), s.begin());
  return s;
}

}  // namespace

HullPosition rado_membership(const CartanPoint& H, const CartanPoint& X) {
  return rado_membership(H, X, hull_tolerance(X));
}

HullPosition rado_membership(const CartanPoint& H, const CartanPoint& X, double tol) {
  if (H.size() != X.size()) throw std::invalid_argument("rado_membership: rank mismatch");
  if (std::abs(H.trace() - X.trace()) > tol) return HullPosition::outside;
  const Eigen::VectorXd sh = top_sums(H.entries());
  const Eigen::VectorXd sx = top_sums(X.entries());
  bool tight = false;
  for (int k = 0; k + 1 < H.size(); ++k) {
    const double slack = sx(k) - sh(k);
    if (slack < -tol) return HullPosition::outside;
    if (slack <= tol) tight = true;
  }
  // rank one: C(X) is the single point X
  if (H.size() == 1) tight = true;
  return tight ? HullPosition::boundary : HullPosition::interior;
}

double rado_slack(const CartanPoint& H, const CartanPoint& X) {
  if (H.size() != X.size()) throw std::invalid_argument("rado_slack: rank mismatch");
  const Eigen::VectorXd sh = top_sums(H.entries());
  const Eigen::VectorXd sx = top_sums(X.entries());
  double slack = std::numeric_limits<double>::infinity();
  for (int k = 0; k + 1 < H.size(); ++k) slack = std::min(slack, sx(k) - sh(k));
  return slack;
}

bool InterlacingBox::contains(const Eigen::VectorXd& xi, double tol) const {
  if (xi.size() != lower.size()) return false;
  return ((xi - lower).array() >= -tol).all() && ((upper - xi).array() >= -tol).all();
}

InterlacingBox interlacing_box(const BlockStructure& blocks) {
  const int n = blocks.n();
  InterlacingBox box;
  box.lower.resize(std::max(n - 1, 0));
  box.upper.resize(std::max(n - 1, 0));
  if (n <= 1) return box;
  const Eigen::VectorXd x = blocks.expand().entries();
  for (int k = 0; k + 1 < n; ++k) {
    box.lower(k) = x(k + 1);
    box.upper(k) = x(k);
  }
  for (int i = 1; i < blocks.r(); ++i) box.free_index.push_back(blocks.prefix[i] - 1);
  return box;
}

Eigen::VectorXd assemble_xi(const BlockStructure& blocks, const Eigen::VectorXd& eta) {
  const int r = blocks.r();
  if (eta.size() != r - 1) throw std::invalid_argument("assemble_xi: expected r-1 free coordinates");
  Eigen::VectorXd xi(blocks.n() - 1);
  int pos = 0;
  for (int i = 0; i < r; ++i) {
    for (int c = 0; c < blocks.mults[i] - 1; ++c) xi(pos++) = blocks.levels(i);
    if (i + 1 < r) xi(pos++) = eta(i);
  }
  return xi;
}

Eigen::VectorXd extract_eta(const BlockStructure& blocks, const Eigen::VectorXd& xi) {
  Eigen::VectorXd eta(blocks.r() - 1);
  for (int i = 0; i + 1 < blocks.r(); ++i) eta(i) = xi(blocks.prefix[i + 1] - 1);
  return eta;
}

namespace {

// Witness search and the mass-shifting steps work on xi directly; x is the
// chamber-ordered X, hp the first n-1 coordinates of H.
struct WitnessState {
  Eigen::VectorXd x;
  Eigen::VectorXd top;  // P_k = sum of the k largest entries of H'
  Eigen::VectorXd xi;
  double tol;

  int m() const { return static_cast<int>(xi.size()); }
  double partial(int k) const { return xi.head(k + 1).sum(); }
  // slack of the Rado constraint of H' in C(xi) for the k+1 largest entries
  double rado_slack(int k) const { return partial(k) - top(k); }
  double room_up(int k) const { return x(k) - xi(k); }
  double room_down(int k) const { return xi(k) - x(k + 1); }
};

Eigen::VectorXd minimal_witness(const Eigen::VectorXd& x, const Eigen::VectorXd& top, double trace,
                                double tol) {
  const int m = static_cast<int>(top.size());  // n - 1
  // Backward feasible intervals for the partial sums S_1..S_m (S_m = trace).
  std::vector<double> lo(m), hi(m);
  lo[m - 1] = hi[m - 1] = trace;
  for (int k = m - 2; k >= 0; --k) {
    // xi_{k+1} = S_{k+1} - S_k lies in [x(k+2), x(k+1)] (0-based)
    lo[k] = std::max(top(k), lo[k + 1] - x(k + 1));
    hi[k] = hi[k + 1] - x(k + 2);
    if (lo[k] > hi[k] + tol) throw std::domain_error("not in hull");
  }
  Eigen::VectorXd xi(m);
  double prev = 0.0;
  for (int k = 0; k < m; ++k) {
    const double lower = std::max(lo[k], prev + x(k + 1));
    const double upper = std::min(hi[k], prev + x(k));
    if (lower > upper + tol) throw std::domain_error("not in hull");
    const double s = std::min(lower, upper);
    xi(k) = s - prev;
    prev = s;
  }
  return xi;
}

// Raise every tight Rado constraint by shifting mass from a later coordinate
// with room below to an earlier coordinate with room above.
void make_rado_strict(WitnessState& w) {
  const int m = w.m();
  for (int iter = 0; iter < 16 * m * m + 16; ++iter) {
    int k = -1;
    for (int j = 0; j + 1 < m; ++j)
      if (w.rado_slack(j) <= w.tol) { k = j; break; }
    if (k < 0) return;
    int i = -1, j = -1;
    for (int c = 0; c <= k; ++c)
      if (w.room_up(c) > w.tol && (i < 0 || w.room_up(c) > w.room_up(i))) i = c;
    for (int c = k + 1; c < m; ++c)
      if (w.room_down(c) > w.tol && (j < 0 || w.room_down(c) > w.room_down(j))) j = c;
    if (i < 0 || j < 0) throw std::logic_error("decompose_check: no admissible mass shift");
    const double delta = 0.5 * std::min(w.room_up(i), w.room_down(j));
    w.xi(i) += delta;
    w.xi(j) -= delta;
  }
  throw std::logic_error("decompose_check: Rado strictness did not terminate");
}

double min_rado_slack(const WitnessState& w, int from, int to) {
  double s = std::numeric_limits<double>::infinity();
  for (int k = from; k < to && k + 1 < w.m(); ++k) s = std::min(s, w.rado_slack(k));
  return s;
}

// Move the free coordinates eta off the faces of E(X) while keeping H' in C(xi)°.
void make_box_strict(WitnessState& w, const BlockStructure& blocks) {
  const int r = blocks.r();
  const Eigen::VectorXd& a = blocks.levels;
  std::vector<int> pos(r - 1);
  for (int i = 0; i + 1 < r; ++i) pos[i] = blocks.prefix[i + 1] - 1;
  auto eta = [&](int i) -> double& { return w.xi(pos[i]); };
  const int cap = 16 * r * r + 16;

  // upper faces eta_k = a_k
  for (int iter = 0;; ++iter) {
    if (iter > cap) throw std::logic_error("decompose_check: upper-face step did not terminate");
    int k = -1;
    for (int i = 0; i + 1 < r; ++i)
      if (eta(i) >= a(i) - w.tol) { k = i; break; }
    if (k < 0) break;
    if (k == 0) {
      int j = -1;
      for (int c = 1; c + 1 < r; ++c)
        if (eta(c) < a(c) - w.tol) { j = c; break; }
      if (j < 0) throw std::logic_error("decompose_check: no coordinate to absorb the shift");
      // lowering eta_1 lowers the partial sums between the two positions
      const double delta = 0.5 * std::min({a(0) - a(1), a(j) - eta(j),
                                           min_rado_slack(w, pos[0], pos[j])});
      eta(0) -= delta;
      eta(j) += delta;
    } else {
      const double delta = 0.5 * std::min(a(0) - eta(0), a(k) - a(k + 1));
      eta(0) += delta;
      eta(k) -= delta;
    }
  }
  // lower faces eta_k = a_{k+1}
  for (int iter = 0;; ++iter) {
    if (iter > cap) throw std::logic_error("decompose_check: lower-face step did not terminate");
    int k = -1;
    for (int i = r - 2; i >= 0; --i)
      if (eta(i) <= a(i + 1) + w.tol) { k = i; break; }
    if (k < 0) break;
    const int last = r - 2;
    if (k == last) {
      int j = -1;
      for (int c = last - 1; c >= 0; --c)
        if (eta(c) > a(c + 1) + w.tol) { j = c; break; }
      if (j < 0) throw std::logic_error("decompose_check: no coordinate to absorb the shift");
      const double delta = 0.5 * std::min({a(last) - a(last + 1), eta(j) - a(j + 1),
                                           min_rado_slack(w, pos[j], pos[last])});
      eta(last) += delta;
      eta(j) -= delta;
    } else {
      const double delta = 0.5 * std::min(eta(last) - a(last + 1), a(k) - a(k + 1));
      eta(last) -= delta;
      eta(k) += delta;
    }
  }
}

}  // namespace

DecompositionWitness decompose_check(const CartanPoint& H, const CartanPoint& X) {
  const int n = X.size();
  if (H.size() != n) throw std::invalid_argument("decompose_check: rank mismatch");
  const HullPosition where = rado_membership(H, X);
  if (where == HullPosition::outside) throw std::domain_error("not in hull");
  if (n == 1) return {Eigen::VectorXd(0), false};

  const CartanPoint Xs = project_to_chamber(X).sorted;
  const BlockStructure blocks = block_structure(Xs);
  WitnessState w;
  w.x = blocks.expand().entries();
  const Eigen::VectorXd hp = H.entries().head(n - 1);
  w.top = top_sums(hp);
  w.tol = hull_tolerance(X);
  w.xi = minimal_witness(w.x, w.top, hp.sum(), w.tol);

  DecompositionWitness out;
  if (where == HullPosition::interior && blocks.r() >= 2) {
    make_rado_strict(w);
    make_box_strict(w, blocks);
    const InterlacingBox box = interlacing_box(blocks);
    bool strict_box = true;
    for (int idx : box.free_index)
      strict_box = strict_box && w.xi(idx) > box.lower(idx) + w.tol &&
                   w.xi(idx) < box.upper(idx) - w.tol;
    out.interior = strict_box && (n == 2 || rado_membership(CartanPoint(hp), CartanPoint(w.xi)) ==
                                                HullPosition::interior);
  }
  out.xi = w.xi;
  return out;
}

}  // namespace gsf
