#pragma once

#include <optional>
#include <string>
#include <vector>

#include "juliasym/rational.hpp"

namespace juliasym {

/// Order value used for infinite rotation groups (beta of a monomial).
inline constexpr int kInfiniteOrder = 0;

inline bool is_infinite_order(int order) { return order == kInfiniteOrder; }

/// p(z) = z^alpha p0(z^beta) with alpha, beta maximal. beta is kInfiniteOrder
/// for monomials, whose p0 is the constant leading coefficient.
struct Decomposition {
  int alpha = 0;
  int beta = 1;
  Polynomial p0;
};

/// Exponent decomposition of p as given (no normalization); coefficients
/// below the zero test are treated as absent.
Decomposition decompose(const Polynomial& p, const ToleranceConfig& tol = {});

struct NormalForm {
  Complex centroid;   // xi
  Complex scale;      // A with A^{d-1} = 1/a_d, principal branch
  Polynomial normalized;  // g = psi^{-1} o p o psi, monic and centered
  int alpha = 0;
  int beta = 1;       // kInfiniteOrder for monomial conjugates
  Polynomial p0;      // monic, nonzero constant term

  /// psi(z) = A z + xi
  MobiusTransform psi() const { return MobiusTransform::affine(scale, centroid); }
};

/// Conjugates p to its normalized form and decomposes it. deg p >= 2.
NormalForm normalize(const Polynomial& p, const ToleranceConfig& tol = {});

enum class GroupKind { rotation_group, full_circle, trivial };

const char* to_string(GroupKind k);

struct SymmetryGroup {
  Complex center;
  int order = 1;  // kInfiniteOrder for full_circle
  GroupKind kind = GroupKind::trivial;

  static SymmetryGroup rotations(Complex center, int order);

  /// z -> l (z - center) + center for l^order = 1, identity first. Empty for full_circle.
  std::vector<MobiusTransform> elements() const;
};

SymmetryGroup symmetry_group(const Polynomial& p, const ToleranceConfig& tol = {});

/// g(l z) == l^d g(z) coefficientwise. Throws NotNormalized unless g is monic and centered.
bool beardon_check(const Polynomial& g, Complex lambda, const ToleranceConfig& tol = {});

/// Max normalized coefficient of g(l z) - l^d g(z); the quantity beardon_check thresholds.
double beardon_residual(const Polynomial& g, Complex lambda);

/// {sigma o p : sigma in Sigma p}, identity first. Throws InfiniteFamily for monomial conjugates.
std::vector<Polynomial> same_julia_family(const Polynomial& p, const ToleranceConfig& tol = {});

struct NoncommutingPair {
  Polynomial q;
  bool same_julia = true;
  bool commutes = false;            // from expanding p o q and q o p
  bool predicted_commutes = false;  // lambda^{(alpha-1)^2} == 1
  double commutator_residual = 0.0;
};

/// q = sigma o p o sigma^{-1} for sigma(z) = l z in normalized coordinates,
/// i.e. q = l^{1-alpha} z^alpha p0(z^beta), mapped back to p's coordinates.
/// Requires l^beta = 1. With expect_noncommuting, throws HypothesisViolated
/// when (alpha - 1)^2 forces commutation.
NoncommutingPair conjugate_noncommuting_pair(const Polynomial& p, Complex lambda, bool expect_noncommuting = false,
                                             const ToleranceConfig& tol = {});

struct JuliaRelation {
  bool holds = false;
  std::optional<Complex> witness;  // lambda of the sigma in Sigma p
  double residual = 0.0;           // best residual over Sigma p
};

/// Searches Sigma p (identity first) for p o q == sigma o q o p.
JuliaRelation julia_relation_check(const Polynomial& p, const Polynomial& q, const ToleranceConfig& tol = {});

/// Largest completely invariant set of points with local degree deg R (at most two).
std::vector<SpherePoint> exceptional_points(const RationalMap& r, const ToleranceConfig& tol = {});

struct MobiusSymmetrySet {
  SpherePoint exceptional_point;
  MobiusTransform conjugator;  // h moving the exceptional point to 0
  Complex zeta;
  int beta = 1;
  // identity first; in the coordinates of the input map
  std::vector<MobiusTransform> generators;
  std::vector<int> exponents;  // m with R o G = G^m o R, or -1 where unverified
  // same generators in the coordinate where the exceptional point is 0
  std::vector<MobiusTransform> local_generators;
};

/// For a map with exactly one exceptional point. Throws NoExceptionalPoint or
/// TwoExceptionalPoints (the latter is conjugate to z^d).
MobiusSymmetrySet exceptional_symmetries(const RationalMap& r, const ToleranceConfig& tol = {});

enum class HypothesisStatus { pass, fail, unverified };

const char* to_string(HypothesisStatus s);

struct HypothesisItem {
  std::string name;
  HypothesisStatus status = HypothesisStatus::pass;
  std::string detail;
};

enum class GroupRelation { equal, containment_only };

const char* to_string(GroupRelation r);

struct Form1Result {
  RationalMap map;
  SymmetryGroup group;
  GroupRelation relation = GroupRelation::equal;
  std::vector<HypothesisItem> checklist;
  Decomposition numerator, denominator;
  int exponent_m = 0;          // alpha1 - alpha2
  double rotation_residual = 0.0;  // R(l z) vs l^m R(z) for l of order beta

  bool any_failed() const;
};

/// Checks every hypothesis of the rotational-symmetry theorem for R = P/Q.
/// With no failures the group is the rotations of order gcd(beta1, beta2)
/// about 0; otherwise only the verified containment is reported.
Form1Result form1_symmetry(const Polynomial& p, const Polynomial& q, const ToleranceConfig& tol = {});

struct Form2Result {
  RationalMap map;  // a z^nu P(z)
  SymmetryGroup group;
  GroupRelation relation = GroupRelation::equal;
};

/// R = a z^nu P with P normalized. Sigma R equals Sigma P except possibly for
/// nu in {-d, -d+1}, where only containment is known.
Form2Result form2_symmetry(const Polynomial& p, int nu, Complex a, const ToleranceConfig& tol = {});

struct McMullenResult {
  RationalMap map;  // z^m + lambda / z^n
  SymmetryGroup group;
  int detected_order = 0;
};

RationalMap mcmullen_map(int m, int n, Complex lambda);

/// Order m + n about 0, re-detected from the functional equation.
McMullenResult mcmullen_symmetry(int m, int n, Complex lambda);

}  // namespace juliasym
