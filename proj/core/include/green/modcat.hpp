#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "green/hopf.hpp"

namespace green {

struct RangeError : std::runtime_error {
  explicit RangeError(const std::string& m) : std::runtime_error(m) {}
};
struct ConstructionFailed : std::runtime_error {
  explicit ConstructionFailed(const std::string& m) : std::runtime_error(m) {}
};
struct UnidentifiedError : std::runtime_error {
  explicit UnidentifiedError(const std::string& m) : std::runtime_error(m) {}
};
struct InconclusiveError : std::runtime_error {
  explicit InconclusiveError(const std::string& m) : std::runtime_error(m) {}
};
struct NonSplitSemisimpleQuotient : std::runtime_error {
  explicit NonSplitSemisimpleQuotient(const std::string& m) : std::runtime_error(m) {}
};
struct CoverLiftFailed : std::runtime_error {
  explicit CoverLiftFailed(const std::string& m) : std::runtime_error(m) {}
};
struct EnvelopeEmbedFailed : std::runtime_error {
  explicit EnvelopeEmbedFailed(const std::string& m) : std::runtime_error(m) {}
};

/// Band parameter in k union {infinity}; nonzero scalars absorb into infinity.
struct EtaParam {
  bool inf = false;
  CycNum v;  // meaningful iff !inf

  static EtaParam infinity() { return EtaParam{true, CycNum()}; }
  static EtaParam of(CycNum x) { return EtaParam{false, std::move(x)}; }

  bool operator==(const EtaParam& o) const {
    if (inf != o.inf) return false;
    return inf || v == o.v;
  }
  bool operator!=(const EtaParam& o) const { return !(*this == o); }
  bool operator<(const EtaParam& o) const {
    if (inf != o.inf) return !inf;  // finite sorts before infinity
    return inf ? false : v < o.v;
  }
  std::string str() const;
};

enum class IndecKind { Simple, Proj, Syz, Band };

/// Symbolic name of an indecomposable module.
/// Simple(l,r), Proj(l,r), Syz(sign,m,l,r) = Omega^{+-m} V(l,r), Band(s,l,r,eta).
struct IndecLabel {
  IndecKind kind = IndecKind::Simple;
  int l = 1, r = 0;
  int sign = 0;  // Syz only: +1 / -1
  int m = 0;     // Syz only
  int s = 0;     // Band only
  EtaParam eta;  // Band only

  bool operator==(const IndecLabel& o) const;
  bool operator<(const IndecLabel& o) const;
  std::string str() const;
};

using LabelMultiset = std::map<IndecLabel, int>;

/// Explicit H_n(1,q)-module: four generator matrices over Q(q).
/// act_b and act_c are diagonal throughout, with q-power eigenvalues
/// recorded as exponents in wb/wc; every construction preserves this.
struct ModuleRep {
  const CycField* F = nullptr;
  int dim = 0;
  QMat a, b, c, d;
  std::vector<int> wb, wc;  // diagonal exponents mod n
  int beta = 0;             // the constant (wb - wc) mod n, a block invariant
  std::string basis_tag;
};

struct DecompResult {
  LabelMultiset summands;
  std::vector<IndecLabel> blocks;  // per witness column block
  std::vector<int> block_dims;
  QMat witness;  // invertible; conjugation block-diagonalizes the actions
};

enum class IsoStatus { Iso, NotIso, Inconclusive };
struct IsoResult {
  IsoStatus status;
  QMat witness;  // valid iff status == Iso
};

/// Module catalog and decomposition oracle for a fixed n.
class ModCat {
public:
  explicit ModCat(HopfAlgebra& H) : H_(&H) {}

  const CycField& field() const { return H_->field(); }
  HopfAlgebra& hopf() const { return *H_; }
  int n() const { return H_->n(); }

  // Normalizing label factories (Proj(n,r) and Syz m=0 fold into Simple).
  IndecLabel simple(int l, int r) const;
  IndecLabel proj(int l, int r) const;
  IndecLabel syz(int sign, int m, int l, int r) const;
  IndecLabel band(int s, int l, int r, const EtaParam& eta) const;

  int dim_of(const IndecLabel& lab) const;
  int beta_of(const IndecLabel& lab) const;

  /// Catalog access; reps are built on demand and cached.
  const ModuleRep& build(const IndecLabel& lab);

  ModuleRep build_simple(int l, int r) const;
  ModuleRep build_band1(int l, int r, const EtaParam& eta) const;
  ModuleRep build_band(int s, int l, int r, const EtaParam& eta);

  ModuleRep tensor(const ModuleRep& M, const ModuleRep& N) const;
  static ModuleRep direct_sum(const std::vector<const ModuleRep*>& parts);

  /// Basis of the intertwiner space {T : T g_M = g_N T}.
  std::vector<QMat> hom_space(const ModuleRep& M, const ModuleRep& N) const;
  int hom_dim(const ModuleRep& M, const ModuleRep& N) const;

  IsoResult is_isomorphic(const ModuleRep& M, const ModuleRep& N) const;

  /// Krull-Schmidt splitting with an exact block-diagonalizing witness.
  DecompResult split(const ModuleRep& M, const std::vector<EtaParam>& eta_hints = {});

  IndecLabel identify(const ModuleRep& M, const std::vector<EtaParam>& eta_candidates);

  /// top = M/JM and socle = ann_M(J), each as a multiset of simple labels.
  std::pair<LabelMultiset, LabelMultiset> top_and_socle(const ModuleRep& M) const;

  std::pair<ModuleRep, QMat> projective_cover(const ModuleRep& M);
  ModuleRep syzygy(const ModuleRep& M);
  ModuleRep cosyzygy(const ModuleRep& M);

  bool validate_band_tower(int s, int l, int r, const EtaParam& eta, std::string* why = nullptr);

  LabelMultiset decompose_tensor(const IndecLabel& A, const IndecLabel& B);

  /// Action matrix of an algebra element on a module.
  QMat act(const AlgebraElement& u, const ModuleRep& M) const;

  /// Closure of a seed set under eta -> -eta q^l and eta -> eta q^{1-l}(l)_q
  /// (and its inverse) for all 1 <= l <= n-1.
  std::vector<EtaParam> eta_closure(const std::vector<EtaParam>& seed) const;

  bool rep_validate(const ModuleRep& M, std::string* first_violated = nullptr) const;

private:
  ModuleRep build_uncached(const IndecLabel& lab);
  void build_all_projectives();
  ModuleRep band_via_extension(int s, int l, int r, const EtaParam& eta);
  std::vector<IndecLabel> candidate_pool(const ModuleRep& M,
                                         const std::vector<EtaParam>& eta_hints,
                                         int dim_cap);

  HopfAlgebra* H_;
  std::map<IndecLabel, ModuleRep> cache_;
  bool projectives_built_ = false;
};

/// Restrict to an invariant subspace spanned by the columns of B
/// (weight-adapted basis is chosen internally).
ModuleRep restrict_rep(const ModuleRep& M, const QMat& B, QMat* adapted_basis = nullptr);

/// Quotient by the invariant subspace spanned by the columns of B.
ModuleRep quotient_rep(const ModuleRep& M, const QMat& B, QMat* proj_map = nullptr);

}  // namespace green
