#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bqf/clifford.hpp"

namespace bqf {

/// A quadratic algebra together with the action matrix of tau on a free
/// rank-2 module with ordered basis (e1, e2).
struct CliffordPair {
  QuadraticAlgebra alg;
  Mat m;

  const Ring& ring() const { return alg.ring(); }
  friend bool operator==(const CliffordPair& p, const CliffordPair& q) {
    return p.alg == q.alg && p.m == q.m;
  }
};

bool is_traceable(const CliffordPair& p);

struct NormalizedPair {
  CliffordPair pair;  // generator tau - shift, action matrix [[b, c], [-a, 0]]
  Elem shift;
};

/// Re-expresses the pair in the generator tau - m with m = M[1][1].
NormalizedPair normalize_pair(const CliffordPair& p);

Form pair_to_form(const CliffordPair& p);
CliffordPair form_to_pair(const Form& q);

/// psi : E -> E' together with tau' = k + eps tau such that
/// M' psi = psi (k I + eps M).
struct PairWitness {
  Mat psi;
  AlgebraWitness alg;
};

bool verify_pair_witness(const CliffordPair& p, const CliffordPair& p2, const PairWitness& w);

/// Pair witness between form_to_pair(q) and form_to_pair(q2) induced by
/// q2 = act(q, A, u).
PairWitness pair_witness_from_similarity(const Form& q, const SimilarityWitness& s);

struct PairVerdict {
  Verdict verdict;
  std::optional<PairWitness> witness;
  std::string reason;
  int bound = 0;

  bool is_isomorphic() const { return verdict == Verdict::Similar; }
};

/// Decides pair isomorphism through the form-similarity decision on the
/// associated forms; the witness is rebuilt on the pairs and re-verified.
PairVerdict pairs_isomorphic(const CliffordPair& p, const CliffordPair& p2,
                             const SimilarityOptions& opts = {});

/// Independent bounded search over psi with first-column entries in
/// [-bound, bound], for every algebra isomorphism.
std::optional<PairWitness> search_pair_isomorphism(const CliffordPair& p, const CliffordPair& p2,
                                                   int bound);

// ---------------------------------------------------------------------------
// Wood forms and duality

/// (a, b, c) -> (c, -b, a).
Form clifford_form_to_wood_form(const Form& q);

/// The pair built from a linear form f = A x^2 + B xy + C y^2 by
/// tau^2 = -B tau - AC, tau x = -C y - B x, tau y = A x.
CliffordPair wood_pair(const Form& f);

struct DualStage {
  std::string label;   // "q", "q_W", "(q_W)_K", "((q_W)_K)_W", "(((q_W)_K)_W)_K"
  std::string module;  // "E" or "E_dual"
  std::string kind;    // "classical" or "wood"
  Form form;
  std::optional<CliffordPair> relations;  // tau relations, classical stages only
};

struct DualTrace {
  Form dual;
  std::vector<DualStage> stages;
};

/// (a, b, c) on E -> (c, -b, a) on the dual module, with the five-stage trace.
DualTrace dual_form_trace(const Form& q);
Form dual_form(const Form& q);

/// Projective dual conic over Q. Integral input is promoted.
Form dual_conic(const Form& q);

/// Limit as t -> 0 of the dual conics of q + t g, with the det factor
/// cleared and common powers of t removed.
Form dual_conic_limit(const Form& q, const Form& g);

}  // namespace bqf
