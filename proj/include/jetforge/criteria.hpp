#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetforge/grobner.hpp"
#include "jetforge/jets.hpp"

namespace jetforge {

// Result of the minimal-embedding reduction at the origin.
struct EmbeddingReduction {
    int embdim = 0;
    int linear_rank = 0;
    // The ideal re-presented in embdim variables (indices renumbered 1..embdim).
    AmbientIdeal reduced;
    // Original ambient indices that survive, in renumbered order.
    std::vector<int> surviving_indices;
};

EmbeddingReduction embedding_dimension_at_origin(const AmbientIdeal& ideal);

enum class Verdict { Smooth, Singular, Inconclusive };

struct SmoothnessReport {
    JetPoint point;
    int jacobian_rank = 0;
    int codim_expected = 0;
    Verdict verdict = Verdict::Inconclusive;
    std::string notes;
};

// Jacobian criterion at the trivial m-jet 0_m; expects I in its minimal
// embedding at the origin.
SmoothnessReport jet_smoothness_report(const AmbientIdeal& ideal, int m);

struct IdealOrder {
    int d = 0;
    int generator_index = 0; // first generator attaining the minimum
};

// Minimum ord over the GIVEN generators; a non-minimal generating set may
// overstate the true order of the ideal.
IdealOrder ord_ideal(const AmbientIdeal& ideal);

enum class WitnessKind { WitnessElement, FiberJump };

struct FlatnessWitness {
    int m = 0;
    int m_prime = 0;
    WitnessKind kind = WitnessKind::WitnessElement;
    // WitnessElement data
    Poly element;
    int d = 0;
    int source_generator = 0;
    int level_used = 0;              // m+1 in char 0; s*e in char p
    Monomial certificate_monomial;   // char p: x_{s,j0}^e * prod_{j!=j0} x_{0,j}^{e_j}
    // FiberJump data
    int fiber_dim = 0;
    int base_dim = 0; // dim(X, 0)

    FlatnessWitness() : element(FieldSpec::rationals()) {}
};

struct WitnessResult {
    std::optional<FlatnessWitness> witness;
    std::string message;
};

// Theorem-1.3-style witness: F = F_{f, m+1} for f of minimal order d >= 2.
// Throws on char p input or when no witness can exist (smooth origin).
FlatnessWitness flat_witness_char0(const AmbientIdeal& ideal, int m, int m_prime);

// Theorem-1.4-style witness in char p. With the reducedness assertion and
// m' < d(m+1) this is a fiber-dimension jump; otherwise a witness element
// built from Lemma 4.7(ii) coefficient transport. Returns an empty result
// with a message when the certificate checks fail (non-reduced or flat
// input). Throws for m = 0 with m' > 1, which the paper leaves open.
WitnessResult flat_witness_charp(const AmbientIdeal& ideal, int m, int m_prime,
                                 bool reduced_asserted);

struct WitnessCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<WitnessCheck> checks;
    bool all_passed() const;
};

// Syntactic certificate checks plus the independent degree-truncated
// local-membership oracle (expected: non-member).
VerificationReport verify_witness(const FlatnessWitness& w, const AmbientIdeal& ideal,
                                  int degree_bound);

// J = M*I' + I*R_{m'} for the pair (m, m') of the witness setting.
LocalIdealSpec make_local_ideal(const AmbientIdeal& ideal, int m, int m_prime);

std::vector<JetVar> jet_ring_variables(int ambient_dim, int m);

struct TangentReport {
    int fiber_dim = 0; // dim pi_1^{-1}(0)
    int embdim = 0;
    int krull_dim = 0;
    bool singular_flagged = false; // fiber_dim > krull_dim
};

// The pi_1 fiber over the origin is the Zariski tangent space.
TangentReport tangent_space_report(const AmbientIdeal& ideal);

} // namespace jetforge
