// Copyright 2026 The pmdkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PMDKIT_AUTH_H
#define PMDKIT_AUTH_H

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "pmdkit/aqec.h"
#include "pmdkit/densesim.h"
#include "pmdkit/rng.h"
#include "pmdkit/stabilizer.h"

namespace pmdkit {

// ---------------------------------------------------------------------------------------------
// Classical non-malleable codes against bit-wise tampering.

/// Per-bit tampering tag.
enum class Tamper : uint8_t { kSet0 = 0, kSet1 = 1, kKeep = 2, kFlip = 3 };

struct TamperFunction {
    std::vector<Tamper> tags;

    size_t size() const { return tags.size(); }
    uint64_t apply(uint64_t word) const;
    bool is_keep_all() const;

    static TamperFunction keep_all(size_t n);
    /// Every bit set to the matching bit of `word`.
    static TamperFunction constant(uint64_t word, size_t n);
    /// Base-4 digit i of `index` is the tag of bit i; enumerates all 4^n deterministic tamperings.
    static TamperFunction from_index(uint64_t index, size_t n);

    /// One character per bit: 0, 1, k (keep), f (flip).
    std::string str() const;
    static TamperFunction parse(const std::string &text);
};

/// Randomized code: Enc(s, rho) for s in {0,1}^k and rho in {0,1}^r, codewords of n bits.
/// Bit i of a word is (word >> i) & 1.
struct NmCode {
    size_t k = 0;
    size_t r = 0;
    size_t n = 0;
    std::vector<uint64_t> enc;  // index (s << r) | rho
    std::vector<int64_t> dec;   // 2^n entries, kNmReject for rejection

    static constexpr int64_t kNmReject = -1;

    uint64_t encode(uint64_t s, uint64_t rho) const { return enc.at((s << r) | rho); }
    int64_t decode(uint64_t word) const { return dec.at(word); }
    /// Throws std::invalid_argument unless sizes match and Dec(Enc(s, rho)) = s everywhere.
    void validate() const;

    /// Header "nm k=<k> r=<r> n=<n>", then "enc <s> <rho> <word>" lines and "dec <word> <s>" lines,
    /// bit strings written bit 0 first ("-" for an empty rho). Words without a dec line reject.
    std::string str() const;
    static NmCode parse(const std::string &text);
};

/// Random injective encoding table; every word outside the image rejects.
NmCode random_nm_code(size_t k, size_t r, size_t n, Rng &rng);

/// Exact distribution of Dec(f(Enc(s, rho))) over uniform rho. Entry 2^k is rejection.
std::vector<double> nm_tamper_distribution(const NmCode &code, const TamperFunction &f, uint64_t s);

/// Simulator distribution q_f over messages, Rej and "same", and its distance
/// max_s TV(D_s, p_{f,s}).
struct NmDecomposition {
    std::vector<double> q;  // [0, 2^k) messages, 2^k reject, 2^k + 1 same
    double distance = 0;
    bool optimal = false;   // true when solved by LP, false for the greedy feasible point

    double same() const { return q.back(); }
    double reject() const { return q[q.size() - 2]; }
    double other() const { return 1.0 - same() - reject(); }
};

/// LP optimum when k <= 3; otherwise a greedy feasible decomposition (its distance is an upper bound
/// on the optimum).
NmDecomposition nm_decompose(const NmCode &code, const TamperFunction &f);

struct NmVerifyResult {
    double epsilon = 0;
    TamperFunction worst;
    size_t distinct_distributions = 0;
};

/// Max over all 4^n deterministic tamperings of the LP optimum. Guards k <= 3, n <= 8.
NmVerifyResult nm_verify(const NmCode &code);

struct NmSearchResult {
    NmCode code;
    double epsilon = 0;
    std::vector<double> best_so_far;  // after each trial
};

/// Best of `trials` random tables ranked by nm_verify; the first strict improvement wins.
NmSearchResult nm_search(size_t k, size_t r, size_t n, size_t trials, Rng &rng);

// ---------------------------------------------------------------------------------------------
// Single-qubit Pauli analysis. Pauli order is I, X, Y, Z with Y = [[0, -i], [i, 0]].

using PauliCoeffs = std::array<cplx, 4>;
using PauliProbs = std::array<double, 4>;

extern const char kPauliSymbols[4];
CMat pauli2(int sigma);

/// c_sigma^mu = tr(sigma^dag K_mu) / 2, one entry per Kraus operator.
std::vector<PauliCoeffs> pauli_decompose_channel(const QuantumChannel &ch);
CMat pauli_reconstruct(const PauliCoeffs &c);

/// p_sigma = sum_mu |c_sigma^mu|^2.
PauliProbs twirl_channel(const QuantumChannel &ch);
std::vector<PauliProbs> twirl_channels(const std::vector<QuantumChannel> &chs);

/// sum_ij |i><j| (x) Lambda(|i><j|) for a single-qubit channel (reference qubit first).
CMat choi_matrix(const QuantumChannel &ch);
/// Choi matrix of rho -> 1/4 sum_P P Lambda(P rho P) P.
CMat pad_average_choi(const QuantumChannel &ch);
/// Choi matrix of rho -> sum_E p_E E rho E.
CMat pauli_channel_choi(const PauliProbs &p);

struct EtaPauliReport {
    double eta = 0;
    char best_pauli = 'I';
};
/// eta = 1 - max_E p_E; ties go to the first Pauli in I, X, Y, Z order.
EtaPauliReport eta_classify(const QuantumChannel &ch);

/// Average of P rho P^dag over all Paulis on `qubits`, applied as one single-qubit twirl per qubit.
CMat pad_average(const CMat &rho, size_t n, const std::vector<size_t> &qubits);
/// Trace out the leading `n_front` qubits of an n-qubit density matrix.
CMat trace_out_front(const CMat &rho, size_t n_front, size_t n);

// ---------------------------------------------------------------------------------------------
// Packing sums.

using Rational = boost::multiprecision::cpp_rational;

/// M[s][t] = sum_mu |c_s^mu| |c_t^mu|. Both packing sums depend on a channel only through this matrix.
template <class T>
using PauliGram = std::array<std::array<T, 4>, 4>;

PauliGram<double> pauli_gram(const QuantumChannel &ch);
/// Diagonal Gram of the Pauli channel with Kraus sqrt(p_s) s.
PauliGram<Rational> pauli_gram_from_probs(const std::array<Rational, 4> &p);
/// Gram of a channel given by exact Kraus coefficient magnitudes |c_s^mu|.
PauliGram<Rational> pauli_gram_from_magnitudes(const std::vector<std::array<Rational, 4>> &mags);
/// w * a + (1 - w) * b, the Gram of the convex mixture of two channels.
PauliGram<Rational> mix_grams(const PauliGram<Rational> &a, const PauliGram<Rational> &b, const Rational &w);
template <class T>
T gram_eta(const PauliGram<T> &g);

/// sum over F in S(Q) of sum_mu |c_F^mu|^2. Guard b <= 8.
template <class T>
T stabilizer_mass(const std::vector<PauliGram<T>> &grams, const StabilizerCode &code);
double stabilizer_mass(const std::vector<QuantumChannel> &chs, const StabilizerCode &code);
/// sum_mu (sum over F in N(Q) of |c_F^mu|)^2, with N(Q) taken modulo phase. Guard b <= 8.
template <class T>
T normalizer_l1_mass(const std::vector<PauliGram<T>> &grams, const StabilizerCode &code);
double normalizer_l1_mass(const std::vector<QuantumChannel> &chs, const StabilizerCode &code);

/// Outcome of one packing inequality, compared exactly.
struct PackingCheck {
    bool holds = true;
    Rational lhs;
    double lhs_value = 0;
    double bound_value = 0;  // bound at the tightest threshold tested
    std::string bound_expr;
};

/// Stabilizer packing: for every threshold just below a channel's eta_j, with T = #{i : eta_i >= eta_j},
/// mass <= (1 - eta_j)^min(T, d* - exponent_shift). The stated inequality has exponent_shift = 0.
PackingCheck check_stabilizer_packing(const std::vector<PauliGram<Rational>> &grams, const StabilizerCode &code,
                                      size_t d_star, size_t exponent_shift = 0);
/// Normalizer packing: with eta* the smallest eta such that at least b - d* channels are eta-Pauli,
/// l1 mass <= 2^(8 eta* b). Compared as lhs^den <= 2^(8 num b); throws if den > 4096.
PackingCheck check_normalizer_packing(const std::vector<PauliGram<Rational>> &grams, const StabilizerCode &code,
                                      size_t d_star);

// ---------------------------------------------------------------------------------------------
// t-wise independent pad.

/// Seed bits for t coefficients of GF(2^w).
inline size_t twise_seed_length(size_t t, int w) { return t * static_cast<size_t>(w); }
/// Seed = t coefficients (w bits each, coefficient j at bits [j w, (j + 1) w)) of a degree t - 1
/// polynomial; output = evaluations at x_j = j concatenated and truncated to `length`.
/// Throws std::invalid_argument when more than 2^w points are needed.
BitVec twise_pad(const BitVec &seed, size_t t, size_t length, int w);

/// Exhaustive check over all 2^(t w) seeds that every set of `order` output bits is exactly uniform.
/// Returns the number of bit sets checked, or throws std::logic_error naming the first failure.
size_t twise_check_uniform(size_t t, size_t length, int w, size_t order);

// ---------------------------------------------------------------------------------------------
// Pauli one-time pad indexed by 2N bits: bits [0, N) are the X part, [N, 2N) the Z part.

PauliOperator pad_pauli(const BitVec &key, size_t nq);
PauliOperator pad_pauli(uint64_t key, size_t nq);

/// Per-wire qubit-wise attack on a quantum register plus a bit-wise tampering of the classical wires.
struct WireAttack {
    std::vector<QuantumChannel> quantum;  // one single-qubit channel (n = 1) per quantum wire
    TamperFunction classical;

    static WireAttack identity(size_t nq, size_t nbits);
};

// ---------------------------------------------------------------------------------------------
// Rate-1/3 protocol: Enc = E_s Enc_NM(s) (x) P^s Enc_Q~(psi) P^s, Enc_Q~ = Enc_Q o Enc_PMD.

struct Auth13Setup {
    ComposedCode code;
    NmCode nm;  // nm.k == 2 * code.n()

    size_t nq() const { return code.n(); }
    size_t key_bits() const { return 2 * code.n(); }
};

Auth13Setup make_auth13(const ComposedCode &code, const NmCode &nm);

enum class Auth13Mode {
    kExhaustive,  // enumerate every key and randomness string (key_bits <= 8)
    kTwirl,       // per-qubit twirl and the encryption identity, split on nm_decompose
};

struct Auth13Report {
    double p_accept = 0;
    double p_accept_wrong = 0;  // Tr[((I - psi) (x) Acc) tau]
    double p_reject = 0;
    double fidelity_given_accept = 0;
    bool exact = true;  // false when the twirl path used a decomposition with nonzero distance

    // Branch accounting.
    double nm_distance = 0;
    double q_same = 0;
    double q_reject = 0;
    double q_other = 0;
    double recovered_accept_wrong = 0;  // key-recovered branch
    double recovered_accept = 0;
    double uncorrelated_accept = 0;     // sum over s~ of q(s~) times product-state acceptance
    double bound = 0;                   // nm_distance + q_same * recovered_accept_wrong + uncorrelated_accept
};

/// `psi` is a state on k message qubits followed by any number of reference qubits.
Auth13Report auth13_attack_harness(const Auth13Setup &setup, const WireAttack &attack, const CVec &psi,
                                   Auth13Mode mode);

/// Codeword distribution on the quantum register averaged over all keys (guard key_bits <= 12).
CMat auth13_encoded_average(const Auth13Setup &setup, const CVec &psi);

/// Structural decoder for one key guess: unpad, measure the outer syndrome, Enc_Q^dag, project onto the
/// PMD code space. Returns the accepted (unnormalized) state on message plus reference qubits.
CVec auth13_decode_branch(const Auth13Setup &setup, const PauliOperator &pad, CVec v, size_t nref);

/// Tr[Pi (rho_0 (x) ... (x) rho_{N-1})] with Pi = V V^dag the composed code space projector.
double product_state_overlap(const ComposedCode &code, const std::vector<CMat> &marginals);

/// Single-qubit marginals of a pure state.
std::vector<CMat> qubit_marginals(const CVec &v, size_t n);

// ---------------------------------------------------------------------------------------------
// Rate-1 construction at toy scale: outer code Q_o, blocks of k_PMD qubits each encoded into a PMD and
// an inner code Q_in, pseudorandom pad P^{G(s)} from twise_pad, NM-encoded seed.

struct Auth1Setup {
    StabilizerCode outer;         // [[n_out, k]]
    ComposedCode inner;           // PMD inside Q_in; message k_PMD
    size_t blocks = 0;            // n_out / k_PMD
    size_t t = 0;
    int w = 0;
    NmCode nm;                    // nm.k == twise_seed_length(t, w)

    size_t nq() const { return blocks * inner.n(); }
    size_t k() const { return outer.k(); }
};

Auth1Setup make_auth1(const StabilizerCode &outer, const ComposedCode &inner, size_t t, int w, const NmCode &nm);

/// Encodes psi (k message qubits then reference qubits) for one seed, without the classical part.
CVec auth1_encode(const Auth1Setup &setup, const CVec &psi, const BitVec &seed);

struct Auth1Decoded {
    CVec accepted;                     // unnormalized, on k message qubits then the reference qubits
    std::vector<double> block_accept;  // |Pi_j v|^2 for each inner block projected on its own
    bool inner_accept_possible = true; // false when some inner block rejects with certainty
};

/// Dec for one seed guess on a pure branch with `nref` reference qubits: undo the pad, project every inner
/// block onto its code space, then project onto the outer code and decode. Any rejection yields zero.
Auth1Decoded auth1_decode(const Auth1Setup &setup, CVec v, const BitVec &seed, size_t nref);

struct Auth1Report {
    double p_accept = 0;
    double p_accept_wrong = 0;
    double fidelity_given_accept = 0;
    std::vector<double> block_accept;  // marginal acceptance of each inner block, key recovered
};

/// Exact over every seed and randomness string (seed length <= 10, nq <= 10).
Auth1Report auth1_attack_harness(const Auth1Setup &setup, const WireAttack &attack, const CVec &psi);

}  // namespace pmdkit

#endif
