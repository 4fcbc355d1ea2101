// Copyright 2026 The prequant developers
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

#pragma once

#include <cstdint>
#include <vector>

#include "prequant/dequantize.hpp"
#include "prequant/gaussian.hpp"
#include "prequant/hilbert.hpp"

namespace prequant {

/// Register dimension guard: at most 2^10 basis states.
inline constexpr int kMaxRegisterBits = 10;

/// A normalized state vector over 2^k basis states.
class PureState {
  public:
    explicit PureState(ComplexVector amplitudes);

    const ComplexVector& amplitudes() const { return amplitudes_; }
    Eigen::Index dim() const { return amplitudes_.size(); }

  private:
    ComplexVector amplitudes_;
};

/// A Boolean function {0,1}^n_in -> {0,1}^n_out as an explicit truth table,
/// indexed by the input x in ascending order.
class BooleanFunction {
  public:
    BooleanFunction(int input_bits, int output_bits, std::vector<std::uint32_t> table);

    int input_bits() const { return input_bits_; }
    int output_bits() const { return output_bits_; }
    const std::vector<std::uint32_t>& table() const { return table_; }
    std::uint32_t operator()(std::uint32_t x) const { return table_[x]; }

    /// Truth-table scans; only meaningful for output_bits == 1.
    bool is_constant() const;
    bool is_balanced() const;

  private:
    int input_bits_;
    int output_bits_;
    std::vector<std::uint32_t> table_;
};

/// The reversible XOR oracle |x>|y> -> |x>|y xor f(x)> as a basis-state
/// permutation. Self-inverse by construction.
class OracleUnitary {
  public:
    explicit OracleUnitary(std::vector<std::size_t> permutation);

    std::size_t dim() const { return permutation_.size(); }
    const std::vector<std::size_t>& permutation() const { return permutation_; }

    /// Dense permutation matrix.
    ComplexMatrix matrix() const;

  private:
    std::vector<std::size_t> permutation_;
};

/// Basis index of |x>|y> with the input register in the high bits.
std::size_t basis_index(std::uint32_t x, std::uint32_t y, int output_bits);

/// The equal-weight superposition of all 2^n basis states.
PureState uniform_superposition(int n);

/// The 2^n x 2^n n-fold Hadamard matrix; unitary, symmetric, and its first
/// column is the uniform superposition.
ComplexMatrix hadamard_transform(int n);

OracleUnitary oracle_unitary(const BooleanFunction& f);

PureState apply_oracle(const OracleUnitary& oracle, const PureState& state);

/// The oracle applied to (uniform superposition) x |0...0>: amplitude
/// 2^{-n_in/2} on every |x>|f(x)> and zero elsewhere. All values of f are
/// present in one state.
PureState parallel_evaluation_state(const BooleanFunction& f);

/// Unitary image of a measure: covariance U B U^dagger, dispersion
/// unchanged. A pure-state measure for psi maps to the one for U psi.
GaussianFieldSpec pushforward_spec(const ComplexMatrix& u, const GaussianFieldSpec& spec);

/// The same map realized sample by sample: each field phi becomes U phi.
FieldEnsemble pushforward_samples(const ComplexMatrix& u, const FieldEnsemble& e);

/// Diagonal of the density operator in the computational basis.
RealVector born_probabilities(const DensityOperator& d);

/// Estimates the density operator of the ensemble, draws one basis outcome
/// from its diagonal, and consumes the ensemble: repeating a measurement
/// requires preparing a new random field.
std::size_t measure_and_consume(FieldEnsemble& e, std::uint64_t seed);

enum class Verdict { kConstant, kBalanced };

struct DeutschJozsaResult {
    Verdict verdict;
    double p0_estimate;
};

/// Exact statevector after the Deutsch-Jozsa circuit
/// (H^n x I) U_f (H^n x H) |0...0>|1>.
PureState deutsch_jozsa_statevector(const BooleanFunction& f);

/// The same circuit run entirely on a random field: sample the measure of
/// the initial basis state, push the samples through each unitary, estimate
/// the probability of reading 0...0 on the input register from the
/// empirical density operator, and consume the field. Requires f constant
/// or balanced with one output bit.
DeutschJozsaResult deutsch_jozsa_demo(const BooleanFunction& f, double kappa,
                                      Eigen::Index samples, std::uint64_t seed,
                                      int threads = 1);

}  // namespace prequant
