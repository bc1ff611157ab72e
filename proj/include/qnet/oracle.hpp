// Copyright 2026 The qnet Authors
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

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qnet/circuit.hpp"
#include "qnet/network.hpp"
#include "qnet/pauli.hpp"

namespace qnet::oracle {

using Complex = std::complex<double>;

inline constexpr double kDistributionTolerance = 1e-9;
inline constexpr double kMatrixTolerance = 1e-10;

/// Qubit bound for dense simulation: QNET_MAX_QUBITS if set, else 14.
std::size_t max_qubits();

/// Amplitudes indexed little-endian: bit q of the index is qubit q.
class DenseState {
   public:
    explicit DenseState(std::size_t n);  // |0...0>
    static DenseState from_source(const PureSource &src);

    std::size_t num_qubits() const noexcept {
        return n_;
    }
    const Eigen::VectorXcd &amplitudes() const noexcept {
        return amps_;
    }
    Eigen::VectorXcd &amplitudes() noexcept {
        return amps_;
    }
    double norm_squared() const {
        return amps_.squaredNorm();
    }

    void apply(const Gate &g);
    void apply(const CliffordCircuit &c);
    /// Multiplies by the Pauli matrix (including its phase).
    void apply(const PauliOperator &p);

   private:
    std::size_t n_;
    Eigen::VectorXcd amps_;
};

/// Dense 2^n x 2^n matrix of a Pauli operator.
Eigen::MatrixXcd pauli_matrix(const PauliOperator &p);

/// Weighted density operator of a source, components summed with weights.
Eigen::MatrixXcd source_density(const std::vector<Component> &components);

/// Float distribution by full amplitude simulation of every component draw.
/// Keys match run_quantum's. Throws TooManyQubits.
std::map<std::string, double> statevector_run(const NetworkSpec &spec);

/// Superoperator on vectorized d x d operators, column stacking: entry
/// (i + d*j) holds rho_ij.
struct ChannelMatrix {
    std::size_t dim = 0;
    Eigen::MatrixXcd m;

    /// `dim d` then d^4 `re im` pairs, row-major.
    static ChannelMatrix parse(std::string_view text);
    std::string str() const;

    static ChannelMatrix identity(std::size_t d);
    static ChannelMatrix dephasing(std::size_t d);
    static ChannelMatrix unitary(const Eigen::MatrixXcd &u);
    static ChannelMatrix kraus(const std::vector<Eigen::MatrixXcd> &ops);
    /// Classical stochastic map: column-stochastic t[i][j] = Pr(i | j).
    static ChannelMatrix stochastic(const Eigen::MatrixXd &t);

    /// this after first: (this o first)
    ChannelMatrix after(const ChannelMatrix &first) const;
    Eigen::MatrixXcd choi() const;
};

/// Throws NotTracePreserving or NotCompletelyPositive, then returns whether
/// dephasing after the channel equals dephasing around it.
bool check_classically_simulatable(const ChannelMatrix &ch);

/// Rank of the amplitude matrix split into `left` and the remaining qubits.
std::size_t schmidt_rank(const DenseState &state, const std::vector<std::size_t> &left);

}  // namespace qnet::oracle
