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

#include "qnet/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "qnet/error.hpp"

namespace qnet::oracle {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_bound(std::size_t n) {
    if (n > max_qubits()) {
        throw Error(ErrorKind::TooManyQubits,
                    std::to_string(n) + " qubits exceeds the dense bound " + std::to_string(max_qubits()));
    }
}

}  // namespace

std::size_t max_qubits() {
    if (const char *env = std::getenv("QNET_MAX_QUBITS")) {
        char *end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 31) {
            return v;
        }
    }
    return 14;
}

DenseState::DenseState(std::size_t n) : n_(n) {
    check_bound(n);
    amps_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    amps_(0) = 1;
}

void DenseState::apply(const Gate &g) {
    const Eigen::Index dim = amps_.size();
    const Eigen::Index ma = Eigen::Index{1} << g.a;
    const Eigen::Index mb = Eigen::Index{1} << g.b;
    switch (g.kind) {
        case GateKind::H:
            for (Eigen::Index i = 0; i < dim; i++) {
                if (!(i & ma)) {
                    Complex a = amps_(i), b = amps_(i | ma);
                    amps_(i) = kInvSqrt2 * (a + b);
                    amps_(i | ma) = kInvSqrt2 * (a - b);
                }
            }
            break;
        case GateKind::S:
            for (Eigen::Index i = 0; i < dim; i++) {
                if (i & ma) {
                    amps_(i) *= Complex(0, 1);
                }
            }
            break;
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z: {
            const char c = g.kind == GateKind::X ? 'X' : g.kind == GateKind::Y ? 'Y' : 'Z';
            apply(PauliOperator::single(n_, g.a, c));
            break;
        }
        case GateKind::CX:
            for (Eigen::Index i = 0; i < dim; i++) {
                if ((i & ma) && !(i & mb)) {
                    std::swap(amps_(i), amps_(i | mb));
                }
            }
            break;
        case GateKind::CZ:
            for (Eigen::Index i = 0; i < dim; i++) {
                if ((i & ma) && (i & mb)) {
                    amps_(i) = -amps_(i);
                }
            }
            break;
    }
}

void DenseState::apply(const CliffordCircuit &c) {
    for (const auto &g : c.gates()) {
        apply(g);
    }
}

void DenseState::apply(const PauliOperator &p) {
    if (p.size() != n_) {
        throw Error(ErrorKind::DimensionError, "Pauli width does not match the state");
    }
    Eigen::Index xmask = 0, zmask = 0;
    int ys = 0;
    for (std::size_t q = 0; q < n_; q++) {
        xmask |= p.x(q) ? Eigen::Index{1} << q : 0;
        zmask |= p.z(q) ? Eigen::Index{1} << q : 0;
        ys += p.x(q) && p.z(q);
    }
    // Y = i X Z as matrices, so the global factor is i^(phase + #Y).
    static const Complex powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Complex global = powers[(p.phase() + ys) & 3];
    Eigen::VectorXcd out(amps_.size());
    for (Eigen::Index i = 0; i < amps_.size(); i++) {
        int parity = __builtin_popcountll(static_cast<unsigned long long>(i & zmask)) & 1;
        out(i ^ xmask) = global * (parity ? -amps_(i) : amps_(i));
    }
    amps_ = std::move(out);
}

DenseState DenseState::from_source(const PureSource &src) {
    DenseState st(src.width);
    if (src.form == PureSource::Form::Preparation) {
        st.apply(src.preparation);
        return st;
    }
    std::vector<PauliOperator> gens = src.tableau().stabilizers();
    const Eigen::Index dim = Eigen::Index{1} << src.width;
    for (Eigen::Index b = 0; b < dim; b++) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
        v(b) = 1;
        for (const auto &g : gens) {
            DenseState tmp(src.width);
            tmp.amps_ = v;
            tmp.apply(g);
            v = 0.5 * (v + tmp.amps_);
        }
        double norm = v.norm();
        if (norm > 1e-6) {
            st.amps_ = v / norm;
            return st;
        }
    }
    throw Error(ErrorKind::Infeasible, "projector onto the stabilizer state vanished");
}

Eigen::MatrixXcd pauli_matrix(const PauliOperator &p) {
    const Eigen::Index dim = Eigen::Index{1} << p.size();
    Eigen::MatrixXcd m(dim, dim);
    for (Eigen::Index b = 0; b < dim; b++) {
        DenseState st(p.size());
        st.amplitudes().setZero();
        st.amplitudes()(b) = 1;
        st.apply(p);
        m.col(b) = st.amplitudes();
    }
    return m;
}

Eigen::MatrixXcd source_density(const std::vector<Component> &components) {
    if (components.empty()) {
        throw Error(ErrorKind::BadWeights, "no components");
    }
    std::size_t w = components.front().state.width;
    const Eigen::Index dim = Eigen::Index{1} << w;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &c : components) {
        Eigen::VectorXcd v = DenseState::from_source(c.state).amplitudes();
        rho += c.weight.convert_to<double>() * (v * v.adjoint());
    }
    return rho;
}

std::map<std::string, double> statevector_run(const NetworkSpec &spec) {
    validate(spec);
    const std::size_t n = spec.num_qubits();
    check_bound(n);
    const Eigen::Index dim = Eigen::Index{1} << n;
    std::map<const PureSource *, Eigen::VectorXcd> cache;
    for (const auto &e : spec.edges) {
        for (const auto &c : e.source.components) {
            cache.emplace(&c.state, DenseState::from_source(c.state).amplitudes());
        }
    }
    const CliffordCircuit circuit = spec.global_circuit();
    std::map<std::string, double> out;
    for_each_draw(spec, [&](const Rational &weight, const std::vector<const PureSource *> &states,
                            const std::vector<std::string> &labels) {
        DenseState st(n);
        auto &amps = st.amplitudes();
        for (Eigen::Index b = 0; b < dim; b++) {
            if (b >> spec.num_vertices) {
                amps(b) = 0;  // ancillas start in |0>
                continue;
            }
            Complex a = 1;
            for (std::size_t e = 0; e < states.size(); e++) {
                Eigen::Index local = 0;
                const auto &vs = spec.edges[e].vertices;
                for (std::size_t j = 0; j < vs.size(); j++) {
                    local |= ((b >> vs[j]) & 1) << j;
                }
                a *= cache.at(states[e])(local);
            }
            amps(b) = a;
        }
        st.apply(circuit);
        double w = weight.convert_to<double>();
        for (Eigen::Index b = 0; b < dim; b++) {
            double p = std::norm(amps(b));
            if (p < 1e-15) {
                continue;
            }
            BitVec bits(n);
            for (std::size_t q = 0; q < n; q++) {
                bits.set(q, (b >> q) & 1);
            }
            out[assemble_key(spec, bits, labels)] += w * p;
        }
    });
    return out;
}

ChannelMatrix ChannelMatrix::parse(std::string_view text) {
    std::string body;
    for (std::size_t start = 0; start < text.size();) {
        std::size_t end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        body.append(line.substr(0, line.find('#')));
        body.push_back('\n');
        start = end + 1;
    }
    std::istringstream in{body};
    std::string word;
    std::size_t d = 0;
    if (!(in >> word >> d) || word != "dim" || d == 0) {
        throw ParseError(1, "expected 'dim d'");
    }
    ChannelMatrix ch;
    ch.dim = d;
    const Eigen::Index dd = static_cast<Eigen::Index>(d * d);
    ch.m.resize(dd, dd);
    for (Eigen::Index r = 0; r < dd; r++) {
        for (Eigen::Index c = 0; c < dd; c++) {
            double re, im;
            if (!(in >> re >> im)) {
                throw ParseError(0, "expected " + std::to_string(dd * dd) + " 're im' pairs");
            }
            ch.m(r, c) = Complex(re, im);
        }
    }
    if (in >> word) {
        throw ParseError(0, "trailing data after channel entries");
    }
    return ch;
}

std::string ChannelMatrix::str() const {
    std::ostringstream os;
    os.precision(17);
    os << "dim " << dim << "\n";
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            os << (c ? "  " : "") << m(r, c).real() << " " << m(r, c).imag();
        }
        os << "\n";
    }
    return os.str();
}

ChannelMatrix ChannelMatrix::identity(std::size_t d) {
    const Eigen::Index dd = static_cast<Eigen::Index>(d * d);
    return ChannelMatrix{d, Eigen::MatrixXcd::Identity(dd, dd)};
}

ChannelMatrix ChannelMatrix::dephasing(std::size_t d) {
    const Eigen::Index dd = static_cast<Eigen::Index>(d * d);
    ChannelMatrix ch{d, Eigen::MatrixXcd::Zero(dd, dd)};
    for (std::size_t i = 0; i < d; i++) {
        Eigen::Index k = static_cast<Eigen::Index>(i + d * i);
        ch.m(k, k) = 1;
    }
    return ch;
}

ChannelMatrix ChannelMatrix::kraus(const std::vector<Eigen::MatrixXcd> &ops) {
    if (ops.empty()) {
        throw Error(ErrorKind::DimensionError, "no Kraus operators");
    }
    const Eigen::Index d = ops.front().rows();
    ChannelMatrix ch{static_cast<std::size_t>(d), Eigen::MatrixXcd::Zero(d * d, d * d)};
    // vec(K rho K^dagger) = (conj(K) kron K) vec(rho) for column stacking.
    for (const auto &k : ops) {
        for (Eigen::Index a = 0; a < d; a++) {
            for (Eigen::Index b = 0; b < d; b++) {
                ch.m.block(a * d, b * d, d, d) += std::conj(k(a, b)) * k;
            }
        }
    }
    return ch;
}

ChannelMatrix ChannelMatrix::unitary(const Eigen::MatrixXcd &u) {
    return kraus({u});
}

ChannelMatrix ChannelMatrix::stochastic(const Eigen::MatrixXd &t) {
    const Eigen::Index d = t.rows();
    ChannelMatrix ch{static_cast<std::size_t>(d), Eigen::MatrixXcd::Zero(d * d, d * d)};
    for (Eigen::Index i = 0; i < d; i++) {
        for (Eigen::Index j = 0; j < d; j++) {
            ch.m(i + d * i, j + d * j) = t(i, j);
        }
    }
    return ch;
}

ChannelMatrix ChannelMatrix::after(const ChannelMatrix &first) const {
    if (first.dim != dim) {
        throw Error(ErrorKind::DimensionError, "channel dimensions differ");
    }
    return ChannelMatrix{dim, m * first.m};
}

Eigen::MatrixXcd ChannelMatrix::choi() const {
    const Eigen::Index d = static_cast<Eigen::Index>(dim);
    // J = sum_{k,l} E(|k><l|) kron |k><l|; row (i, k), column (j, l).
    Eigen::MatrixXcd j(d * d, d * d);
    for (Eigen::Index i = 0; i < d; i++) {
        for (Eigen::Index k = 0; k < d; k++) {
            for (Eigen::Index jj = 0; jj < d; jj++) {
                for (Eigen::Index l = 0; l < d; l++) {
                    j(i * d + k, jj * d + l) = m(i + d * jj, k + d * l);
                }
            }
        }
    }
    return j;
}

bool check_classically_simulatable(const ChannelMatrix &ch) {
    const Eigen::Index d = static_cast<Eigen::Index>(ch.dim);
    if (d == 0 || ch.m.rows() != d * d || ch.m.cols() != d * d) {
        throw Error(ErrorKind::DimensionError, "channel matrix is not d^2 x d^2");
    }
    // Trace of the image of |k><l| must be delta_kl.
    for (Eigen::Index k = 0; k < d; k++) {
        for (Eigen::Index l = 0; l < d; l++) {
            Complex tr = 0;
            for (Eigen::Index i = 0; i < d; i++) {
                tr += ch.m(i + d * i, k + d * l);
            }
            if (std::abs(tr - Complex(k == l ? 1.0 : 0.0, 0)) > kMatrixTolerance) {
                throw Error(ErrorKind::NotTracePreserving, "trace is not preserved");
            }
        }
    }
    Eigen::MatrixXcd j = ch.choi();
    if ((j - j.adjoint()).cwiseAbs().maxCoeff() > kMatrixTolerance) {
        throw Error(ErrorKind::NotCompletelyPositive, "Choi matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(0.5 * (j + j.adjoint()));
    if (eig.eigenvalues().minCoeff() < -kMatrixTolerance) {
        throw Error(ErrorKind::NotCompletelyPositive, "Choi matrix has a negative eigenvalue");
    }
    ChannelMatrix delta = ChannelMatrix::dephasing(ch.dim);
    Eigen::MatrixXcd lhs = delta.m * ch.m;
    Eigen::MatrixXcd rhs = lhs * delta.m;
    return (lhs - rhs).cwiseAbs().maxCoeff() <= kMatrixTolerance;
}

std::size_t schmidt_rank(const DenseState &state, const std::vector<std::size_t> &left) {
    const std::size_t n = state.num_qubits();
    check_bound(n);
    std::vector<bool> is_left(n, false);
    for (auto q : left) {
        if (q >= n) {
            throw Error(ErrorKind::IndexOutOfRange, "qubit " + std::to_string(q) + " out of range");
        }
        is_left[q] = true;
    }
    std::vector<std::size_t> right;
    for (std::size_t q = 0; q < n; q++) {
        if (!is_left[q]) {
            right.push_back(q);
        }
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(Eigen::Index{1} << left.size(), Eigen::Index{1} << right.size());
    const auto &amps = state.amplitudes();
    for (Eigen::Index b = 0; b < amps.size(); b++) {
        Eigen::Index l = 0, r = 0;
        for (std::size_t i = 0; i < left.size(); i++) {
            l |= ((b >> left[i]) & 1) << i;
        }
        for (std::size_t i = 0; i < right.size(); i++) {
            r |= ((b >> right[i]) & 1) << i;
        }
        m(l, r) = amps(b);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); i++) {
        rank += svd.singularValues()(i) > 1e-9;
    }
    return rank;
}

}  // namespace qnet::oracle
