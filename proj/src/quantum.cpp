#include "mur/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "mur/errors.hpp"
#include "mur/numkernel.hpp"

namespace mur {
namespace {

constexpr double kClampTol = 1e-12;
constexpr double kSumTol = 1e-9;
constexpr double kNormTol = 1e-10;
constexpr double kOrthoTol = 1e-10;

} // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> e, double declared_weight)
    : entries(std::move(e)), weight(declared_weight) {
    for (double& x : entries) {
        if (x < -kClampTol) {
            throw InputError("probability entry below -1e-12");
        }
        if (x < 0.0) x = 0.0;
    }
    if (std::abs(sum() - weight) > kSumTol) {
        throw InputError("probability entries do not add up to the declared weight");
    }
}

double ProbabilityVector::sum() const {
    long double s = 0.0L;
    for (double x : entries) s += x;
    return static_cast<double>(s);
}

double ProbabilityVector::max_entry() const {
    if (entries.empty()) throw InputError("max of an empty distribution");
    return *std::max_element(entries.begin(), entries.end());
}

PureState::PureState(int d, std::vector<cplx> amps) : dim(d), amplitudes(std::move(amps)) {
    if (dim < 1 || amplitudes.size() != static_cast<std::size_t>(dim)) {
        throw DimensionError("pure state amplitude count does not match dimension");
    }
    double n2 = 0.0;
    for (const cplx& a : amplitudes) n2 += std::norm(a);
    if (std::abs(n2 - 1.0) > kNormTol) {
        throw InputError("pure state is not normalized");
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols()) throw InvalidMatrixError("density matrix must be square");
    if (!matrix_.is_hermitian(1e-12)) throw InvalidMatrixError("density matrix must be Hermitian");
    if (std::abs(matrix_.trace().real() - 1.0) > 1e-10 ||
        std::abs(matrix_.trace().imag()) > 1e-10) {
        throw InvalidMatrixError("density matrix must have unit trace");
    }
    if (hermitian_eigmin(matrix_) < -1e-10) {
        throw InvalidMatrixError("density matrix must be positive semidefinite");
    }
    matrix_ = hermitize(matrix_);
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    ComplexMatrix m(psi.dim, psi.dim);
    for (int i = 0; i < psi.dim; ++i)
        for (int j = 0; j < psi.dim; ++j)
            m(i, j) = psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
    return DensityMatrix(std::move(m));
}

OrthonormalBasis::OrthonormalBasis(ComplexMatrix columns, std::string label)
    : columns_(std::move(columns)), label_(std::move(label)) {
    if (columns_.rows() != columns_.cols() || columns_.rows() < 1) {
        throw DimensionError("basis matrix must be square");
    }
    const int d = columns_.rows();
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            cplx ip = 0.0;
            for (int r = 0; r < d; ++r) ip += std::conj(columns_(r, j)) * columns_(r, k);
            const cplx expected = (j == k) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            if (std::abs(ip - expected) > kOrthoTol) {
                throw InputError("basis '" + label_ + "' is not orthonormal");
            }
        }
    }
}

ProbabilityVector born_probabilities(const PureState& psi, const OrthonormalBasis& basis) {
    if (psi.dim != basis.dim()) throw DimensionError("state/basis dimension mismatch");
    const int d = psi.dim;
    std::vector<double> p(d);
    for (int j = 0; j < d; ++j) {
        cplx amp = 0.0;
        for (int r = 0; r < d; ++r) amp += std::conj(basis.vector_entry(r, j)) * psi.amplitudes[r];
        p[j] = std::clamp(std::norm(amp), 0.0, 1.0);
    }
    return ProbabilityVector(std::move(p), 1.0);
}

ProbabilityVector born_probabilities(const DensityMatrix& rho, const OrthonormalBasis& basis) {
    if (rho.dim() != basis.dim()) throw DimensionError("state/basis dimension mismatch");
    const int d = rho.dim();
    std::vector<double> p(d);
    for (int j = 0; j < d; ++j) {
        cplx val = 0.0;
        for (int r = 0; r < d; ++r) {
            cplx row = 0.0;
            for (int c = 0; c < d; ++c) row += rho.matrix()(r, c) * basis.vector_entry(c, j);
            val += std::conj(basis.vector_entry(r, j)) * row;
        }
        p[j] = std::clamp(val.real(), 0.0, 1.0);
    }
    return ProbabilityVector(std::move(p), 1.0);
}

PureState state_family(double theta, double phi) {
    std::vector<cplx> amps = {
        std::cos(theta) * std::sin(phi),
        std::cos(theta) * std::cos(phi),
        std::sin(theta),
        0.0,
    };
    // renormalize: |cos t|^2 (sin^2 f + cos^2 f) + sin^2 t = 1 exactly in
    // real arithmetic, but trig roundoff can leave a few ulp
    double n = 0.0;
    for (const cplx& a : amps) n += std::norm(a);
    n = std::sqrt(n);
    for (cplx& a : amps) a /= n;
    return PureState(4, std::move(amps));
}

namespace {

ComplexMatrix columns_from(const std::vector<std::vector<cplx>>& cols) {
    const int d = static_cast<int>(cols.size());
    ComplexMatrix m(d, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) m(i, j) = cols[j][i];
    return m;
}

std::vector<OrthonormalBasis> make_builtin_bases() {
    const double h = 0.5;
    const cplx i{0.0, 1.0};
    const double r2 = 1.0 / std::sqrt(2.0);
    const double r3 = 1.0 / std::sqrt(3.0);
    const double r6 = 1.0 / std::sqrt(6.0);

    std::vector<OrthonormalBasis> out;
    out.emplace_back(ComplexMatrix::identity(4), "A");
    out.emplace_back(columns_from({
                         {h, -i * h, -i * h, h},
                         {h, -i * h, i * h, -h},
                         {h, i * h, -i * h, -h},
                         {h, i * h, i * h, h},
                     }),
                     "B");
    out.emplace_back(ComplexMatrix::identity(4), "C1");
    out.emplace_back(columns_from({
                         {1.0, 0.0, 0.0, 0.0},
                         {0.0, 0.0, r2, r2},
                         {0.0, r3, r3, -r3},
                         {0.0, 2.0 * r6, -r6, r6},
                     }),
                     "C2");
    out.emplace_back(columns_from({
                         {0.0, 0.0, r2, r2},
                         {0.0, 1.0, 0.0, 0.0},
                         {r3, 0.0, r3, -r3},
                         {2.0 * r6, 0.0, -r6, r6},
                     }),
                     "C3");
    return out;
}

} // namespace

const std::vector<OrthonormalBasis>& builtin_bases() {
    static const std::vector<OrthonormalBasis> bases = make_builtin_bases();
    return bases;
}

const OrthonormalBasis& builtin_basis(const std::string& name) {
    for (const OrthonormalBasis& b : builtin_bases())
        if (b.label() == name) return b;
    throw InputError("unknown built-in basis '" + name + "'");
}

bool is_builtin_basis_name(const std::string& name) {
    for (const OrthonormalBasis& b : builtin_bases())
        if (b.label() == name) return true;
    return false;
}

ComplexMatrix overlap_matrix(const OrthonormalBasis& b1, const OrthonormalBasis& b2) {
    if (b1.dim() != b2.dim()) throw DimensionError("overlap of bases with different dimensions");
    return b1.matrix().adjoint() * b2.matrix();
}

PureState haar_random_state(int dim, Rng& rng) {
    if (dim < 2) throw DimensionError("Haar sampling needs dimension >= 2");
    std::vector<cplx> amps(dim);
    double n2 = 0.0;
    for (cplx& a : amps) {
        a = cplx{rng.normal(), rng.normal()};
        n2 += std::norm(a);
    }
    const double n = std::sqrt(n2);
    for (cplx& a : amps) a /= n;
    return PureState(dim, std::move(amps));
}

PureState haar_random_state(int dim, std::uint64_t seed) {
    Rng rng(seed);
    return haar_random_state(dim, rng);
}

DensityMatrix random_mixed_state(int dim, Rng& rng) {
    const int terms = 2 + static_cast<int>(rng.below(3));
    std::vector<double> w(terms);
    double wsum = 0.0;
    for (double& x : w) {
        x = -std::log(rng.uniform01_open0()); // flat Dirichlet via exponentials
        wsum += x;
    }
    ComplexMatrix m(dim, dim);
    for (int t = 0; t < terms; ++t) {
        const PureState psi = haar_random_state(dim, rng);
        const double weight = w[t] / wsum;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                m(i, j) += weight * psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
    }
    return DensityMatrix(std::move(m));
}

OrthonormalBasis parse_basis_json(std::istream& in, const std::string& origin) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("cannot parse basis file " + origin + ": " + e.what());
    }
    try {
        const int dim = j.at("dim").get<int>();
        if (dim < 1 || dim > kMaxKernelDim) {
            throw InputError("basis file " + origin + ": dim out of range");
        }
        const auto& vectors = j.at("vectors");
        if (!vectors.is_array() || vectors.size() != static_cast<std::size_t>(dim)) {
            throw InputError("basis file " + origin + ": expected " + std::to_string(dim) +
                             " column vectors");
        }
        ComplexMatrix m(dim, dim);
        for (int col = 0; col < dim; ++col) {
            const auto& v = vectors.at(col);
            if (!v.is_array() || v.size() != static_cast<std::size_t>(dim)) {
                throw InputError("basis file " + origin + ": column has wrong length");
            }
            for (int row = 0; row < dim; ++row) {
                const auto& z = v.at(row);
                if (!z.is_array() || z.size() != 2) {
                    throw InputError("basis file " + origin + ": entries must be [re, im]");
                }
                m(row, col) = cplx{z.at(0).get<double>(), z.at(1).get<double>()};
            }
        }
        std::string label = j.value("label", origin);
        return OrthonormalBasis(std::move(m), std::move(label));
    } catch (const nlohmann::json::exception& e) {
        throw InputError("basis file " + origin + ": " + e.what());
    }
}

OrthonormalBasis load_basis_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open basis file " + path);
    return parse_basis_json(in, path);
}

void save_basis_json(const OrthonormalBasis& basis, std::ostream& out) {
    nlohmann::json j;
    j["dim"] = basis.dim();
    j["label"] = basis.label();
    nlohmann::json cols = nlohmann::json::array();
    for (int c = 0; c < basis.dim(); ++c) {
        nlohmann::json col = nlohmann::json::array();
        for (int r = 0; r < basis.dim(); ++r) {
            col.push_back({basis.vector_entry(r, c).real(), basis.vector_entry(r, c).imag()});
        }
        cols.push_back(std::move(col));
    }
    j["vectors"] = std::move(cols);
    out << j.dump(2) << '\n';
}

} // namespace mur
