#include "teletopo/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "teletopo/errors.hpp"

namespace teletopo {

namespace {

bool is_finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
    }
}

void require_2x2(const ComplexMatrix& m, const char* op) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw ShapeError(std::string(op) + ": expected a 2x2 matrix");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) {
        throw ShapeError("matrix dimensions must be positive");
    }
    if (entries_.size() != rows_ * cols_) {
        throw ShapeError("matrix entries length " + std::to_string(entries_.size()) + " != " +
                         std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    if (!std::all_of(entries_.begin(), entries_.end(), is_finite)) {
        throw InputError("matrix entries must be finite");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw ShapeError("ragged matrix literal");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    *this = ComplexMatrix(rows_, cols_, std::move(entries_));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        e[i * n + i] = 1.0;
    }
    return {n, n, std::move(e)};
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
    return {rows, cols, std::vector<Complex>(rows * cols)};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t max_side) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    if (rows > max_side || cols > max_side) {
        throw SizeError("kron: result " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " exceeds maximum side " + std::to_string(max_side));
    }
    std::vector<Complex> e(rows * cols);
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const Complex s = a(i1, j1);
            if (s == Complex{}) {
                continue;
            }
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
                const std::size_t r = i1 * b.rows() + i2;
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
                    e[r * cols + j1 * b.cols() + j2] = s * b(i2, j2);
                }
            }
        }
    }
    return {rows, cols, std::move(e)};
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matmul: inner dimensions " + std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + " differ");
    }
    std::vector<Complex> e(a.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex s = a(i, k);
            if (s == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                e[i * b.cols() + j] += s * b(k, j);
            }
        }
    }
    return {a.rows(), b.cols(), std::move(e)};
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    std::vector<Complex> e(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            e[j * a.rows() + i] = std::conj(a(i, j));
        }
    }
    return {a.cols(), a.rows(), std::move(e)};
}

ComplexMatrix transpose(const ComplexMatrix& a) {
    std::vector<Complex> e(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            e[j * a.rows() + i] = a(i, j);
        }
    }
    return {a.cols(), a.rows(), std::move(e)};
}

ComplexMatrix scale(const ComplexMatrix& a, Complex factor) {
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (auto& z : e) {
        z *= factor;
    }
    return {a.rows(), a.cols(), std::move(e)};
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "add");
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] += b.entries()[i];
    }
    return {a.rows(), a.cols(), std::move(e)};
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "subtract");
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] -= b.entries()[i];
    }
    return {a.rows(), a.cols(), std::move(e)};
}

Complex trace(const ComplexMatrix& a) {
    if (!a.is_square()) {
        throw ShapeError("trace: matrix is not square");
    }
    Complex sum{};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        sum += a(i, i);
    }
    return sum;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

bool approx_eq(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (!(tol > 0.0)) {
        throw InputError("approx_eq: tolerance must be positive");
    }
    return max_abs_diff(a, b) <= tol;
}

double frobenius_norm_squared(const ComplexMatrix& a) {
    double sum = 0.0;
    for (const auto& z : a.entries()) {
        sum += std::norm(z);
    }
    return sum;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
    if (!u.is_square()) {
        return false;
    }
    return max_abs_diff(matmul(dagger(u), u), ComplexMatrix::identity(u.rows())) <= tol;
}

Complex det2(const ComplexMatrix& m) {
    require_2x2(m, "det2");
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

ComplexMatrix inverse2(const ComplexMatrix& m) {
    const Complex d = det2(m);
    if (d == Complex{}) {
        throw InputError("inverse2: matrix is singular");
    }
    return {{m(1, 1) / d, -m(0, 1) / d}, {-m(1, 0) / d, m(0, 0) / d}};
}

std::size_t qubits_for_side(std::size_t side) {
    if (!std::has_single_bit(side)) {
        throw ShapeError("side " + std::to_string(side) + " is not a power of two");
    }
    return static_cast<std::size_t>(std::countr_zero(side));
}

template <class Tag>
QubitVector<Tag>::QubitVector(std::size_t num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits_ > kMaxQubits) {
        throw SizeError("register of " + std::to_string(num_qubits_) + " qubits exceeds the cap of " +
                        std::to_string(kMaxQubits));
    }
    if (amplitudes_.size() != (std::size_t{1} << num_qubits_)) {
        throw ShapeError("amplitude count " + std::to_string(amplitudes_.size()) + " != 2^" +
                         std::to_string(num_qubits_));
    }
    if (!std::all_of(amplitudes_.begin(), amplitudes_.end(), is_finite)) {
        throw InputError("amplitudes must be finite");
    }
}

template <class Tag>
QubitVector<Tag> QubitVector<Tag>::basis(std::size_t num_qubits, std::size_t index) {
    if (num_qubits > kMaxQubits) {
        throw SizeError("basis: register too large");
    }
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    if (index >= amps.size()) {
        throw InputError("basis: index out of range");
    }
    amps[index] = 1.0;
    return {num_qubits, std::move(amps)};
}

template <class Tag>
double QubitVector<Tag>::norm_squared() const {
    double sum = 0.0;
    for (const auto& z : amplitudes_) {
        sum += std::norm(z);
    }
    return sum;
}

template <class Tag>
double QubitVector<Tag>::norm() const {
    return std::sqrt(norm_squared());
}

template <class Tag>
QubitVector<Tag> QubitVector<Tag>::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw InputError("cannot normalize a zero vector");
    }
    return scaled(1.0 / n);
}

template <class Tag>
QubitVector<Tag> QubitVector<Tag>::scaled(Complex factor) const {
    std::vector<Complex> amps = amplitudes_;
    for (auto& z : amps) {
        z *= factor;
    }
    return {num_qubits_, std::move(amps)};
}

template class QubitVector<KetTag>;
template class QubitVector<BraTag>;

Ket tensor(const Ket& a, const Ket& b) {
    const std::size_t qubits = a.num_qubits() + b.num_qubits();
    if (qubits > kMaxQubits) {
        throw SizeError("tensor: " + std::to_string(qubits) + " qubits exceeds the cap");
    }
    std::vector<Complex> amps(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            amps[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return {qubits, std::move(amps)};
}

Complex pair(const Bra& bra, const Ket& ket) {
    if (bra.dim() != ket.dim()) {
        throw ShapeError("pair: bra and ket sizes differ");
    }
    Complex sum{};
    for (std::size_t i = 0; i < bra.dim(); ++i) {
        sum += bra[i] * ket[i];
    }
    return sum;
}

Bra dual(const Ket& ket) {
    std::vector<Complex> amps(ket.amplitudes().begin(), ket.amplitudes().end());
    for (auto& z : amps) {
        z = std::conj(z);
    }
    return {ket.num_qubits(), std::move(amps)};
}

namespace {

template <class Tag>
Complex hermitian_inner(const QubitVector<Tag>& a, const QubitVector<Tag>& b) {
    if (a.dim() != b.dim()) {
        throw ShapeError("inner: sizes differ");
    }
    Complex sum{};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

}  // namespace

Complex inner(const Ket& a, const Ket& b) { return hermitian_inner(a, b); }
Complex inner(const Bra& a, const Bra& b) { return hermitian_inner(a, b); }

double max_abs_diff(const Ket& a, const Ket& b) {
    if (a.dim() != b.dim()) {
        throw ShapeError("max_abs_diff: sizes differ");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

Ket apply(const ComplexMatrix& m, const Ket& ket) {
    if (!m.is_square() || m.rows() != ket.dim()) {
        throw ShapeError("apply: matrix side " + std::to_string(m.rows()) + " does not match ket dimension " +
                         std::to_string(ket.dim()));
    }
    return apply_on_prefix(m, ket);
}

Ket apply_on_prefix(const ComplexMatrix& m, const Ket& ket) {
    if (!m.is_square()) {
        throw ShapeError("apply_on_prefix: matrix is not square");
    }
    const std::size_t prefix = qubits_for_side(m.rows());
    if (prefix > ket.num_qubits()) {
        throw ShapeError("apply_on_prefix: operator acts on more qubits than the ket holds");
    }
    const std::size_t side = m.rows();
    const std::size_t tail = ket.dim() / side;
    std::vector<Complex> out(ket.dim());
    for (std::size_t r = 0; r < side; ++r) {
        for (std::size_t c = 0; c < side; ++c) {
            const Complex s = m(r, c);
            if (s == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < tail; ++j) {
                out[r * tail + j] += s * ket[c * tail + j];
            }
        }
    }
    return {ket.num_qubits(), std::move(out)};
}

ComplexMatrix as_column(const Ket& ket) {
    return {ket.dim(), 1, std::vector<Complex>(ket.amplitudes().begin(), ket.amplitudes().end())};
}

}  // namespace teletopo
