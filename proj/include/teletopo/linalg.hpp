#pragma once

// Dense complex linear algebra over qubit registers.
//
// Index convention used throughout the library: a bit-string
// (b1, ..., bn) maps to the integer with b1 as the most significant bit, and
// the left factor of a Kronecker product is the high-order index block. So
// |a>|b> on an m-qubit and a k-qubit register sits at index a * 2^k + b.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace teletopo {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-10;
// Largest matrix side produced by kron (2^12).
inline constexpr std::size_t kMaxMatrixSide = std::size_t{1} << 12;
// Largest register held as a dense vector (2^24 amplitudes).
inline constexpr std::size_t kMaxQubits = 24;

class ComplexMatrix {
  public:
    // entries are row-major; throws ShapeError on a length mismatch or a zero
    // dimension and InputError on a non-finite entry.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::span<const Complex> entries() const { return entries_; }

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

// Kronecker product, first factor outermost. Throws SizeError if either side
// of the result would exceed max_side.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t max_side = kMaxMatrixSide);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix scale(const ComplexMatrix& a, Complex factor);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);
Complex trace(const ComplexMatrix& a);

// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool approx_eq(const ComplexMatrix& a, const ComplexMatrix& b, double tol = kDefaultTol);

double frobenius_norm_squared(const ComplexMatrix& a);

// max |u^dagger u - I| <= tol.
bool is_unitary(const ComplexMatrix& u, double tol = kDefaultTol);

// 2x2 only.
Complex det2(const ComplexMatrix& m);
ComplexMatrix inverse2(const ComplexMatrix& m);

// Returns n when side == 2^n, otherwise throws ShapeError.
std::size_t qubits_for_side(std::size_t side);

struct KetTag {};
struct BraTag {};

// 2^n complex amplitudes over an n-qubit register. Not necessarily
// normalized. Ket and Bra share the representation but are distinct types.
template <class Tag>
class QubitVector {
  public:
    QubitVector(std::size_t num_qubits, std::vector<Complex> amplitudes);

    static QubitVector basis(std::size_t num_qubits, std::size_t index);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
    std::span<const Complex> amplitudes() const { return amplitudes_; }

    double norm_squared() const;
    double norm() const;
    // Throws InputError on a zero vector.
    QubitVector normalized() const;
    QubitVector scaled(Complex factor) const;

    friend bool operator==(const QubitVector&, const QubitVector&) = default;

  private:
    std::size_t num_qubits_;
    std::vector<Complex> amplitudes_;
};

using Ket = QubitVector<KetTag>;
using Bra = QubitVector<BraTag>;

extern template class QubitVector<KetTag>;
extern template class QubitVector<BraTag>;

// |a>|b>, a on the high-order qubits.
Ket tensor(const Ket& a, const Ket& b);

// <bra|ket> = sum_i bra[i] * ket[i]; the bra stores its coefficients as-is.
Complex pair(const Bra& bra, const Ket& ket);

// The conjugate dual of a ket.
Bra dual(const Ket& ket);

// Hermitian inner products, conjugating the left argument.
Complex inner(const Ket& a, const Ket& b);
Complex inner(const Bra& a, const Bra& b);

// Largest entrywise modulus of a - b; throws ShapeError on mismatched size.
double max_abs_diff(const Ket& a, const Ket& b);

// m * ket, with m square of side ket.dim().
Ket apply(const ComplexMatrix& m, const Ket& ket);

// (m (x) I) * ket, m acting on the leading log2(m.rows()) qubits.
Ket apply_on_prefix(const ComplexMatrix& m, const Ket& ket);

// Column vector of the amplitudes, ket.dim() x 1.
ComplexMatrix as_column(const Ket& ket);

}  // namespace teletopo
