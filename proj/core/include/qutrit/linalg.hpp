#pragma once

// Fixed-size complex linear algebra for three-level systems.
//
// Everything here is sized at compile time to 3. The eigensolver and the
// Runge-Kutta propagator exist to cross-check closed-form results elsewhere
// in the library; they are not general-purpose numerics.

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace qutrit {

using Complex = std::complex<double>;

/// Raised when a caller violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computed result breaks an invariant the library guarantees.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Three nonnegative (or at least real) components, e.g. an invariant vector.
using Real3 = std::array<double, 3>;

class Vec3 {
public:
  constexpr Vec3() = default;
  constexpr Vec3(Complex a, Complex b, Complex c) : v_{a, b, c} {}

  constexpr Complex& operator[](std::size_t i) { return v_[i]; }
  constexpr const Complex& operator[](std::size_t i) const { return v_[i]; }

  double norm_squared() const;
  double norm() const;
  /// Throws InvalidArgument if the norm is zero.
  Vec3 normalized() const;

  Vec3 conj() const;
  /// <this|other>, antilinear in the left argument.
  Complex dot(const Vec3& other) const;

  Vec3& operator+=(const Vec3& o);
  Vec3& operator-=(const Vec3& o);
  Vec3& operator*=(Complex s);

  friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend Vec3 operator*(Complex s, Vec3 a) { return a *= s; }
  friend Vec3 operator*(Vec3 a, Complex s) { return a *= s; }

  /// max_i |a_i - b_i|
  static double max_abs_diff(const Vec3& a, const Vec3& b);

private:
  std::array<Complex, 3> v_{};
};

class Mat3 {
public:
  constexpr Mat3() = default;

  static Mat3 identity();
  static Mat3 diagonal(Complex a, Complex b, Complex c);
  /// |a><b|
  static Mat3 outer(const Vec3& a, const Vec3& b);

  constexpr Complex& operator()(std::size_t r, std::size_t c) { return m_[r][c]; }
  constexpr const Complex& operator()(std::size_t r, std::size_t c) const {
    return m_[r][c];
  }

  Mat3 adjoint() const;
  Complex trace() const;
  Vec3 column(std::size_t c) const;
  void set_column(std::size_t c, const Vec3& v);

  /// Frobenius norm; an upper bound on the spectral norm.
  double frobenius_norm() const;

  Mat3& operator+=(const Mat3& o);
  Mat3& operator-=(const Mat3& o);
  Mat3& operator*=(Complex s);

  friend Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
  friend Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
  friend Mat3 operator*(Complex s, Mat3 a) { return a *= s; }
  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  friend Vec3 operator*(const Mat3& a, const Vec3& x);

  static double max_abs_diff(const Mat3& a, const Mat3& b);

private:
  std::array<std::array<Complex, 3>, 3> m_{};
};

/// true iff max |M - M^dagger| <= tol. Requires tol > 0.
bool hermitian_check(const Mat3& m, double tol);

/// Tolerance used when an operation requires Hermitian input.
inline constexpr double kHermitianTol = 1e-12;

struct TracePowers {
  double tr1 = 0.0;  ///< Tr rho
  double tr2 = 0.0;  ///< Tr rho^2
  double tr3 = 0.0;  ///< Tr rho^3
};

/// (Tr rho, Tr rho^2, Tr rho^3) computed by explicit matrix products.
/// Throws InvalidArgument on non-Hermitian input.
TracePowers trace_powers(const Mat3& rho);

struct EigenPair {
  double value = 0.0;
  Vec3 vector;
};

/// Cyclic complex Jacobi diagonalization of a Hermitian 3x3 matrix.
/// Eigenvalues ascend; eigenvectors are orthonormal.
std::array<EigenPair, 3> eigensystem(const Mat3& h);

/// Classical RK4 for i d(psi)/dt = H psi with a fixed step no larger than
/// `dt`; the step is shrunk so an integer number of steps lands on t_end.
/// No renormalization is applied to the result.
Vec3 integrate_schrodinger(const Mat3& h, const Vec3& psi0, double t_end,
                           double dt);

/// Step size satisfying dt <= 1e-3 * 2pi / ||H||, using the Frobenius norm.
double recommended_step(const Mat3& h);

/// Standard spin-1 matrices in the (|1>, |0>, |-1>) basis.
struct SpinOperators {
  Mat3 s1;
  Mat3 s2;
  Mat3 s3;
};

const SpinOperators& spin_operators();

}  // namespace qutrit
