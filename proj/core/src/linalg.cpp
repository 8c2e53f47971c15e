#include "qutrit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace qutrit {

double Vec3::norm_squared() const {
  return std::norm(v_[0]) + std::norm(v_[1]) + std::norm(v_[2]);
}

double Vec3::norm() const { return std::sqrt(norm_squared()); }

Vec3 Vec3::normalized() const {
  const double n = norm();
  if (!(n > 0.0)) throw InvalidArgument("cannot normalize a zero vector");
  return Vec3{v_[0] / n, v_[1] / n, v_[2] / n};
}

Vec3 Vec3::conj() const {
  return Vec3{std::conj(v_[0]), std::conj(v_[1]), std::conj(v_[2])};
}

Complex Vec3::dot(const Vec3& o) const {
  return std::conj(v_[0]) * o.v_[0] + std::conj(v_[1]) * o.v_[1] +
         std::conj(v_[2]) * o.v_[2];
}

Vec3& Vec3::operator+=(const Vec3& o) {
  for (std::size_t i = 0; i < 3; ++i) v_[i] += o.v_[i];
  return *this;
}

Vec3& Vec3::operator-=(const Vec3& o) {
  for (std::size_t i = 0; i < 3; ++i) v_[i] -= o.v_[i];
  return *this;
}

Vec3& Vec3::operator*=(Complex s) {
  for (auto& x : v_) x *= s;
  return *this;
}

double Vec3::max_abs_diff(const Vec3& a, const Vec3& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 3; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Mat3 Mat3::identity() { return diagonal(1.0, 1.0, 1.0); }

Mat3 Mat3::diagonal(Complex a, Complex b, Complex c) {
  Mat3 m;
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

Mat3 Mat3::outer(const Vec3& a, const Vec3& b) {
  Mat3 m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = a[r] * std::conj(b[c]);
  return m;
}

Mat3 Mat3::adjoint() const {
  Mat3 m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = std::conj(m_[c][r]);
  return m;
}

Complex Mat3::trace() const { return m_[0][0] + m_[1][1] + m_[2][2]; }

Vec3 Mat3::column(std::size_t c) const {
  return Vec3{m_[0][c], m_[1][c], m_[2][c]};
}

void Mat3::set_column(std::size_t c, const Vec3& v) {
  for (std::size_t r = 0; r < 3; ++r) m_[r][c] = v[r];
}

double Mat3::frobenius_norm() const {
  double s = 0.0;
  for (const auto& row : m_)
    for (const auto& x : row) s += std::norm(x);
  return std::sqrt(s);
}

Mat3& Mat3::operator+=(const Mat3& o) {
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m_[r][c] += o.m_[r][c];
  return *this;
}

Mat3& Mat3::operator-=(const Mat3& o) {
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m_[r][c] -= o.m_[r][c];
  return *this;
}

Mat3& Mat3::operator*=(Complex s) {
  for (auto& row : m_)
    for (auto& x : row) x *= s;
  return *this;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      m(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
  return m;
}

Vec3 operator*(const Mat3& a, const Vec3& x) {
  Vec3 y;
  for (std::size_t r = 0; r < 3; ++r)
    y[r] = a(r, 0) * x[0] + a(r, 1) * x[1] + a(r, 2) * x[2];
  return y;
}

double Mat3::max_abs_diff(const Mat3& a, const Mat3& b) {
  double m = 0.0;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

bool hermitian_check(const Mat3& m, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("hermitian_check: tol must be > 0");
  return Mat3::max_abs_diff(m, m.adjoint()) <= tol;
}

namespace {

void require_hermitian(const Mat3& m, const char* who) {
  if (!hermitian_check(m, kHermitianTol))
    throw InvalidArgument(std::string(who) + ": matrix is not Hermitian");
}

double off_diagonal_norm(const Mat3& a) {
  return std::norm(a(0, 1)) + std::norm(a(0, 2)) + std::norm(a(1, 2));
}

}  // namespace

TracePowers trace_powers(const Mat3& rho) {
  require_hermitian(rho, "trace_powers");
  const Mat3 rho2 = rho * rho;
  const Mat3 rho3 = rho2 * rho;
  return {rho.trace().real(), rho2.trace().real(), rho3.trace().real()};
}

std::array<EigenPair, 3> eigensystem(const Mat3& h) {
  require_hermitian(h, "eigensystem");

  // Work on the exactly Hermitian part so roundoff in the input's lower
  // triangle cannot leak into the rotations.
  Mat3 a = 0.5 * (h + h.adjoint());
  Mat3 vecs = Mat3::identity();

  const double scale = std::max(a.frobenius_norm(), 1e-300);
  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= 1e-36 * scale * scale) break;
    for (std::size_t p = 0; p < 2; ++p) {
      for (std::size_t q = p + 1; q < 3; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= 1e-18 * scale) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        // Phase the q-th basis vector so the (p,q) entry becomes real, then
        // apply an ordinary symmetric Jacobi rotation.
        const Complex phase = std::conj(apq) / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        Mat3 rot = Mat3::identity();
        rot(p, p) = c;
        rot(p, q) = s;
        rot(q, p) = -s * phase;
        rot(q, q) = c * phase;

        a = rot.adjoint() * a * rot;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t i = 0; i < 3; ++i) a(i, i) = a(i, i).real();
        vecs = vecs * rot;
      }
    }
  }

  std::array<EigenPair, 3> out;
  for (std::size_t i = 0; i < 3; ++i)
    out[i] = EigenPair{a(i, i).real(), vecs.column(i)};
  std::sort(out.begin(), out.end(),
            [](const EigenPair& x, const EigenPair& y) { return x.value < y.value; });
  return out;
}

Vec3 integrate_schrodinger(const Mat3& h, const Vec3& psi0, double t_end,
                           double dt) {
  if (!(dt > 0.0)) throw InvalidArgument("integrate_schrodinger: dt must be > 0");
  if (!(t_end >= 0.0))
    throw InvalidArgument("integrate_schrodinger: t_end must be >= 0");
  if (std::abs(psi0.norm() - 1.0) > 1e-10)
    throw InvalidArgument("integrate_schrodinger: initial state is not unit norm");
  require_hermitian(h, "integrate_schrodinger");

  const auto steps = static_cast<long long>(std::ceil(t_end / dt));
  if (steps == 0) return psi0;
  const double step = t_end / static_cast<double>(steps);

  const Complex minus_i{0.0, -1.0};
  const Mat3 gen = minus_i * h;
  auto deriv = [&gen](const Vec3& x) { return gen * x; };

  Vec3 psi = psi0;
  for (long long n = 0; n < steps; ++n) {
    const Vec3 k1 = deriv(psi);
    const Vec3 k2 = deriv(psi + (0.5 * step) * k1);
    const Vec3 k3 = deriv(psi + (0.5 * step) * k2);
    const Vec3 k4 = deriv(psi + step * k3);
    psi += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return psi;
}

double recommended_step(const Mat3& h) {
  const double n = h.frobenius_norm();
  if (n == 0.0) return 1e-3;
  return 1e-3 * 2.0 * std::numbers::pi / n;
}

const SpinOperators& spin_operators() {
  static const SpinOperators ops = [] {
    const double r = 1.0 / std::numbers::sqrt2;
    const Complex i{0.0, 1.0};
    SpinOperators s;
    s.s1(0, 1) = r;
    s.s1(1, 0) = r;
    s.s1(1, 2) = r;
    s.s1(2, 1) = r;
    s.s2(0, 1) = -i * r;
    s.s2(1, 0) = i * r;
    s.s2(1, 2) = -i * r;
    s.s2(2, 1) = i * r;
    s.s3 = Mat3::diagonal(1.0, 0.0, -1.0);
    return s;
  }();
  return ops;
}

}  // namespace qutrit
