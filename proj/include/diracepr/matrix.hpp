#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>

namespace diracepr
{

using cplx = std::complex<double>;

inline constexpr cplx I_unit{0.0, 1.0};

/*!
 * Dense, row-major, fixed-size complex matrix.
 *
 * Every matrix in the library is at most 4x4, so all storage is inline and
 * all operations are plain loops.
 */
template<std::size_t Rows, std::size_t Cols>
class CMat
{
  public:
    static constexpr std::size_t rows = Rows;
    static constexpr std::size_t cols = Cols;

    constexpr CMat() = default;

    //! Row-major list of entries; missing trailing entries are zero.
    constexpr CMat(std::initializer_list<cplx> entries)
    {
        std::size_t i = 0;
        for (auto const& e : entries)
        {
            if (i < Rows * Cols)
                e_[i++] = e;
        }
    }

    static constexpr CMat zero() { return CMat{}; }

    static constexpr CMat identity()
        requires(Rows == Cols)
    {
        CMat m;
        for (std::size_t i = 0; i < Rows; ++i)
            m(i, i) = 1.0;
        return m;
    }

    constexpr cplx& operator()(std::size_t i, std::size_t j)
    {
        return e_[i * Cols + j];
    }
    constexpr cplx const& operator()(std::size_t i, std::size_t j) const
    {
        return e_[i * Cols + j];
    }

    constexpr auto begin() { return e_.begin(); }
    constexpr auto end() { return e_.end(); }
    constexpr auto begin() const { return e_.begin(); }
    constexpr auto end() const { return e_.end(); }

    constexpr CMat& operator+=(CMat const& o)
    {
        for (std::size_t i = 0; i < e_.size(); ++i)
            e_[i] += o.e_[i];
        return *this;
    }
    constexpr CMat& operator-=(CMat const& o)
    {
        for (std::size_t i = 0; i < e_.size(); ++i)
            e_[i] -= o.e_[i];
        return *this;
    }
    constexpr CMat& operator*=(cplx s)
    {
        for (auto& e : e_)
            e *= s;
        return *this;
    }
    constexpr CMat& operator/=(cplx s)
    {
        for (auto& e : e_)
            e /= s;
        return *this;
    }

  private:
    std::array<cplx, Rows * Cols> e_{};
};

using CMat2 = CMat<2, 2>;
using CMat4 = CMat<4, 4>;
using CMat42 = CMat<4, 2>;
using CMat24 = CMat<2, 4>;

template<std::size_t R, std::size_t C>
constexpr CMat<R, C> operator+(CMat<R, C> a, CMat<R, C> const& b)
{
    return a += b;
}
template<std::size_t R, std::size_t C>
constexpr CMat<R, C> operator-(CMat<R, C> a, CMat<R, C> const& b)
{
    return a -= b;
}
template<std::size_t R, std::size_t C>
constexpr CMat<R, C> operator-(CMat<R, C> a)
{
    return a *= -1.0;
}
template<std::size_t R, std::size_t C>
constexpr CMat<R, C> operator*(cplx s, CMat<R, C> a)
{
    return a *= s;
}
template<std::size_t R, std::size_t C>
constexpr CMat<R, C> operator*(CMat<R, C> a, cplx s)
{
    return a *= s;
}
template<std::size_t R, std::size_t C>
constexpr CMat<R, C> operator/(CMat<R, C> a, cplx s)
{
    return a /= s;
}

template<std::size_t R, std::size_t K, std::size_t C>
constexpr CMat<R, C> operator*(CMat<R, K> const& a, CMat<K, C> const& b)
{
    CMat<R, C> out;
    for (std::size_t i = 0; i < R; ++i)
    {
        for (std::size_t k = 0; k < K; ++k)
        {
            cplx const aik = a(i, k);
            for (std::size_t j = 0; j < C; ++j)
                out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

template<std::size_t R, std::size_t C>
constexpr CMat<C, R> transpose(CMat<R, C> const& a)
{
    CMat<C, R> out;
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j)
            out(j, i) = a(i, j);
    return out;
}

template<std::size_t R, std::size_t C>
constexpr CMat<R, C> conj(CMat<R, C> a)
{
    for (auto& e : a)
        e = std::conj(e);
    return a;
}

template<std::size_t R, std::size_t C>
constexpr CMat<C, R> adjoint(CMat<R, C> const& a)
{
    return conj(transpose(a));
}

template<std::size_t N>
constexpr cplx trace(CMat<N, N> const& a)
{
    cplx t{};
    for (std::size_t i = 0; i < N; ++i)
        t += a(i, i);
    return t;
}

template<std::size_t N>
constexpr CMat<N, N> commutator(CMat<N, N> const& a, CMat<N, N> const& b)
{
    return a * b - b * a;
}

template<std::size_t N>
constexpr CMat<N, N> anticommutator(CMat<N, N> const& a, CMat<N, N> const& b)
{
    return a * b + b * a;
}

//! Largest entrywise modulus.
template<std::size_t R, std::size_t C>
double max_abs(CMat<R, C> const& a)
{
    double m = 0;
    for (auto const& e : a)
        m = std::max(m, std::abs(e));
    return m;
}

template<std::size_t R, std::size_t C>
double max_abs_diff(CMat<R, C> const& a, CMat<R, C> const& b)
{
    return max_abs(a - b);
}

template<std::size_t R, std::size_t C>
double frobenius_norm(CMat<R, C> const& a)
{
    double s = 0;
    for (auto const& e : a)
        s += std::norm(e);
    return std::sqrt(s);
}

template<std::size_t R, std::size_t C>
bool approx_equal(CMat<R, C> const& a, CMat<R, C> const& b, double tol = 1e-12)
{
    return max_abs_diff(a, b) <= tol;
}

template<std::size_t R, std::size_t C>
bool is_finite(CMat<R, C> const& a)
{
    return std::all_of(a.begin(), a.end(), [](cplx const& e) {
        return std::isfinite(e.real()) && std::isfinite(e.imag());
    });
}

constexpr cplx det(CMat2 const& a)
{
    return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
}

//! Inverse through the adjugate; callers guarantee a nonzero determinant.
constexpr CMat2 inverse(CMat2 const& a)
{
    cplx const d = det(a);
    return CMat2{a(1, 1), -a(0, 1), -a(1, 0), a(0, 0)} / d;
}

//! Eigenvalues of a 2x2 matrix (ordered by real part, ascending).
inline std::array<cplx, 2> eigenvalues(CMat2 const& a)
{
    cplx const half_tr = 0.5 * trace(a);
    cplx const disc = std::sqrt(half_tr * half_tr - det(a));
    std::array<cplx, 2> ev{half_tr - disc, half_tr + disc};
    if (ev[1].real() < ev[0].real())
        std::swap(ev[0], ev[1]);
    return ev;
}

//---------------------------------------------------------------------------//
// BLOCK HELPERS (4x4 <-> 2x2)
//---------------------------------------------------------------------------//

constexpr CMat4
blocks(CMat2 const& a, CMat2 const& b, CMat2 const& c, CMat2 const& d)
{
    CMat4 out;
    for (std::size_t i = 0; i < 2; ++i)
    {
        for (std::size_t j = 0; j < 2; ++j)
        {
            out(i, j) = a(i, j);
            out(i, j + 2) = b(i, j);
            out(i + 2, j) = c(i, j);
            out(i + 2, j + 2) = d(i, j);
        }
    }
    return out;
}

constexpr CMat4 blockdiag(CMat2 const& a, CMat2 const& d)
{
    return blocks(a, CMat2{}, CMat2{}, d);
}

//! Stack two 2x2 blocks into a 4x2 column block.
constexpr CMat42 vstack(CMat2 const& top, CMat2 const& bottom)
{
    CMat42 out;
    for (std::size_t i = 0; i < 2; ++i)
    {
        for (std::size_t j = 0; j < 2; ++j)
        {
            out(i, j) = top(i, j);
            out(i + 2, j) = bottom(i, j);
        }
    }
    return out;
}

//! Extract the 2x2 block at block-row `bi`, block-column `bj`.
template<std::size_t R, std::size_t C>
constexpr CMat2 block(CMat<R, C> const& m, std::size_t bi, std::size_t bj)
{
    CMat2 out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            out(i, j) = m(2 * bi + i, 2 * bj + j);
    return out;
}

}  // namespace diracepr
