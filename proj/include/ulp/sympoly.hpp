#pragma once

#include "ulp/partition.hpp"
#include "ulp/rational.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace ulp {

/// Highest weight of an irreducible U(n) representation: n weakly decreasing
/// integers. Splits as partition() + shift() * (1, ..., 1) with the last part
/// of partition() equal to zero.
class Signature {
public:
    Signature() = default;
    Signature(std::initializer_list<int> entries);
    explicit Signature(std::vector<int> entries);
    static Signature from_partition(const Partition& lambda, int shift, int n);

    std::span<const int> entries() const { return entries_; }
    int n() const { return static_cast<int>(entries_.size()); }
    int operator[](std::size_t i) const { return entries_[i]; }

    int shift() const { return entries_.empty() ? 0 : entries_.back(); }
    Partition partition() const;
    bool is_trivial() const;

    /// (-k_n, ..., -k_1): the signature of the complex conjugate character.
    Signature conjugate() const;

    std::string to_string() const;

    friend bool operator==(const Signature&, const Signature&) = default;
    friend std::strong_ordering operator<=>(const Signature& a, const Signature& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<int> entries_;
};

/// Symmetric polynomial in y_j = cos(theta_j), stored over the monomial
/// symmetric basis m_mu(y). Zero coefficients are never stored.
class CosSymPoly {
public:
    explicit CosSymPoly(int n) : n_(n) {}
    static CosSymPoly constant(int n, const Rational& c);

    int n() const { return n_; }
    const std::map<Partition, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(const Partition& mu) const;
    int degree() const;
    bool is_zero() const { return coeffs_.empty(); }

    /// Adds c * m_mu. Throws if mu has more than n parts.
    void add_term(const Partition& mu, const Rational& c);
    /// Like add_term, but silently drops m_mu with more than n parts (it vanishes).
    void add_term_truncated(const Partition& mu, const Rational& c);

    CosSymPoly& operator+=(const CosSymPoly& o);
    CosSymPoly& operator-=(const CosSymPoly& o);
    CosSymPoly& operator*=(const Rational& c);
    friend CosSymPoly operator+(CosSymPoly a, const CosSymPoly& b) { return a += b; }
    friend CosSymPoly operator-(CosSymPoly a, const CosSymPoly& b) { return a -= b; }
    friend CosSymPoly operator*(CosSymPoly a, const Rational& c) { return a *= c; }
    friend CosSymPoly operator*(const Rational& c, CosSymPoly a) { return a *= c; }
    friend CosSymPoly operator*(const CosSymPoly& a, const CosSymPoly& b);
    friend bool operator==(const CosSymPoly&, const CosSymPoly&) = default;

private:
    int n_;
    std::map<Partition, Rational> coeffs_;
};

/// Symmetric Laurent polynomial in x_j = exp(i theta_j) over the monic
/// monomial symmetric basis m_kappa(x) (one term per distinct permutation).
class LaurentSymPoly {
public:
    explicit LaurentSymPoly(int n) : n_(n) {}

    int n() const { return n_; }
    const std::map<Signature, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(const Signature& k) const;
    bool is_zero() const { return coeffs_.empty(); }

    void add_term(const Signature& k, const Rational& c);

    LaurentSymPoly& operator+=(const LaurentSymPoly& o);
    LaurentSymPoly& operator-=(const LaurentSymPoly& o);
    LaurentSymPoly& operator*=(const Rational& c);
    friend bool operator==(const LaurentSymPoly&, const LaurentSymPoly&) = default;

    /// Evaluates at x_j = exp(i angles_j).
    std::complex<double> evaluate(std::span<const double> angles) const;

private:
    int n_;
    std::map<Signature, Rational> coeffs_;
};

/// Distinct permutations of an integer tuple.
std::vector<std::vector<int>> distinct_permutations(std::vector<int> v);

CosSymPoly m_poly(const Partition& mu, int n);

/// Generalized Schur function det^s * S_lambda as a Laurent polynomial.
/// Results are memoized (thread-safe).
const LaurentSymPoly& schur_laurent(const Signature& kappa);

/// Weyl character formula: ratio of alternants at x_j = exp(i angles_j).
/// Throws std::invalid_argument when two angles coincide modulo 2 pi.
std::complex<double> schur_eval_bialternant(const Signature& kappa, std::span<const double> angles);

/// Substitutes y_j = (x_j + 1/x_j) / 2.
LaurentSymPoly cos_to_laurent(const CosSymPoly& p);

/// Coefficients c_kappa with p = sum c_kappa s_kappa, by leading-term subtraction.
std::map<Signature, Rational> schur_expand(const LaurentSymPoly& p);

/// Dimension of the irreducible representation with highest weight kappa.
std::int64_t weyl_dimension(const Signature& kappa);

/// Sum of coeffs[mu] * m_mu(y).
double eval_cos_poly(const CosSymPoly& p, std::span<const double> y);

/// Same evaluation for a floating-point coefficient map.
double eval_cos_poly(const std::map<Partition, double>& coeffs, std::span<const double> y);

} // namespace ulp
