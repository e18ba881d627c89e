#include "ulp/sympoly.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace ulp {

// ---------------------------------------------------------------- Signature

Signature::Signature(std::initializer_list<int> entries) : Signature(std::vector<int>(entries)) {}

Signature::Signature(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw std::invalid_argument("signature needs at least one entry");
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
        if (entries_[i] < entries_[i + 1])
            throw std::invalid_argument("signature entries must be weakly decreasing");
}

Signature Signature::from_partition(const Partition& lambda, int shift, int n) {
    auto e = lambda.padded(n);
    for (int& v : e) v += shift;
    return Signature(std::move(e));
}

Partition Signature::partition() const {
    std::vector<int> parts(entries_);
    const int s = shift();
    for (int& v : parts) v -= s;
    return Partition(std::move(parts));
}

bool Signature::is_trivial() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v == 0; });
}

Signature Signature::conjugate() const {
    std::vector<int> e(entries_.rbegin(), entries_.rend());
    for (int& v : e) v = -v;
    return Signature(std::move(e));
}

std::string Signature::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(entries_[i]);
    }
    return s + ")";
}

// ---------------------------------------------------------------- helpers

std::vector<std::vector<int>> distinct_permutations(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

namespace {

using Monomials = std::map<std::vector<int>, Rational>;

Rational binomial(int n, int k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

bool nonincreasing(const std::vector<int>& v) {
    return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

template <class Key>
void accumulate_term(std::map<Key, Rational>& m, const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = m.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

Monomials expand_monomials(const CosSymPoly& p) {
    Monomials out;
    for (const auto& [mu, c] : p.coeffs())
        for (auto& perm : distinct_permutations(mu.padded(p.n())))
            accumulate_term(out, perm, c);
    return out;
}

} // namespace

// ---------------------------------------------------------------- CosSymPoly

CosSymPoly CosSymPoly::constant(int n, const Rational& c) {
    CosSymPoly p(n);
    p.add_term(Partition{}, c);
    return p;
}

Rational CosSymPoly::coeff(const Partition& mu) const {
    auto it = coeffs_.find(mu);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

int CosSymPoly::degree() const {
    int d = 0;
    for (const auto& [mu, c] : coeffs_) d = std::max(d, mu.degree());
    return d;
}

void CosSymPoly::add_term(const Partition& mu, const Rational& c) {
    if (mu.length() > n_)
        throw std::invalid_argument("m_" + mu.to_string() + " needs at most " +
                                    std::to_string(n_) + " parts");
    accumulate_term(coeffs_, mu, c);
}

void CosSymPoly::add_term_truncated(const Partition& mu, const Rational& c) {
    if (mu.length() <= n_) accumulate_term(coeffs_, mu, c);
}

CosSymPoly& CosSymPoly::operator+=(const CosSymPoly& o) {
    if (o.n_ != n_) throw std::invalid_argument("CosSymPoly variable count mismatch");
    for (const auto& [mu, c] : o.coeffs_) accumulate_term(coeffs_, mu, c);
    return *this;
}

CosSymPoly& CosSymPoly::operator-=(const CosSymPoly& o) {
    if (o.n_ != n_) throw std::invalid_argument("CosSymPoly variable count mismatch");
    for (const auto& [mu, c] : o.coeffs_) accumulate_term(coeffs_, mu, Rational(-c));
    return *this;
}

CosSymPoly& CosSymPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [mu, v] : coeffs_) v *= c;
    return *this;
}

CosSymPoly operator*(const CosSymPoly& a, const CosSymPoly& b) {
    if (a.n() != b.n()) throw std::invalid_argument("CosSymPoly variable count mismatch");
    const int n = a.n();
    // The product is symmetric, so its m_nu coefficient is the coefficient of
    // the sorted monomial y^nu.
    Monomials mb = expand_monomials(b);
    std::map<Partition, Rational> out;
    std::vector<int> e(static_cast<std::size_t>(n));
    for (const auto& [mu, ca] : a.coeffs())
        for (const auto& perm : distinct_permutations(mu.padded(n)))
            for (const auto& [eb, cb] : mb) {
                for (std::size_t j = 0; j < e.size(); ++j) e[j] = perm[j] + eb[j];
                if (nonincreasing(e)) accumulate_term(out, Partition(e), Rational(ca * cb));
            }
    CosSymPoly r(n);
    for (const auto& [mu, c] : out) r.add_term(mu, c);
    return r;
}

// ---------------------------------------------------------------- LaurentSymPoly

Rational LaurentSymPoly::coeff(const Signature& k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void LaurentSymPoly::add_term(const Signature& k, const Rational& c) {
    if (k.n() != n_) throw std::invalid_argument("signature length does not match variable count");
    accumulate_term(coeffs_, k, c);
}

LaurentSymPoly& LaurentSymPoly::operator+=(const LaurentSymPoly& o) {
    if (o.n_ != n_) throw std::invalid_argument("LaurentSymPoly variable count mismatch");
    for (const auto& [k, c] : o.coeffs_) accumulate_term(coeffs_, k, c);
    return *this;
}

LaurentSymPoly& LaurentSymPoly::operator-=(const LaurentSymPoly& o) {
    if (o.n_ != n_) throw std::invalid_argument("LaurentSymPoly variable count mismatch");
    for (const auto& [k, c] : o.coeffs_) accumulate_term(coeffs_, k, Rational(-c));
    return *this;
}

LaurentSymPoly& LaurentSymPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [k, v] : coeffs_) v *= c;
    return *this;
}

std::complex<double> LaurentSymPoly::evaluate(std::span<const double> angles) const {
    if (static_cast<int>(angles.size()) != n_)
        throw std::invalid_argument("angle count does not match variable count");
    std::complex<double> total = 0.0;
    for (const auto& [k, c] : coeffs_) {
        std::complex<double> orbit = 0.0;
        for (const auto& perm :
             distinct_permutations(std::vector<int>(k.entries().begin(), k.entries().end()))) {
            double phase = 0.0;
            for (std::size_t j = 0; j < perm.size(); ++j) phase += perm[j] * angles[j];
            orbit += std::polar(1.0, phase);
        }
        total += c.get_d() * orbit;
    }
    return total;
}

// ---------------------------------------------------------------- operations

CosSymPoly m_poly(const Partition& mu, int n) {
    CosSymPoly p(n);
    p.add_term(mu, 1);
    return p;
}

namespace {

class SchurCache {
public:
    const LaurentSymPoly& get(const Signature& kappa) {
        {
            std::lock_guard lock(mutex_);
            if (auto it = table_.find(kappa); it != table_.end()) return it->second;
        }
        LaurentSymPoly value = compute(kappa);
        std::lock_guard lock(mutex_);
        return table_.try_emplace(kappa, std::move(value)).first->second;
    }

private:
    static LaurentSymPoly compute(const Signature& kappa) {
        const int n = kappa.n();
        const int s = kappa.shift();
        const Partition lambda = kappa.partition();
        LaurentSymPoly out(n);
        for (const auto& mu : partitions_of(lambda.degree(), n)) {
            const auto k = kostka(lambda, mu);
            if (k != 0) out.add_term(Signature::from_partition(mu, s, n), Rational(static_cast<long>(k)));
        }
        return out;
    }

    std::mutex mutex_;
    std::map<Signature, LaurentSymPoly> table_;
};

SchurCache& schur_cache() {
    static SchurCache cache;
    return cache;
}

} // namespace

const LaurentSymPoly& schur_laurent(const Signature& kappa) { return schur_cache().get(kappa); }

std::complex<double> schur_eval_bialternant(const Signature& kappa, std::span<const double> angles) {
    const int n = kappa.n();
    if (static_cast<int>(angles.size()) != n)
        throw std::invalid_argument("angle count does not match signature length");
    std::vector<std::complex<double>> x(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = std::polar(1.0, angles[static_cast<std::size_t>(j)]);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)]) < 1e-9)
                throw std::invalid_argument("bialternant is singular at coincident angles");
    Eigen::MatrixXcd num(n, n), den(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double th = angles[static_cast<std::size_t>(j)];
            num(i, j) = std::polar(1.0, (kappa[static_cast<std::size_t>(i)] + n - 1 - i) * th);
            den(i, j) = std::polar(1.0, (n - 1 - i) * th);
        }
    return num.partialPivLu().determinant() / den.partialPivLu().determinant();
}

LaurentSymPoly cos_to_laurent(const CosSymPoly& p) {
    const int n = p.n();
    LaurentSymPoly out(n);
    std::vector<int> e(static_cast<std::size_t>(n));
    for (const auto& [mu, c] : p.coeffs()) {
        const Rational scale = c / Rational(BigInt(1) << static_cast<unsigned>(mu.degree()));
        for (const auto& perm : distinct_permutations(mu.padded(n))) {
            // y^k = 2^-k sum_i C(k, i) x^(k - 2i); keep sorted exponent tuples only.
            auto rec = [&](auto&& self, int j, Rational weight) -> void {
                if (j == n) {
                    out.add_term(Signature(e), scale * weight);
                    return;
                }
                const int k = perm[static_cast<std::size_t>(j)];
                for (int i = 0; i <= k; ++i) {
                    const int ex = k - 2 * i;
                    if (j > 0 && ex > e[static_cast<std::size_t>(j - 1)]) continue;
                    e[static_cast<std::size_t>(j)] = ex;
                    self(self, j + 1, weight * binomial(k, i));
                }
            };
            rec(rec, 0, Rational(1));
        }
    }
    return out;
}

std::map<Signature, Rational> schur_expand(const LaurentSymPoly& p) {
    std::map<Signature, Rational> work = p.coeffs();
    std::map<Signature, Rational> result;
    while (!work.empty()) {
        auto lead = std::prev(work.end());
        const Signature kappa = lead->first;
        const Rational c = lead->second;
        result.emplace(kappa, c);
        for (const auto& [nu, k] : schur_laurent(kappa).coeffs())
            accumulate_term(work, nu, Rational(-c * k));
    }
    return result;
}

std::int64_t weyl_dimension(const Signature& kappa) {
    const int n = kappa.n();
    BigInt num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= kappa[static_cast<std::size_t>(i)] - kappa[static_cast<std::size_t>(j)] + j - i;
            den *= j - i;
        }
    BigInt q = num / den;
    return static_cast<std::int64_t>(q.get_si());
}

namespace {

template <class Map>
double eval_monomial_map(const Map& coeffs, int n, std::span<const double> y) {
    if (static_cast<int>(y.size()) != n)
        throw std::invalid_argument("point dimension does not match variable count");
    long double total = 0.0L;
    for (const auto& [mu, c] : coeffs) {
        long double orbit = 0.0L;
        for (const auto& perm : distinct_permutations(mu.padded(n))) {
            long double term = 1.0L;
            for (std::size_t j = 0; j < perm.size(); ++j)
                for (int r = 0; r < perm[j]; ++r) term *= y[j];
            orbit += term;
        }
        if constexpr (std::is_same_v<typename Map::mapped_type, Rational>)
            total += static_cast<long double>(c.get_d()) * orbit;
        else
            total += static_cast<long double>(c) * orbit;
    }
    return static_cast<double>(total);
}

} // namespace

double eval_cos_poly(const CosSymPoly& p, std::span<const double> y) {
    return eval_monomial_map(p.coeffs(), p.n(), y);
}

double eval_cos_poly(const std::map<Partition, double>& coeffs, std::span<const double> y) {
    return eval_monomial_map(coeffs, static_cast<int>(y.size()), y);
}

} // namespace ulp
