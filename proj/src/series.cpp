#include "jetforge/series.hpp"

#include <map>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jetforge {

TruncatedSeries::TruncatedSeries(FieldSpec field, int order) : field_(field) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    coeffs_.assign(order + 1, Poly::zero(field));
}

TruncatedSeries TruncatedSeries::constant(const Poly& p, int order) {
    TruncatedSeries s(p.field(), order);
    s.coeffs_[0] = p;
    return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
    if (order() != other.order() || field_ != other.field_)
        throw std::invalid_argument("series shape mismatch in +");
    TruncatedSeries r(field_, order());
    for (int i = 0; i <= order(); ++i) r.coeffs_[i] = coeffs_[i] + other.coeffs_[i];
    return r;
}

TruncatedSeries TruncatedSeries::multiply(const TruncatedSeries& other,
                                          SeriesKernel kernel) const {
    if (order() != other.order() || field_ != other.field_)
        throw std::invalid_argument("series shape mismatch in *");
    const int n = order();
    TruncatedSeries r(field_, n);
    if (kernel == SeriesKernel::Serial) {
        for (int i = 0; i <= n; ++i) {
            Poly acc = Poly::zero(field_);
            for (int a = 0; a <= i; ++a) {
                if (coeffs_[a].is_zero() || other.coeffs_[i - a].is_zero()) continue;
                acc += coeffs_[a] * other.coeffs_[i - a];
            }
            r.coeffs_[i] = std::move(acc);
        }
        return r;
    }
    // The pairwise products dominate; flatten them into independent tasks so
    // the heaviest convolution slot does not bound the speedup, then merge.
    std::vector<std::pair<int, int>> tasks; // (slot, left index)
    for (int i = 0; i <= n; ++i)
        for (int a = 0; a <= i; ++a)
            if (!coeffs_[a].is_zero() && !other.coeffs_[i - a].is_zero())
                tasks.emplace_back(i, a);
    std::vector<Poly> products(tasks.size(), Poly::zero(field_));
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(tasks.size()); ++t) {
        const auto& [i, a] = tasks[t];
        products[t] = coeffs_[a] * other.coeffs_[i - a];
    }
    for (std::size_t t = 0; t < tasks.size(); ++t)
        r.coeffs_[tasks[t].first] += products[t];
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const {
    return field_ == other.field_ && coeffs_ == other.coeffs_;
}

namespace {

// S_j = x_{0,j} + x_{1,j} t + ... + x_{m,j} t^m
TruncatedSeries variable_series(const FieldSpec& field, int index, int m) {
    TruncatedSeries s(field, m);
    for (int i = 0; i <= m; ++i)
        s.coefficient(i) = Poly::variable(field, JetVar{i, index});
    return s;
}

TruncatedSeries pow_times(const TruncatedSeries& base, int exp, TruncatedSeries acc,
                          SeriesKernel kernel) {
    for (int k = 0; k < exp; ++k) acc = acc.multiply(base, kernel);
    return acc;
}

// Horner over the smallest variable in the support; coefficients recurse.
TruncatedSeries horner(const Poly& f, int m,
                       std::map<int, TruncatedSeries>& var_series, SeriesKernel kernel) {
    const FieldSpec& field = f.field();
    // Smallest level-0 variable appearing in f.
    int index = 0;
    for (const auto& [mono, c] : f.terms())
        for (const auto& [v, e] : mono.exponents())
            if (index == 0 || v.index < index) index = v.index;
    if (index == 0) return TruncatedSeries::constant(f, m); // constant polynomial

    JetVar v{0, index};
    std::map<int, Poly, std::greater<int>> groups; // exponent of v -> cofactor
    for (const auto& [mono, c] : f.terms()) {
        int e = mono.exponent_of(v);
        Monomial rest;
        mono.try_divide(Monomial::var(v, e), rest);
        auto [it, inserted] = groups.try_emplace(e, Poly::zero(field));
        it->second += Poly::term(field, c, rest);
    }
    auto sit = var_series.find(index);
    if (sit == var_series.end())
        sit = var_series.emplace(index, variable_series(field, index, m)).first;
    const TruncatedSeries& s = sit->second;

    auto git = groups.begin();
    TruncatedSeries acc = horner(git->second, m, var_series, kernel);
    int prev = git->first;
    for (++git; git != groups.end(); ++git) {
        acc = pow_times(s, prev - git->first, std::move(acc), kernel);
        acc = acc + horner(git->second, m, var_series, kernel);
        prev = git->first;
    }
    return pow_times(s, prev, std::move(acc), kernel);
}

} // namespace

std::vector<Poly> expand_in_t(const Poly& f, int m, SeriesKernel kernel) {
    if (m < 0) throw std::invalid_argument("jet order must be >= 0");
    for (const auto& [mono, c] : f.terms())
        for (const auto& [v, e] : mono.exponents())
            if (v.level != 0)
                throw std::invalid_argument("expand_in_t input must use level-0 variables only");
    std::map<int, TruncatedSeries> cache;
    TruncatedSeries s = horner(f, m, cache, kernel);
    return s.coefficients();
}

} // namespace jetforge
