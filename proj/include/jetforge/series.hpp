#pragma once

#include <vector>

#include "jetforge/poly.hpp"

namespace jetforge {

// Which multiplication kernel truncated series arithmetic uses. The serial
// kernel is the reference; the OpenMP kernel computes each output slot
// independently, so results are identical term maps.
enum class SeriesKernel { Serial, Parallel };

// A polynomial-coefficient power series in t, truncated at t^(order+1).
// coefficient(i) is the coefficient of t^i, a Poly in jet variables.
class TruncatedSeries {
public:
    TruncatedSeries(FieldSpec field, int order);
    static TruncatedSeries constant(const Poly& p, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const FieldSpec& field() const { return field_; }
    const Poly& coefficient(int i) const { return coeffs_.at(i); }
    Poly& coefficient(int i) { return coeffs_.at(i); }
    const std::vector<Poly>& coefficients() const { return coeffs_; }

    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries multiply(const TruncatedSeries& other, SeriesKernel kernel) const;

    bool operator==(const TruncatedSeries& other) const;

private:
    FieldSpec field_;
    std::vector<Poly> coeffs_;
};

// The t-expansion of a level-0 polynomial: substitute
// x_{0,j} -> sum_{i<=m} x_{i,j} t^i and return [F_0, ..., F_m]. Evaluation is
// Horner over the variable support with all t-arithmetic truncated at t^(m+1).
// Throws std::invalid_argument if f mentions a variable of positive level.
std::vector<Poly> expand_in_t(const Poly& f, int m,
                              SeriesKernel kernel = SeriesKernel::Parallel);

} // namespace jetforge
