#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "irrdec/error.hpp"
#include "irrdec/rational.hpp"

namespace irrdec {

// Univariate polynomial in n with rational coefficients, ascending powers.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }
    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    // (scale * n + shift)
    static Polynomial linear(const Rational& scale, const Rational& shift) { return Polynomial({shift, scale}); }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    Rational operator()(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(const Rational& c, const Polynomial& p) { return Polynomial::constant(c) * p; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // Coefficients from degree 0 upward; "0" for the zero polynomial.
    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) out += ' ';
            out += coeffs_[i].str();
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

// Unique polynomial of degree < samples.size() through the given points.
inline Polynomial lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& samples) {
    Polynomial result;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        Polynomial basis = Polynomial::constant(samples[i].second);
        for (std::size_t j = 0; j < samples.size(); ++j) {
            if (j == i) continue;
            Rational denom = samples[i].first - samples[j].first;
            if (denom.is_zero()) throw DomainError("interpolation nodes must be distinct");
            basis = basis * Polynomial::linear(Rational(1) / denom, -samples[j].first / denom);
        }
        result += basis;
    }
    return result;
}

// L(n) = f_{n mod p}(n), residue taken in [0, p).
struct QuasiPolynomial {
    Integer p = 1;
    std::vector<Polynomial> constituents;

    const Polynomial& constituent_for(const Integer& n) const {
        Integer r = mod_floor(n, p);
        return constituents.at(static_cast<std::size_t>(r));
    }

    friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;
};

inline Rational eval_quasipolynomial(const QuasiPolynomial& q, const Integer& n) {
    return q.constituent_for(n)(Rational(n));
}

}  // namespace irrdec
