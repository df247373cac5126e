#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "crowell/error.hpp"

namespace crowell {

// Polynomial in t with int64 coefficients, exact arithmetic only.  Degrees
// stay tiny here (bounded by the crossing number), so a dense vector indexed
// by power is plenty.  coeffs_[k] is the coefficient of t^k; the zero
// polynomial is an empty vector.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    static IntPoly constant(std::int64_t c) { return IntPoly({c}); }

    // (-t)^d as a polynomial in t.
    static IntPoly neg_t_power(int d) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1, 0);
        c.back() = (d % 2 == 0) ? 1 : -1;
        return IntPoly(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    std::int64_t coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : 0;
    }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    int lowest_power() const { // smallest k with nonzero t^k term; -1 for zero
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (coeffs_[k] != 0) return static_cast<int>(k);
        return -1;
    }

    std::int64_t eval(std::int64_t t) const {
        std::int64_t v = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * t + *it;
        return v;
    }

    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    IntPoly operator+(const IntPoly& o) const {
        std::vector<std::int64_t> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
        return IntPoly(std::move(c));
    }
    IntPoly operator-(const IntPoly& o) const {
        std::vector<std::int64_t> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(static_cast<int>(k)) - o.coeff(static_cast<int>(k));
        return IntPoly(std::move(c));
    }
    IntPoly operator-() const {
        std::vector<std::int64_t> c(coeffs_);
        for (auto& x : c) x = -x;
        return IntPoly(std::move(c));
    }
    IntPoly operator*(const IntPoly& o) const {
        if (is_zero() || o.is_zero()) return IntPoly();
        std::vector<std::int64_t> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
        return IntPoly(std::move(c));
    }

    // Exact division; throws if the remainder is nonzero.  Fraction-free
    // elimination only ever divides by earlier pivots, so in that use the
    // division is exact by construction.
    IntPoly divide_exact(const IntPoly& d) const {
        if (d.is_zero()) throw Error(ErrorKind::HypothesisViolation, "polynomial division by zero");
        if (is_zero()) return IntPoly();
        std::vector<std::int64_t> rem = coeffs_;
        int dd = d.degree();
        std::int64_t lead = d.coeffs_.back();
        int qd = degree() - dd;
        if (qd < 0) throw Error(ErrorKind::HypothesisViolation, "inexact polynomial division");
        std::vector<std::int64_t> q(static_cast<std::size_t>(qd) + 1, 0);
        for (int k = qd; k >= 0; --k) {
            std::int64_t top = rem[static_cast<std::size_t>(k + dd)];
            if (top % lead != 0) throw Error(ErrorKind::HypothesisViolation, "inexact polynomial division");
            std::int64_t qk = top / lead;
            q[static_cast<std::size_t>(k)] = qk;
            for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= qk * d.coeffs_[static_cast<std::size_t>(j)];
        }
        for (auto r : rem)
            if (r != 0) throw Error(ErrorKind::HypothesisViolation, "inexact polynomial division");
        return IntPoly(std::move(q));
    }

    // Divide by t^k (exact; throws if a lower coefficient is nonzero).
    IntPoly shift_down(int k) const {
        if (k == 0 || is_zero()) return *this;
        if (lowest_power() < k) throw Error(ErrorKind::HypothesisViolation, "shift below t^0");
        return IntPoly(std::vector<std::int64_t>(coeffs_.begin() + k, coeffs_.end()));
    }

    // Coefficients read in powers of (-t): p = sum c_k (-t)^k gives c_k = (-1)^k a_k.
    std::vector<std::int64_t> neg_t_coeffs() const {
        std::vector<std::int64_t> c(coeffs_);
        for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
        return c;
    }

    bool palindromic() const { // a_k == a_(deg-k) over the support
        if (is_zero()) return true;
        int lo = lowest_power(), hi = degree();
        for (int k = lo; k <= hi; ++k)
            if (coeff(k) != coeff(hi - (k - lo))) return false;
        return true;
    }

    // Render like "1 - t + t^2"; zero renders as "0".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = 0; k <= degree(); ++k) {
            std::int64_t a = coeff(k);
            if (a == 0) continue;
            std::string mag;
            std::int64_t abs_a = a < 0 ? -a : a;
            if (k == 0) mag = std::to_string(abs_a);
            else {
                if (abs_a != 1) mag = std::to_string(abs_a) + "*";
                mag += (k == 1) ? "t" : "t^" + std::to_string(k);
            }
            if (out.empty()) out = (a < 0 ? "-" : "") + mag;
            else out += (a < 0 ? " - " : " + ") + mag;
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<std::int64_t> coeffs_;
};

} // namespace crowell
