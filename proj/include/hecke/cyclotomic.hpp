#pragma once

#include "rational_poly.hpp"

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero in cyclotomic field") {}
};

/// The field Q(zeta_p) = Q[x]/Phi_p. Instances are interned and never destroyed.
class CycloField {
public:
    static const CycloField& get(int p) {
        static std::mutex mu;
        static std::map<int, std::unique_ptr<CycloField>> registry;
        if (p < 1) throw std::invalid_argument("CycloField: p must be positive");
        std::lock_guard<std::mutex> lock(mu);
        auto it = registry.find(p);
        if (it == registry.end()) it = registry.emplace(p, std::unique_ptr<CycloField>(new CycloField(p))).first;
        return *it->second;
    }

    int order() const { return p_; }
    std::size_t degree() const { return phi_; }
    const RationalPoly& modulus() const { return modulus_; }

    /// x^m mod Phi_p for 0 <= m <= 2*(degree-1), each of length degree.
    const std::vector<mpq_class>& power_row(std::size_t m) const { return powers_[m]; }

private:
    explicit CycloField(int p) : p_(p), modulus_(cyclotomic_polynomial(p)) {
        phi_ = static_cast<std::size_t>(poly::degree(modulus_));
        const std::size_t top = phi_ == 0 ? 0 : 2 * (phi_ - 1);
        powers_.reserve(top + 1);
        for (std::size_t m = 0; m <= top; ++m) {
            RationalPoly xm(m + 1, mpq_class(0));
            xm[m] = 1;
            auto r = poly::divmod(xm, modulus_).second;
            r.resize(phi_, mpq_class(0));
            powers_.push_back(std::move(r));
        }
    }

    int p_;
    std::size_t phi_ = 0;
    RationalPoly modulus_;
    std::vector<std::vector<mpq_class>> powers_;
};

/// Element of Q(zeta_p) in the power basis 1, x, ..., x^{phi(p)-1}.
/// Canonical representation, so equality is coefficientwise. Rationals (degree-1 fields)
/// embed into every field and mix freely with elements of any order.
class CycloRational {
public:
    CycloRational() : field_(&CycloField::get(1)), c_(1) {}
    CycloRational(long v) : field_(&CycloField::get(1)), c_(1, mpq_class(v)) {}  // NOLINT
    CycloRational(const mpq_class& v) : field_(&CycloField::get(1)), c_(1, v) { c_[0].canonicalize(); }  // NOLINT
    CycloRational(const CycloField& f, const mpq_class& v) : field_(&f), c_(f.degree()) {
        c_[0] = v;
        c_[0].canonicalize();
    }
    CycloRational(const CycloField& f, std::vector<mpq_class> coeffs) : field_(&f), c_(std::move(coeffs)) {
        if (c_.size() > f.degree()) {
            auto r = poly::divmod(c_, f.modulus()).second;
            c_ = std::move(r);
        }
        c_.resize(f.degree(), mpq_class(0));
        for (auto& x : c_) x.canonicalize();
    }

    /// zeta_p^t with t reduced mod p.
    static CycloRational eps_power(const CycloField& f, long t) {
        const long p = f.order();
        long e = ((t % p) + p) % p;
        std::vector<mpq_class> xs(static_cast<std::size_t>(e) + 1, mpq_class(0));
        xs[static_cast<std::size_t>(e)] = 1;
        return CycloRational(f, std::move(xs));
    }

    const CycloField& field() const { return *field_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (sgn(x) != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (sgn(c_[i]) != 0) return false;
        return true;
    }
    bool is_one() const { return is_rational() && c_[0] == 1; }

    CycloRational operator-() const {
        CycloRational r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    CycloRational& operator+=(const CycloRational& o) {
        promote_with(o);
        if (o.c_.size() == 1) {
            c_[0] += o.c_[0];
        } else {
            for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        }
        return *this;
    }
    CycloRational& operator-=(const CycloRational& o) {
        promote_with(o);
        if (o.c_.size() == 1) {
            c_[0] -= o.c_[0];
        } else {
            for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        }
        return *this;
    }
    CycloRational& operator*=(const CycloRational& o) {
        *this = *this * o;
        return *this;
    }
    CycloRational& operator/=(const CycloRational& o) {
        *this = *this / o;
        return *this;
    }

    friend CycloRational operator+(CycloRational a, const CycloRational& b) { return a += b; }
    friend CycloRational operator-(CycloRational a, const CycloRational& b) { return a -= b; }

    friend CycloRational operator*(const CycloRational& a, const CycloRational& b) {
        if (b.c_.size() == 1) return a.scaled(b.c_[0], b.field_);
        if (a.c_.size() == 1) return b.scaled(a.c_[0], a.field_);
        const CycloField& f = common_field(a, b);
        const std::size_t n = f.degree();
        std::vector<mpq_class> raw(2 * n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(b.c_[j]) == 0) continue;
                raw[i + j] += a.c_[i] * b.c_[j];
            }
        }
        CycloRational r(f, mpq_class(0));
        for (std::size_t m = 0; m < raw.size(); ++m) {
            if (sgn(raw[m]) == 0) continue;
            const auto& row = f.power_row(m);
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(row[k]) != 0) r.c_[k] += raw[m] * row[k];
        }
        return r;
    }

    friend CycloRational operator/(const CycloRational& a, const CycloRational& b) { return a * b.inverse(); }

    /// Multiplicative inverse via extended Euclid against Phi_p.
    CycloRational inverse() const {
        if (is_zero()) throw DivisionByZero();
        if (c_.size() == 1) {
            CycloRational r = *this;
            r.c_[0] = 1 / c_[0];
            return r;
        }
        // Invariant: s0*a = r0 and s1*a = r1 modulo Phi_p.
        RationalPoly r0 = field_->modulus(), r1 = c_, s0, s1{mpq_class(1)};
        poly::trim(r1);
        while (poly::degree(r1) > 0) {
            auto [q, rem] = poly::divmod(r0, r1);
            RationalPoly s2 = poly::sub(s0, poly::mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        const mpq_class lead = r1[0];
        for (auto& x : s1) x /= lead;
        return CycloRational(*field_, std::move(s1));
    }

    CycloRational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        CycloRational result(*field_, mpq_class(1)), base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    friend bool operator==(const CycloRational& a, const CycloRational& b) {
        if (a.c_.size() == b.c_.size()) {
            if (a.c_.size() > 1 && a.field_ != b.field_) throw std::invalid_argument("CycloRational: field mismatch");
            return a.c_ == b.c_;
        }
        const CycloRational& big = a.c_.size() > b.c_.size() ? a : b;
        const CycloRational& small = a.c_.size() > b.c_.size() ? b : a;
        return big.is_rational() && big.c_[0] == small.c_[0];
    }
    friend bool operator!=(const CycloRational& a, const CycloRational& b) { return !(a == b); }

    /// Coefficients as reduced "a/b" strings, constant term first.
    std::vector<std::string> to_strings() const {
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.push_back(x.get_num().get_str() + "/" + x.get_den().get_str());
        return out;
    }

    std::string to_string() const {
        std::string s;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (sgn(c_[i]) == 0) continue;
            if (!first) s += " + ";
            first = false;
            s += c_[i].get_str();
            if (i == 1) s += "*z";
            if (i > 1) s += "*z^" + std::to_string(i);
        }
        return first ? "0" : s;
    }

    friend std::ostream& operator<<(std::ostream& os, const CycloRational& x) { return os << x.to_string(); }

private:
    static const CycloField& common_field(const CycloRational& a, const CycloRational& b) {
        if (a.field_ == b.field_) return *a.field_;
        if (b.c_.size() == 1) return *a.field_;
        if (a.c_.size() == 1) return *b.field_;
        throw std::invalid_argument("CycloRational: field mismatch");
    }

    void promote_with(const CycloRational& o) {
        if (o.field_ == field_ || o.c_.size() == 1) return;
        if (c_.size() != 1) throw std::invalid_argument("CycloRational: field mismatch");
        field_ = o.field_;
        c_.resize(field_->degree(), mpq_class(0));
    }

    CycloRational scaled(const mpq_class& s, const CycloField* other) const {
        CycloRational r = *this;
        if (r.c_.size() == 1 && other->degree() == 1 && other->order() > r.field_->order()) r.field_ = other;
        for (auto& x : r.c_) x *= s;
        return r;
    }

    const CycloField* field_;
    std::vector<mpq_class> c_;
};

/// Parses "a/b" or "a" into a rational; throws std::invalid_argument on malformed input or zero denominator.
inline mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
    if (sgn(v.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
    v.canonicalize();
    return v;
}

/// Inverse of CycloRational::to_strings.
inline CycloRational parse_cyclo(const CycloField& f, const std::vector<std::string>& parts) {
    if (parts.size() != f.degree()) throw std::invalid_argument("coefficient count does not match field degree");
    std::vector<mpq_class> cs;
    cs.reserve(parts.size());
    for (const auto& s : parts) cs.push_back(parse_rational(s));
    return CycloRational(f, std::move(cs));
}

}  // namespace hecke
