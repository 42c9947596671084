#include "qcenter/binary_form.hpp"

#include <sstream>
#include <stdexcept>

namespace qcenter {

BinaryForm::BinaryForm(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("BinaryForm: negative degree");
    coeffs_.assign(static_cast<size_t>(degree) + 1, Rational(0));
}

BinaryForm BinaryForm::scalar(const Rational& value) {
    BinaryForm f(0);
    f.coeffs_[0] = value;
    return f;
}

BinaryForm BinaryForm::monomial(int degree, int y_power, const Rational& coeff) {
    BinaryForm f(degree);
    f.coeffs_.at(y_power) = coeff;
    return f;
}

bool BinaryForm::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

const Rational& BinaryForm::scalar_value() const {
    if (degree_ != 0) throw std::logic_error("scalar_value on form of degree " + std::to_string(degree_));
    return coeffs_[0];
}

BinaryForm BinaryForm::dx1() const {
    if (degree_ == 0) return BinaryForm(0);
    BinaryForm r(degree_ - 1);
    for (int i = 0; i < degree_; ++i) r.coeffs_[i] = Rational(degree_ - i) * coeffs_[i];
    return r;
}

BinaryForm BinaryForm::dx2() const {
    if (degree_ == 0) return BinaryForm(0);
    BinaryForm r(degree_ - 1);
    for (int i = 0; i < degree_; ++i) r.coeffs_[i] = Rational(i + 1) * coeffs_[i + 1];
    return r;
}

Rational BinaryForm::eval(const Rational& x1, const Rational& x2) const {
    Rational acc(0), x2pow(1);
    std::vector<Rational> x1powers(static_cast<size_t>(degree_) + 1);
    Rational x1pow(1);
    for (int i = 0; i <= degree_; ++i) {
        x1powers[static_cast<size_t>(i)] = x1pow;
        x1pow *= x1;
    }
    for (int i = 0; i <= degree_; ++i) {
        acc += coeffs_[static_cast<size_t>(i)] * x1powers[static_cast<size_t>(degree_ - i)] * x2pow;
        x2pow *= x2;
    }
    return acc;
}

BinaryForm BinaryForm::operator-() const {
    BinaryForm r(degree_);
    for (int i = 0; i <= degree_; ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
    if (degree_ != o.degree_)
        throw std::invalid_argument("form degree mismatch in add: " + std::to_string(degree_) + " vs " +
                                    std::to_string(o.degree_));
    for (int i = 0; i <= degree_; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) {
    if (degree_ != o.degree_)
        throw std::invalid_argument("form degree mismatch in sub: " + std::to_string(degree_) + " vs " +
                                    std::to_string(o.degree_));
    for (int i = 0; i <= degree_; ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm r(a.degree_ + b.degree_);
    for (int i = 0; i <= a.degree_; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (int j = 0; j <= b.degree_; ++j) {
            if (b.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

BinaryForm operator*(const Rational& s, const BinaryForm& f) {
    BinaryForm r(f.degree_);
    for (int i = 0; i <= f.degree_; ++i) r.coeffs_[i] = s * f.coeffs_[i];
    return r;
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

std::string BinaryForm::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= degree_; ++i) {
        const Rational& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        int xp = degree_ - i, yp = i;
        bool has_var = xp > 0 || yp > 0;
        if (abs != 1 || !has_var) {
            out << rational_to_string(abs);
            if (has_var) out << " ";
        }
        if (xp > 0) out << "x" << (xp > 1 ? "^" + std::to_string(xp) : "");
        if (xp > 0 && yp > 0) out << " ";
        if (yp > 0) out << "y" << (yp > 1 ? "^" + std::to_string(yp) : "");
    }
    return out.str();
}

BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int k) {
    const int r = f.degree(), rho = g.degree();
    if (k < 0 || k > r || k > rho)
        throw std::invalid_argument("transvectant index " + std::to_string(k) + " exceeds degrees (" +
                                    std::to_string(r) + "," + std::to_string(rho) + ")");
    // d^k f / dx1^(k-h) dx2^h for h = 0..k, and the mirror set for g.
    std::vector<BinaryForm> df, dg;
    df.reserve(static_cast<size_t>(k) + 1);
    dg.reserve(static_cast<size_t>(k) + 1);
    for (int h = 0; h <= k; ++h) {
        BinaryForm a = f;
        for (int i = 0; i < k - h; ++i) a = a.dx1();
        for (int i = 0; i < h; ++i) a = a.dx2();
        df.push_back(a);
        BinaryForm b = g;
        for (int i = 0; i < h; ++i) b = b.dx1();
        for (int i = 0; i < k - h; ++i) b = b.dx2();
        dg.push_back(b);
    }
    BinaryForm sum(r + rho - 2 * k);
    for (int h = 0; h <= k; ++h) {
        BinaryForm prod = df[static_cast<size_t>(h)] * dg[static_cast<size_t>(h)];
        Rational w = binomial(k, h);
        if (h % 2 == 1) w = -w;
        sum += w * prod;
    }
    Rational pre = Rational(factorial(r - k) * factorial(rho - k)) / Rational(factorial(r) * factorial(rho));
    return pre * sum;
}

}  // namespace qcenter
