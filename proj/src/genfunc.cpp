#include "tribokit/genfunc.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace tribokit {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : c_(std::move(coefficients)) {
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
    c_.reserve(coefficients.size());
    for (long v : coefficients) c_.emplace_back(v);
    normalize();
}

void IntPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> sum(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = a.coefficient(k) + b.coefficient(k);
    return IntPolynomial(std::move(sum));
}

std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        const Integer& c = p.coefficients()[k];
        if (c == 0) continue;
        const Integer mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) os << mag;
        if (k >= 1) os << 'x';
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

void validate(const RationalOGF& ogf) {
    if (ogf.denominator.degree() < 1) {
        throw std::invalid_argument("OGF denominator must have degree >= 1");
    }
    if (ogf.denominator.coefficient(0) != 1) {
        throw std::invalid_argument("OGF denominator constant term must be 1, got " +
                                    to_decimal(ogf.denominator.coefficient(0)));
    }
}

std::vector<Integer> expand(const RationalOGF& ogf, std::size_t count) {
    validate(ogf);
    if (count == 0) throw std::invalid_argument("expand: count must be positive");
    const auto& den = ogf.denominator.coefficients();
    std::vector<Integer> a(count);
    for (std::size_t n = 0; n < count; ++n) {
        Integer acc = ogf.numerator.coefficient(n);
        const std::size_t reach = std::min(n, den.size() - 1);
        for (std::size_t k = 1; k <= reach; ++k) {
            mpz_submul(acc.get_mpz_t(), den[k].get_mpz_t(), a[n - k].get_mpz_t());
        }
        a[n] = std::move(acc);
    }
    return a;
}

RationalOGF builtin_ogf(BuiltinOgf kind) {
    switch (kind) {
        case BuiltinOgf::S: return {{3, -2, -1}, {1, -1, -1, -1}};
        case BuiltinOgf::C: return {{3, 2, 1}, {1, 1, 1, -1}};
        case BuiltinOgf::CEven: return {{3, 2, 3}, {1, 1, 3, -1}};
    }
    throw std::logic_error("unknown builtin OGF");
}

std::optional<BuiltinOgf> parse_builtin_ogf(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "s") return BuiltinOgf::S;
    if (lower == "c") return BuiltinOgf::C;
    if (lower == "ceven" || lower == "c2n") return BuiltinOgf::CEven;
    return std::nullopt;
}

std::vector<Integer> LinearRecurrence::run(std::size_t count) const {
    std::vector<Integer> a;
    a.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        if (n < seeds.size()) {
            a.push_back(seeds[n]);
            continue;
        }
        Integer acc = 0;
        for (std::size_t k = 1; k <= coefficients.size() && k <= n; ++k) {
            mpz_addmul(acc.get_mpz_t(), coefficients[k - 1].get_mpz_t(), a[n - k].get_mpz_t());
        }
        a.push_back(std::move(acc));
    }
    return a;
}

LinearRecurrence recurrence_of(const RationalOGF& ogf) {
    validate(ogf);
    const auto& den = ogf.denominator.coefficients();
    LinearRecurrence rec;
    rec.coefficients.reserve(den.size() - 1);
    for (std::size_t k = 1; k < den.size(); ++k) rec.coefficients.push_back(-den[k]);
    const auto seed_count = static_cast<std::size_t>(
        std::max(ogf.numerator.degree() + 1, ogf.denominator.degree()));
    rec.seeds = expand(ogf, std::max<std::size_t>(seed_count, 1));
    return rec;
}

}  // namespace tribokit
