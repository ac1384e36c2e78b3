#include "tribokit/seqcore.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>

namespace tribokit {

std::string_view short_name(SequenceKind kind) {
    switch (kind) {
        case SequenceKind::Tribonacci: return "T";
        case SequenceKind::GeneralizedLucas: return "S";
        case SequenceKind::MinorSum: return "C";
    }
    return "?";
}

std::optional<SequenceKind> parse_kind(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "t" || lower == "tribonacci") return SequenceKind::Tribonacci;
    if (lower == "s" || lower == "generalizedlucas" || lower == "lucas") return SequenceKind::GeneralizedLucas;
    if (lower == "c" || lower == "minorsum") return SequenceKind::MinorSum;
    return std::nullopt;
}

Seeds default_seeds(SequenceKind kind) {
    switch (kind) {
        case SequenceKind::Tribonacci: return {Integer(0), Integer(1), Integer(1)};
        case SequenceKind::GeneralizedLucas: return {Integer(3), Integer(1), Integer(3)};
        case SequenceKind::MinorSum: return {Integer(3), Integer(-1), Integer(-1)};
    }
    throw std::logic_error("unknown sequence kind");
}

Coefficients recurrence_coefficients(SequenceKind kind) {
    switch (kind) {
        case SequenceKind::Tribonacci:
        case SequenceKind::GeneralizedLucas: return {1, 1, 1};
        case SequenceKind::MinorSum: return {-1, -1, 1};
    }
    throw std::logic_error("unknown sequence kind");
}

namespace {

// out += coeff * x, without materialising coeff * x for the common +-1 case.
void add_scaled(Integer& out, long coeff, const Integer& x) {
    if (coeff == 1) {
        out += x;
    } else if (coeff == -1) {
        out -= x;
    } else if (coeff > 0) {
        mpz_addmul_ui(out.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(coeff));
    } else if (coeff < 0) {
        mpz_submul_ui(out.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-coeff));
    }
}

// Three consecutive values a_p, a_{p+1}, a_{p+2} that can slide either way.
class Window {
  public:
    Window(const Coefficients& coeffs, Seeds seeds) : c_(coeffs), a_(std::move(seeds)) {
        if (c_[2] != 1 && c_[2] != -1) {
            throw std::invalid_argument("trailing recurrence coefficient must be +1 or -1");
        }
    }

    Index position() const { return pos_; }
    const Integer& at(int offset) const { return a_[static_cast<std::size_t>(offset)]; }

    void forward() {
        scratch_ = 0;
        add_scaled(scratch_, c_[0], a_[2]);
        add_scaled(scratch_, c_[1], a_[1]);
        add_scaled(scratch_, c_[2], a_[0]);
        rotate_in_back();
        ++pos_;
    }

    // a_{p+2} = c1 a_{p+1} + c2 a_p + c3 a_{p-1}  =>  a_{p-1} = c3 (a_{p+2} - c1 a_{p+1} - c2 a_p)
    void backward() {
        scratch_ = a_[2];
        add_scaled(scratch_, -c_[0], a_[1]);
        add_scaled(scratch_, -c_[1], a_[0]);
        if (c_[2] == -1) mpz_neg(scratch_.get_mpz_t(), scratch_.get_mpz_t());
        rotate_in_front();
        --pos_;
    }

    void move_to(Index target) {
        while (pos_ < target) forward();
        while (pos_ > target) backward();
    }

  private:
    void rotate_in_back() {
        a_[0].swap(a_[1]);
        a_[1].swap(a_[2]);
        a_[2].swap(scratch_);
    }
    void rotate_in_front() {
        a_[2].swap(a_[1]);
        a_[1].swap(a_[0]);
        a_[0].swap(scratch_);
    }

    Coefficients c_;
    Seeds a_;
    Integer scratch_;
    Index pos_ = 0;
};

Integer single(const Coefficients& coeffs, const Seeds& seeds, Index n) {
    if (n >= 0 && n <= 2) return seeds[static_cast<std::size_t>(n)];
    Window w(coeffs, seeds);
    if (n > 2) {
        w.move_to(n - 2);
        return w.at(2);
    }
    w.move_to(n);
    return w.at(0);
}

}  // namespace

std::vector<Term> sequence_range(const Coefficients& coeffs, const Seeds& seeds, Index lo,
                                 Index hi) {
    if (lo > hi) throw std::invalid_argument("sequence_range: lo > hi");
    Window w(coeffs, seeds);
    w.move_to(lo);
    std::vector<Term> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (Index n = lo; n <= hi; ++n) {
        const Index offset = n - w.position();
        if (offset > 2) {
            w.forward();
        }
        out.push_back({n, w.at(static_cast<int>(n - w.position()))});
    }
    return out;
}

std::vector<Term> sequence_range(SequenceKind kind, Index lo, Index hi) {
    return sequence_range(recurrence_coefficients(kind), default_seeds(kind), lo, hi);
}

Integer term(SequenceKind kind, Index n) {
    return single(recurrence_coefficients(kind), default_seeds(kind), n);
}

Integer tribonacci(Index n) { return term(SequenceKind::Tribonacci, n); }
Integer s_lucas(Index n) { return term(SequenceKind::GeneralizedLucas, n); }
Integer c_seq(Index n) { return term(SequenceKind::MinorSum, n); }

Integer c_even(Index k) {
    if (k < 0) throw std::domain_error("c_even: half-index must be non-negative");
    return single({-1, -3, 1}, {Integer(3), Integer(-1), Integer(-5)}, k);
}

Integer s_from_t(Index n, SForm form) {
    const auto t = sequence_range(SequenceKind::Tribonacci, n - 2, n + 1);
    const Integer& tm2 = t[0].value;
    const Integer& tm1 = t[1].value;
    const Integer& t0 = t[2].value;
    const Integer& tp1 = t[3].value;
    switch (form) {
        case SForm::MinorForm: return Integer(t0 + 2 * tm1 + 3 * tm2);
        case SForm::OgfForm: return Integer(3 * tp1 - 2 * t0 - tm1);
    }
    throw std::logic_error("unknown S form");
}

Integer c_from_t(Index n, CForm form) {
    const auto t = sequence_range(SequenceKind::Tribonacci, n - 3, n + 1);
    const Integer& tm3 = t[0].value;
    const Integer& tm2 = t[1].value;
    const Integer& tm1 = t[2].value;
    const Integer& t0 = t[3].value;
    const Integer& tp1 = t[4].value;
    switch (form) {
        case CForm::MinorExpansion:
            return Integer(2 * tp1 * tm2 + tp1 * tm1 - t0 * t0 - 2 * t0 * tm1 - tm1 * tm3 +
                           tm2 * tm2);
        case CForm::SquareForm:
            return Integer(-t0 * t0 + 2 * tm1 * tm1 + 3 * tm2 * tm2 - 2 * t0 * tm1 +
                           2 * t0 * tm2 + 4 * tm1 * tm2);
    }
    throw std::logic_error("unknown C form");
}

}  // namespace tribokit
