#include "symbern/rational.hpp"

#include "symbern/error.hpp"

#include <cctype>

namespace symbern {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionOutOfRange: return "DimensionOutOfRange";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorCode::NotAPmf: return "NotAPmf";
        case ErrorCode::NotSymmetricMarginals: return "NotSymmetricMarginals";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::NotInIdeal: return "NotInIdeal";
        case ErrorCode::InvalidLambda: return "InvalidLambda";
        case ErrorCode::KernelNotPalindromic: return "KernelNotPalindromic";
        case ErrorCode::KernelElementNotStar: return "KernelElementNotStar";
        case ErrorCode::ZeroCombination: return "ZeroCombination";
        case ErrorCode::InputOutOfRange: return "InputOutOfRange";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NotKernelStar: return "NotKernelStar";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void bad(std::string_view text) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) bad(whole);
    Integer value(std::string(s), 10);
    return negative ? Integer(-value) : value;
}

Integer pow10(long exponent) {
    Integer result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
    return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad(text);

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(s.substr(0, slash), text);
        std::string_view den_text = s.substr(slash + 1);
        if (!all_digits(den_text)) bad(text);
        Integer den(std::string(den_text), 10);
        if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    // Decimal with optional exponent.
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        Integer exp_value = parse_integer(s.substr(e + 1), text);
        if (!exp_value.fits_slong_p()) bad(text);
        exponent = exp_value.get_si();
        s = s.substr(0, e);
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
            (int_part.empty() && frac_part.empty())) {
            bad(text);
        }
        digits = std::string(int_part) + std::string(frac_part);
        exponent -= static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(s)) bad(text);
        digits = std::string(s);
    }
    Rational r(Integer(digits, 10));
    if (exponent > 0) r *= pow10(exponent);
    if (exponent < 0) r /= pow10(-exponent);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

Integer binomial(unsigned long n, unsigned long k) {
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

}  // namespace symbern
