#include "windiso/rational.hpp"

#include <cctype>

namespace windiso {

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

[[noreturn]] void bad(std::string_view text) {
    throw std::invalid_argument("Rational::parse: bad literal '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad(text);

    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
        if (s.empty()) bad(text);
    }

    auto slash = s.find('/');
    auto dot = s.find('.');
    if (s.find_first_of("eE") != std::string_view::npos) bad(text);

    mpq_class v;
    if (slash != std::string_view::npos) {
        if (dot != std::string_view::npos) bad(text);
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad(text);
        mpz_class d(std::string(den), 10);
        if (d == 0) throw std::domain_error("Rational::parse: zero denominator");
        v = mpq_class(mpz_class(std::string(num), 10)) / mpq_class(d);
    } else if (dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) bad(text);
        if (!ip.empty() && !all_digits(ip)) bad(text);
        if (!fp.empty() && !all_digits(fp)) bad(text);
        mpz_class whole = ip.empty() ? mpz_class(0) : mpz_class(std::string(ip), 10);
        mpz_class frac = fp.empty() ? mpz_class(0) : mpz_class(std::string(fp), 10);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        v = mpq_class(whole) + mpq_class(frac) / mpq_class(scale);
    } else {
        if (!all_digits(s)) bad(text);
        v = mpq_class(mpz_class(std::string(s), 10));
    }
    if (neg) v = -v;
    return Rational(std::move(v));
}

}  // namespace windiso
