#include "wedgelab/scalar.hpp"

#include "wedgelab/error.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace wedgelab {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Scalar make_scalar(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw Error(ErrorCode::InvalidArgument, "zero denominator");
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

Scalar parse_scalar(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0)
        throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    if (negative)
        n = -n;
    return make_scalar(n, d);
}

std::string to_string(const Scalar& s)
{
    if (s.get_den() == 1)
        return s.get_num().get_str();
    return s.get_num().get_str() + "/" + s.get_den().get_str();
}

std::string to_decimal(long double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12Lg", v);
    return buf;
}

std::string to_decimal(const Scalar& s)
{
    // mpf keeps the quotient accurate when numerator and denominator overflow a double
    mpf_class f(s, 128);
    long exp = 0;
    double mant = mpf_get_d_2exp(&exp, f.get_mpf_t());
    return to_decimal(std::ldexp(static_cast<long double>(mant), static_cast<int>(exp)));
}

} // namespace wedgelab
