#include "fpsl/rational.hpp"

#include "fpsl/error.hpp"

#include <cctype>

namespace fpsl {

const char* to_string(ErrorKind k)
{
    switch (k) {
    case ErrorKind::NonInvertibleLead: return "NonInvertibleLead";
    case ErrorKind::DivByZero: return "DivByZero";
    case ErrorKind::InnerConstantTerm: return "InnerConstantTerm";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::BadConstantTerm: return "BadConstantTerm";
    case ErrorKind::NonIntegrableTerm: return "NonIntegrableTerm";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::DegenerateDivisor: return "DegenerateDivisor";
    case ErrorKind::DegenerateParameter: return "DegenerateParameter";
    case ErrorKind::PremiseViolated: return "PremiseViolated";
    case ErrorKind::LogDegreeOverflow: return "LogDegreeOverflow";
    case ErrorKind::BadLead: return "BadLead";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InsufficientOrder: return "InsufficientOrder";
    case ErrorKind::IncompatibleExponents: return "IncompatibleExponents";
    case ErrorKind::InternalCheck: return "InternalCheck";
    case ErrorKind::Config: return "Config";
    }
    return "Unknown";
}

Rat rat(long num, long den)
{
    if (den == 0)
        throw Error(ErrorKind::DivByZero, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat(const Int& num, const Int& den)
{
    if (sgn(den) == 0)
        throw Error(ErrorKind::DivByZero, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

static bool valid_int(const std::string& s)
{
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Rat parse_rat(const std::string& s)
{
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw Error(ErrorKind::Config, "malformed rational '" + s + "'");
    if (num[0] == '+')
        num.erase(0, 1);
    Int n(num), d(den);
    if (sgn(d) == 0)
        throw Error(ErrorKind::Config, "zero denominator in '" + s + "'");
    return rat(n, d);
}

std::string to_string(const Rat& r)
{
    return r.get_str();
}

Rat pow_int(const Rat& base, long e)
{
    if (e == 0)
        return Rat(1);
    if (e < 0) {
        if (sgn(base) == 0)
            throw Error(ErrorKind::DivByZero, "zero to a negative power");
        return Rat(1) / pow_int(base, -e);
    }
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rat(num, den);
}

Int factorial(unsigned n)
{
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(long n, long k)
{
    if (k < 0)
        return 0;
    // Generalized to negative n through the falling factorial.
    Int num = 1;
    for (long j = 0; j < k; ++j)
        num *= n - j;
    return num / factorial(static_cast<unsigned>(k));
}

} // namespace fpsl
