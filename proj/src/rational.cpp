#include "eulerint/rational.hpp"

#include <cctype>

namespace eulerint {

Rat rat_parse(const std::string& s) {
    if (s.empty()) fail(Err::ParseError, "empty rational literal");
    // mpq set_str accepts some forms we do not want (whitespace, hex); keep
    // the accepted grammar tight: [-]digits[/digits].
    std::size_t slash = s.find('/');
    auto digits_ok = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
        fail(Err::ParseError, "bad rational literal '" + s + "'");
    Rat q;
    if (q.set_str(num + "/" + den, 10) != 0)
        fail(Err::ParseError, "bad rational literal '" + s + "'");
    if (q.get_den() == 0) fail(Err::ParseError, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) {
    return q.get_str();
}

Rat rat_floor(const Rat& q) {
    mpz_class z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return Rat(z);
}

Rat rat_ceil(const Rat& q) {
    mpz_class z;
    mpz_cdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return Rat(z);
}

long long rat_floor_ll(const Rat& q) {
    mpz_class z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!z.fits_slong_p()) fail(Err::ParseError, "rational floor out of machine range");
    return z.get_si();
}

long long rat_ceil_ll(const Rat& q) {
    mpz_class z;
    mpz_cdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!z.fits_slong_p()) fail(Err::ParseError, "rational ceil out of machine range");
    return z.get_si();
}

const char* err_name(Err e) {
    switch (e) {
        case Err::DegenerateSimplex: return "DegenerateSimplex";
        case Err::DuplicateCell: return "DuplicateCell";
        case Err::OverlappingInteriors: return "OverlappingInteriors";
        case Err::UnknownCell: return "UnknownCell";
        case Err::EmptyRange: return "EmptyRange";
        case Err::TooFewVertices: return "TooFewVertices";
        case Err::InvalidMap: return "InvalidMap";
        case Err::NotOneDimensional: return "NotOneDimensional";
        case Err::NotConvex: return "NotConvex";
        case Err::NotCounterclockwise: return "NotCounterclockwise";
        case Err::EpsilonTooLarge: return "EpsilonTooLarge";
        case Err::NotContinuous: return "NotContinuous";
        case Err::TieError: return "TieError";
        case Err::NotManifoldFixture: return "NotManifoldFixture";
        case Err::NotFiberConstant: return "NotFiberConstant";
        case Err::NotConstructibleIntegrand: return "NotConstructibleIntegrand";
        case Err::SupportTouchesBoundary: return "SupportTouchesBoundary";
        case Err::SupportOutsideWindow: return "SupportOutsideWindow";
        case Err::ZeroConfidenceNeighborhood: return "ZeroConfidenceNeighborhood";
        case Err::ParseError: return "ParseError";
        case Err::IncompatibleMethod: return "IncompatibleMethod";
        case Err::ConfigError: return "ConfigError";
    }
    return "UnknownError";
}

}  // namespace eulerint
