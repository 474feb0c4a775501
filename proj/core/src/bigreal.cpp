#include <arrc/bigreal.hpp>

#include <cstdlib>

namespace arrc {

std::string Real::to_string(long digits) const {
    if (digits < 1) digits = 1;
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return "0";

    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);

    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) mant.erase(0, 1);
    while (mant.size() > 1 && mant.back() == '0') mant.pop_back();

    std::string out;
    if (exp10 > 0 && exp10 <= 18) {
        if (static_cast<size_t>(exp10) >= mant.size()) {
            out = mant + std::string(exp10 - mant.size(), '0');
        } else {
            out = mant.substr(0, exp10) + "." + mant.substr(exp10);
        }
    } else if (exp10 <= 0 && exp10 > -6) {
        out = "0." + std::string(-exp10, '0') + mant;
    } else {
        out = mant.substr(0, 1);
        if (mant.size() > 1) out += "." + mant.substr(1);
        out += "e" + std::to_string(exp10 - 1);
    }
    return (neg ? "-" : "") + out;
}

}  // namespace arrc
