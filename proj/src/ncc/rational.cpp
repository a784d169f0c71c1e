#include "ncc/rational.hpp"

namespace ncc {

std::optional<Rat> rat_from_string(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (num.empty() || den.empty()) return std::nullopt;
    auto digits_ok = [](const std::string& s) {
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!digits_ok(num) || !digits_ok(den)) return std::nullopt;
    mpz_class n(num), d(den);
    if (d == 0) return std::nullopt;
    mpq_class r;
    mpq_set_num(r.get_mpq_t(), n.get_mpz_t());
    mpq_set_den(r.get_mpq_t(), d.get_mpz_t());
    r.canonicalize();
    return r;
}

}  // namespace ncc
