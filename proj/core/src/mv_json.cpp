#include "spinlab/mv_json.hpp"

#include <cctype>
#include <stdexcept>

namespace spinlab {

namespace {

Rational power_of_ten(long exponent) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    return exponent < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

nlohmann::json terms_json(const std::map<Mask, GaussianRational>& terms) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [m, c] : terms)
        out.push_back({{"mask", m}, {"re", to_string(c.re)}, {"im", to_string(c.im)}});
    return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty number");
    if (text.find('/') != std::string::npos) {
        Rational q;
        if (q.set_str(text, 10) != 0 || q.get_den() == 0)
            throw std::invalid_argument("malformed rational: " + text);
        q.canonicalize();
        return q;
    }
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-')
        negative = text[pos++] == '-';
    mpz_class digits = 0;
    long scale = 0;
    bool any = false, point = false;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits = digits * 10 + (c - '0');
            any = true;
            if (point)
                --scale;
        } else if (c == '.' && !point) {
            point = true;
        } else {
            break;
        }
    }
    if (!any)
        throw std::invalid_argument("malformed number: " + text);
    if (pos < text.size()) {
        if (text[pos] != 'e' && text[pos] != 'E')
            throw std::invalid_argument("malformed number: " + text);
        std::size_t used = 0;
        long exponent = 0;
        try {
            exponent = std::stol(text.substr(pos + 1), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed exponent: " + text);
        }
        if (used != text.size() - pos - 1 || std::abs(exponent) > 4000)
            throw std::invalid_argument("malformed exponent: " + text);
        scale += exponent;
    }
    Rational out = Rational(digits) * power_of_ten(scale);
    out.canonicalize();
    return negative ? Rational(-out) : out;
}

Rational parse_rational(const nlohmann::json& value) {
    if (value.is_string())
        return parse_rational(value.get<std::string>());
    if (value.is_number_integer())
        return Rational(value.get<long>());
    if (value.is_number())
        return parse_rational(value.dump());
    throw std::invalid_argument("coefficient must be a number or a string");
}

ExactElement multivector_from_json(const nlohmann::json& j, int max_dimension) {
    if (!j.is_object() || !j.contains("sig") || !j.contains("terms"))
        throw std::invalid_argument("multivector JSON needs \"sig\" and \"terms\"");
    const auto& sig = j.at("sig");
    if (!sig.is_array() || sig.size() != 2 || !sig[0].is_number_integer() || !sig[1].is_number_integer())
        throw std::invalid_argument("\"sig\" must be [r, s]");
    ExactElement out(Signature(sig[0].get<int>(), sig[1].get<int>(), max_dimension));
    const auto& terms = j.at("terms");
    if (!terms.is_array())
        throw std::invalid_argument("\"terms\" must be an array");
    long previous = -1;
    for (const auto& t : terms) {
        if (!t.is_object() || !t.contains("mask") || !t.at("mask").is_number_integer())
            throw std::invalid_argument("each term needs an integer \"mask\"");
        const long mask = t.at("mask").get<long>();
        if (mask < 0 || !out.signature().fits(static_cast<Mask>(mask)) || mask > static_cast<long>(out.signature().full_mask()))
            throw std::invalid_argument("mask " + std::to_string(mask) + " does not fit the signature");
        if (mask <= previous)
            throw std::invalid_argument("masks must be strictly ascending");
        previous = mask;
        if (!t.contains("re") && !t.contains("im"))
            throw std::invalid_argument("term " + std::to_string(mask) + " has no coefficient");
        const Rational re = t.contains("re") ? parse_rational(t.at("re")) : Rational(0);
        const Rational im = t.contains("im") ? parse_rational(t.at("im")) : Rational(0);
        out.add_term(static_cast<Mask>(mask), GaussianRational(re, im));
    }
    return out;
}

nlohmann::json to_json(const ExactElement& x) {
    return {{"sig", {x.signature().r(), x.signature().s()}}, {"terms", terms_json(x.terms())}};
}

nlohmann::json to_json(const ExteriorElement<GaussianRational>& w) {
    return {{"space", "exterior"},
            {"sig", {w.signature().r(), w.signature().s()}},
            {"terms", terms_json(w.terms())}};
}

}  // namespace spinlab
