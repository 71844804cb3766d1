#include "tenv/scalars/poly.hpp"

#include "tenv/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tenv {

Poly::Poly(long c) {
    if (c != 0) c_.emplace_back(c);
}

Poly::Poly(const mpz_class& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long c : coeffs) c_.emplace_back(c);
    trim();
}

Poly Poly::t() { return monomial(1, 1); }

Poly Poly::monomial(const mpz_class& c, std::size_t degree) {
    Poly p;
    if (c == 0) return p;
    p.c_.assign(degree + 1, mpz_class(0));
    p.c_[degree] = c;
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    r.trim();
    return r;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

mpq_class Poly::eval(const mpq_class& v) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * v + mpq_class(*it);
    }
    acc.canonicalize();
    return acc;
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const mpz_class& c = c_[i];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << 't';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

namespace {

std::string strip_spaces(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    }
    return out;
}

}  // namespace

Poly Poly::parse(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw ParseError("empty polynomial");
    Poly result;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw ParseError("expected '+' or '-' in polynomial: " + s);
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string term = s.substr(pos, end - pos);
        if (term.empty()) throw ParseError("empty term in polynomial: " + s);
        mpz_class coeff = 1;
        std::size_t degree = 0;
        const auto tpos = term.find('t');
        std::string num = tpos == std::string::npos ? term : term.substr(0, tpos);
        if (tpos != std::string::npos) {
            if (!num.empty()) {
                if (num.back() != '*') throw ParseError("malformed term: " + term);
                num.pop_back();
            }
            std::string rest = term.substr(tpos + 1);
            degree = 1;
            if (!rest.empty()) {
                if (rest[0] != '^' || rest.size() < 2) throw ParseError("malformed exponent: " + term);
                for (std::size_t i = 1; i < rest.size(); ++i) {
                    if (!std::isdigit(static_cast<unsigned char>(rest[i]))) {
                        throw ParseError("malformed exponent: " + term);
                    }
                }
                degree = std::stoul(rest.substr(1));
            }
        }
        if (!num.empty()) {
            if (!std::all_of(num.begin(), num.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
                throw ParseError("malformed coefficient: " + term);
            }
            coeff = mpz_class(num);
        } else if (tpos == std::string::npos) {
            throw ParseError("malformed term: " + term);
        }
        result += monomial(sign * coeff, degree);
        pos = end;
    }
    return result;
}

Poly poly_arith(const Poly& a, const Poly& b, ArithOp op) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    }
    return {};
}

mpq_class poly_eval(const Poly& p, const mpq_class& v) { return p.eval(v); }

mpq_class parse_rational(std::string_view text) {
    const std::string s = strip_spaces(text);
    auto valid_int = [](const std::string& part) {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i >= part.size()) return false;
        for (; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        }
        return true;
    };
    const auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw ParseError("malformed rational: " + s);
    }
    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator: " + s);
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace tenv
