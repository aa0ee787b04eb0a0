#include "uniprod/coeffpoly.hpp"

#include <algorithm>
#include <cstddef>

#include "uniprod/errors.hpp"

namespace uniprod {

int var_natural_cmp(const std::string& a, const std::string& b) {
    auto split = [](const std::string& s) {
        std::size_t pos = s.size();
        while (pos > 0 && std::isdigit(static_cast<unsigned char>(s[pos - 1]))) --pos;
        return std::pair<std::string, std::string>(s.substr(0, pos), s.substr(pos));
    };
    auto [pa, na] = split(a);
    auto [pb, nb] = split(b);
    if (pa != pb) return pa < pb ? -1 : 1;
    // Compare digit runs numerically: by length after stripping leading
    // zeros, then lexicographically.
    auto strip = [](const std::string& s) {
        std::size_t i = 0;
        while (i + 1 < s.size() && s[i] == '0') ++i;
        return s.substr(i);
    };
    std::string da = strip(na), db = strip(nb);
    if (da.size() != db.size()) return da.size() < db.size() ? -1 : 1;
    if (da != db) return da < db ? -1 : 1;
    if (na != nb) return na < nb ? -1 : 1;
    return 0;
}

int mono_cmp(const Mono& a, const Mono& b) {
    int da = 0, db = 0;
    for (const auto& [v, e] : a) da += e;
    for (const auto& [v, e] : b) db += e;
    if (da != db) return da < db ? -1 : 1;
    auto ia = a.rbegin();
    auto ib = b.rbegin();
    while (ia != a.rend() && ib != b.rend()) {
        int c = var_natural_cmp(ia->first, ib->first);
        if (c != 0) {
            // The side owning the higher variable has a positive exponent
            // there, the other side zero.
            return c > 0 ? 1 : -1;
        }
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia;
        ++ib;
    }
    if (ia != a.rend()) return 1;
    if (ib != b.rend()) return -1;
    return 0;
}

CoeffPoly::CoeffPoly(const Rational& c) {
    if (c != 0) terms_[Mono{}] = c;
}

CoeffPoly CoeffPoly::variable(const std::string& name, int exp) {
    CoeffPoly p;
    Mono m;
    if (exp > 0) m[name] = exp;
    p.terms_[m] = 1;
    return p;
}

bool CoeffPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational CoeffPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

int CoeffPoly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int t = 0;
        for (const auto& [v, e] : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

std::set<std::string, VarNaturalLess> CoeffPoly::variables() const {
    std::set<std::string, VarNaturalLess> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) out.insert(v);
    return out;
}

void CoeffPoly::add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

CoeffPoly CoeffPoly::operator-() const {
    CoeffPoly out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

CoeffPoly CoeffPoly::operator+(const CoeffPoly& o) const {
    CoeffPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

CoeffPoly CoeffPoly::operator-(const CoeffPoly& o) const {
    CoeffPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

static Mono mono_mul(const Mono& a, const Mono& b) {
    Mono out = a;
    for (const auto& [v, e] : b) out[v] += e;
    return out;
}

CoeffPoly CoeffPoly::operator*(const CoeffPoly& o) const {
    CoeffPoly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
    return out;
}

CoeffPoly CoeffPoly::scaled(const Rational& c) const {
    CoeffPoly out;
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_[m] = k * c;
    return out;
}

CoeffPoly CoeffPoly::substituted(
    const std::map<std::string, CoeffPoly, VarNaturalLess>& images) const {
    CoeffPoly out;
    for (const auto& [m, c] : terms_) {
        CoeffPoly term(c);
        for (const auto& [v, e] : m) {
            auto it = images.find(v);
            CoeffPoly base = (it != images.end()) ? it->second : CoeffPoly::variable(v);
            for (int k = 0; k < e; ++k) term = term * base;
        }
        out = out + term;
    }
    return out;
}

Rational CoeffPoly::evaluated(
    const std::map<std::string, Rational, VarNaturalLess>& values) const {
    Rational out(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& [v, e] : m) {
            auto it = values.find(v);
            if (it == values.end()) throw EngineError("no value for unknown " + v);
            for (int k = 0; k < e; ++k) term *= it->second;
        }
        out += term;
    }
    return out;
}

Rational CoeffPoly::coefficient(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

CoeffPoly CoeffPoly::normalized() const {
    if (terms_.empty()) return *this;
    mpz_class den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_class d = c.get_den();
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
    }
    mpz_class num_gcd(0);
    for (const auto& [m, c] : terms_) {
        mpq_class scaled = c * Rational(den_lcm);
        num_gcd = gcd(num_gcd, mpz_class(scaled.get_num()));
    }
    if (num_gcd == 0) num_gcd = 1;
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    CoeffPoly out = scaled(factor);
    if (out.terms_.begin()->second < 0) out = out.scaled(Rational(-1));
    return out;
}

static std::string render_mono(const Mono& m, bool latex) {
    std::string out;
    for (const auto& [v, e] : m) {
        if (!out.empty()) out += latex ? " " : "*";
        std::string name = v;
        if (latex) {
            std::string prefix = v, digits;
            std::size_t pos = v.size();
            while (pos > 0 && std::isdigit(static_cast<unsigned char>(v[pos - 1]))) --pos;
            prefix = v.substr(0, pos);
            digits = v.substr(pos);
            name = "\\" + prefix + "_{" + digits + "}";
        }
        out += name;
        if (e > 1) out += latex ? ("^{" + std::to_string(e) + "}") : ("^" + std::to_string(e));
    }
    return out;
}

static std::string render_poly(const CoeffPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string ms = render_mono(m, latex);
        if (ms.empty()) {
            out += rational_str(a);
        } else if (a == 1) {
            out += ms;
        } else {
            out += rational_str(a) + (latex ? " " : "*") + ms;
        }
        first = false;
    }
    return out;
}

std::string CoeffPoly::render() const { return render_poly(*this, false); }
std::string CoeffPoly::render_latex() const { return render_poly(*this, true); }

int poly_cmp(const CoeffPoly& a, const CoeffPoly& b) {
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() && ib != b.terms().end()) {
        int c = mono_cmp(ia->first, ib->first);
        if (c != 0) return -c;  // larger leading mono sorts first
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia;
        ++ib;
    }
    if (ia != a.terms().end()) return 1;
    if (ib != b.terms().end()) return -1;
    return 0;
}

bool linear_view(const CoeffPoly& p, std::map<std::string, Rational, VarNaturalLess>& coeffs,
                 Rational& constant) {
    coeffs.clear();
    constant = 0;
    for (const auto& [m, c] : p.terms()) {
        if (m.empty()) {
            constant = c;
            continue;
        }
        if (m.size() != 1 || m.begin()->second != 1) return false;
        coeffs[m.begin()->first] = c;
    }
    return true;
}

static std::vector<mpz_class> positive_divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> out;
    if (n == 0) return out;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> univariate_rational_roots(const CoeffPoly& p, const std::string& var,
                                                bool& complete) {
    // Dense integer coefficient vector c[0..d], low degree first.
    CoeffPoly q = p.normalized();
    int deg = q.total_degree();
    std::vector<mpz_class> c(static_cast<std::size_t>(deg) + 1, 0);
    for (const auto& [m, coef] : q.terms()) {
        int e = 0;
        if (!m.empty()) {
            if (m.size() != 1 || m.begin()->first != var) throw EngineError("not univariate");
            e = m.begin()->second;
        }
        c[static_cast<std::size_t>(e)] = mpz_class(coef.get_num());  // denom is 1 after normalize
    }

    std::vector<Rational> roots;
    // Strip zero roots.
    std::size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    for (std::size_t k = 0; k < low; ++k) roots.push_back(Rational(0));
    std::vector<mpz_class> cur(c.begin() + static_cast<long>(low), c.end());

    auto eval_at = [](const std::vector<mpz_class>& poly, const Rational& x) {
        Rational acc(0);
        for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + Rational(poly[i]);
        return acc;
    };
    auto deflate = [](std::vector<mpz_class>& poly, const Rational& root) {
        // Divide by (x - root) keeping exact rational intermediate values,
        // then clear denominators.
        std::vector<Rational> quot(poly.size() - 1);
        Rational carry(0);
        for (std::size_t i = poly.size(); i-- > 1;) {
            Rational coef = Rational(poly[i]) + carry;
            quot[i - 1] = coef;
            carry = coef * root;
        }
        mpz_class lcm(1);
        for (const auto& r : quot) {
            mpz_class d = r.get_den();
            lcm = lcm / gcd(lcm, d) * d;
        }
        std::vector<mpz_class> out(quot.size());
        for (std::size_t i = 0; i < quot.size(); ++i) {
            Rational s = quot[i] * Rational(lcm);
            out[i] = mpz_class(s.get_num());
        }
        poly = out;
    };

    while (cur.size() > 1) {
        if (cur[0] == 0) {
            roots.push_back(Rational(0));
            cur.erase(cur.begin());
            continue;
        }
        if (cur.size() == 2) {  // linear: c0 + c1 x
            Rational r(-cur[0], cur[1]);
            r.canonicalize();
            roots.push_back(r);
            cur = {cur[1]};
            break;
        }
        bool found = false;
        auto ps = positive_divisors(cur[0]);
        auto qs = positive_divisors(cur.back());
        for (const auto& pn : ps) {
            for (const auto& qn : qs) {
                for (int sign : {1, -1}) {
                    Rational cand(sign * pn, qn);
                    cand.canonicalize();
                    if (eval_at(cur, cand) == 0) {
                        roots.push_back(cand);
                        deflate(cur, cand);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    complete = (cur.size() <= 1);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace uniprod
