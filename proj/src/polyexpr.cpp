#include "uniprod/polyexpr.hpp"

#include "uniprod/errors.hpp"

namespace uniprod {

PolyExpr::PolyExpr(const Rational& scalar) {
    if (scalar != 0) terms_[Monomial{}] = CoeffPoly(scalar);
}

PolyExpr::PolyExpr(const CoeffPoly& scalar) {
    if (!scalar.is_zero()) terms_[Monomial{}] = scalar;
}

PolyExpr PolyExpr::term(const CoeffPoly& coeff, const std::vector<CanonSymbol>& factors) {
    PolyExpr out;
    if (coeff.is_zero()) return out;
    std::vector<MomentSymbol> kept;
    for (const auto& f : factors) {
        switch (f.kind) {
            case CanonSymbol::Kind::zero:
                return out;
            case CanonSymbol::Kind::one:
                break;
            case CanonSymbol::Kind::symbol:
                kept.push_back(f.sym);
                break;
        }
    }
    out.terms_[make_monomial(std::move(kept))] = coeff;
    return out;
}

PolyExpr PolyExpr::symbol_term(const CoeffPoly& coeff, const MomentSymbol& s,
                               const SymmetryFlags& flags) {
    return term(coeff, {canonicalize_symbol(s, flags)});
}

void PolyExpr::add_term(const Monomial& m, const CoeffPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

PolyExpr PolyExpr::operator+(const PolyExpr& o) const {
    PolyExpr out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

PolyExpr PolyExpr::operator-(const PolyExpr& o) const {
    PolyExpr out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

PolyExpr PolyExpr::operator*(const PolyExpr& o) const {
    PolyExpr out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            std::vector<MomentSymbol> factors = ma.factors;
            factors.insert(factors.end(), mb.factors.begin(), mb.factors.end());
            out.add_term(make_monomial(std::move(factors)), ca * cb);
        }
    }
    return out;
}

PolyExpr PolyExpr::scaled(const CoeffPoly& c) const {
    PolyExpr out;
    for (const auto& [m, k] : terms_) out.add_term(m, k * c);
    return out;
}

CoeffPoly PolyExpr::coefficient_of(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CoeffPoly() : it->second;
}

std::vector<Monomial> PolyExpr::monomials() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.push_back(m);
    return out;
}

PolyExpr PolyExpr::substituted_unit(const Letter& l, const SymmetryFlags& flags) const {
    PolyExpr out;
    for (const auto& [mono, coeff] : terms_) {
        std::vector<CanonSymbol> factors;
        factors.reserve(mono.factors.size());
        for (const auto& s : mono.factors) {
            MomentSymbol t = s;
            for (auto& arg : t.args) {
                Word kept;
                for (const auto& x : arg)
                    if (x != l) kept.push_back(x);
                arg = std::move(kept);
            }
            factors.push_back(canonicalize_symbol(t, flags));
        }
        out = out + PolyExpr::term(coeff, factors);
    }
    return out;
}

PolyExpr PolyExpr::instantiated(const LetterImages& images, const SymmetryFlags& flags) const {
    PolyExpr out;
    for (const auto& [mono, coeff] : terms_) {
        std::vector<CanonSymbol> factors;
        factors.reserve(mono.factors.size());
        for (const auto& s : mono.factors) {
            MomentSymbol t;
            t.order = s.order;
            for (int i = 0; i < 2; ++i) {
                Word img;
                for (const auto& x : s.args[i]) {
                    auto it = images.find(x);
                    if (it == images.end()) {
                        img.push_back(x);
                    } else {
                        img.insert(img.end(), it->second.begin(), it->second.end());
                    }
                }
                t.args[i] = std::move(img);
            }
            factors.push_back(canonicalize_symbol(t, flags));
        }
        out = out + PolyExpr::term(coeff, factors);
    }
    return out;
}

PolyExpr PolyExpr::mapped_symbols(const std::function<MomentSymbol(const MomentSymbol&)>& f,
                                  const SymmetryFlags& flags) const {
    PolyExpr out;
    for (const auto& [mono, coeff] : terms_) {
        std::vector<CanonSymbol> factors;
        factors.reserve(mono.factors.size());
        for (const auto& s : mono.factors) factors.push_back(canonicalize_symbol(f(s), flags));
        out = out + PolyExpr::term(coeff, factors);
    }
    return out;
}

PolyExpr PolyExpr::coeffs_substituted(
    const std::map<std::string, CoeffPoly, VarNaturalLess>& images) const {
    PolyExpr out;
    for (const auto& [m, c] : terms_) out.add_term(m, c.substituted(images));
    return out;
}

Rational PolyExpr::evaluated(
    const std::map<std::string, Rational>& symbol_values,
    const std::map<std::string, Rational, VarNaturalLess>& unknown_values) const {
    Rational acc(0);
    for (const auto& [mono, coeff] : terms_) {
        Rational v = coeff.evaluated(unknown_values);
        for (const auto& s : mono.factors) {
            auto it = symbol_values.find(render_symbol(s));
            if (it == symbol_values.end())
                throw EngineError("no value for symbol " + render_symbol(s));
            v *= it->second;
        }
        acc += v;
    }
    return acc;
}

namespace {

std::string render_expr(const PolyExpr& e, bool latex) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : e.terms()) {
        std::string mono_str = latex ? render_monomial_latex(mono) : render_monomial(mono);
        bool has_mono = !mono.factors.empty();
        std::string body;
        bool neg = false;
        if (coeff.is_constant()) {
            Rational c = coeff.constant_value();
            neg = c < 0;
            Rational a = neg ? Rational(-c) : c;
            if (!has_mono) {
                body = rational_str(a);
            } else if (a == 1) {
                body = mono_str;
            } else {
                body = rational_str(a) + (latex ? " " : "*") + mono_str;
            }
        } else if (coeff.terms().size() == 1) {
            Rational c = coeff.terms().begin()->second;
            neg = c < 0;
            CoeffPoly pos = neg ? -coeff : coeff;
            body = latex ? pos.render_latex() : pos.render();
            if (has_mono) body += (latex ? " " : "*") + mono_str;
        } else {
            std::string cs = latex ? coeff.render_latex() : coeff.render();
            body = "(" + cs + ")";
            if (has_mono) body += (latex ? " " : "*") + mono_str;
        }
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        out += body;
        first = false;
    }
    return out;
}

}  // namespace

std::string PolyExpr::render() const { return render_expr(*this, false); }
std::string PolyExpr::render_latex() const { return render_expr(*this, true); }

}  // namespace uniprod
