#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "uniprod/rational.hpp"

namespace uniprod {

// "alpha2" < "alpha10": label prefix lexicographically, numeric suffix
// numerically.
int var_natural_cmp(const std::string& a, const std::string& b);

struct VarNaturalLess {
    bool operator()(const std::string& a, const std::string& b) const {
        return var_natural_cmp(a, b) < 0;
    }
};

// Power product of unknowns; exponents are strictly positive.
using Mono = std::map<std::string, int, VarNaturalLess>;

// Graded order; ties break lexicographically with the highest-named
// variable carrying the most weight.
int mono_cmp(const Mono& a, const Mono& b);

struct MonoGreater {
    bool operator()(const Mono& a, const Mono& b) const { return mono_cmp(a, b) > 0; }
};

// Polynomial over the unknowns with exact rational coefficients. Terms are
// kept leading-first; zero coefficients are never stored.
class CoeffPoly {
  public:
    using Terms = std::map<Mono, Rational, MonoGreater>;

    CoeffPoly() = default;
    explicit CoeffPoly(const Rational& c);
    static CoeffPoly variable(const std::string& name, int exp = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()

    int total_degree() const;
    std::set<std::string, VarNaturalLess> variables() const;

    void add_term(const Mono& m, const Rational& c);

    CoeffPoly operator-() const;
    CoeffPoly operator+(const CoeffPoly& o) const;
    CoeffPoly operator-(const CoeffPoly& o) const;
    CoeffPoly operator*(const CoeffPoly& o) const;
    CoeffPoly scaled(const Rational& c) const;

    bool operator==(const CoeffPoly& o) const { return terms_ == o.terms_; }

    // Simultaneous substitution; unknowns absent from the map are kept.
    CoeffPoly substituted(const std::map<std::string, CoeffPoly, VarNaturalLess>& images) const;

    // Full evaluation; throws EngineError when a variable has no value.
    Rational evaluated(const std::map<std::string, Rational, VarNaturalLess>& values) const;

    // Coefficient of a monomial (zero when absent).
    Rational coefficient(const Mono& m) const;

    // Integer-content-free form with a positive leading coefficient.
    CoeffPoly normalized() const;

    std::string render() const;
    std::string render_latex() const;

  private:
    Terms terms_;
};

int poly_cmp(const CoeffPoly& a, const CoeffPoly& b);

struct PolyLess {
    bool operator()(const CoeffPoly& a, const CoeffPoly& b) const { return poly_cmp(a, b) < 0; }
};

// Linear view: poly == sum coeffs[v]*v + constant. Fails (returns false)
// when the total degree exceeds 1.
bool linear_view(const CoeffPoly& p, std::map<std::string, Rational, VarNaturalLess>& coeffs,
                 Rational& constant);

// Rational roots of a univariate polynomial in `var`. `complete` reports
// whether the polynomial splits into linear factors over the rationals.
std::vector<Rational> univariate_rational_roots(const CoeffPoly& p, const std::string& var,
                                                bool& complete);

}  // namespace uniprod
