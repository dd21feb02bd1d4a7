#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trs/term.hpp"

namespace trs {

using Int = boost::multiprecision::cpp_int;

/// Power product in a fixed number of variables: exps[i] is the exponent of
/// variable i.
struct Monomial {
    std::vector<int> exps;

    static Monomial unit(int vars);        // all exponents zero
    static Monomial var(int vars, int i);  // the monomial x_i

    int degree() const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Integer polynomial in a fixed number of variables, kept normalized
/// (entries sorted, duplicate monomials merged, zero coefficients dropped).
/// The coefficient function `coef` is the semantic identity of a
/// polynomial; normalization never changes it.
class Polynomial {
public:
    explicit Polynomial(int vars);
    Polynomial(int vars, std::vector<std::pair<Int, Monomial>> entries);

    static Polynomial constant(int vars, Int c);
    static Polynomial variable(int vars, int i);

    int vars() const { return vars_; }
    const std::vector<std::pair<Int, Monomial>>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    bool operator==(const Polynomial& other) const {
        return vars_ == other.vars_ && entries_ == other.entries_;
    }

private:
    int vars_;
    std::vector<std::pair<Int, Monomial>> entries_;
};

/// Coefficient of monomial m in p (summing duplicate entries).
Int coef(const Monomial& m, const Polynomial& p);

Polynomial padd(const Polynomial& p, const Polynomial& q);
Polynomial psub(const Polynomial& p, const Polynomial& q);
Polynomial pmul(const Polynomial& p, const Polynomial& q);
Polynomial ppower(const Polynomial& p, int k);

/// Substitutes qs[i] for variable i of p; all qs must share a variable
/// count, which becomes the result's.
Polynomial pcomp(const Polynomial& p, const std::vector<Polynomial>& qs);

/// Evaluates p at the given variable values.
Int peval(const Polynomial& p, const std::vector<Int>& values);

/// Assignment of a polynomial in arity(f) variables to each symbol f.
/// A marked symbol without an explicit entry inherits the entry of its
/// unmarked original.
class PolyInterpretation {
public:
    void set(const Symbol& f, Polynomial p);
    const Polynomial* find(const Symbol& f) const;
    const std::map<Symbol, Polynomial>& entries() const { return entries_; }

private:
    std::map<Symbol, Polynomial> entries_;
};

/// A term together with a variable bound: every variable index is <= bound.
struct BoundedTerm {
    Term term;
    int bound;

    /// Throws BoundExceeded if maxvar(t) > bound.
    static BoundedTerm inject(const Term& t, int bound);
};

/// Polynomial of a term in bound+1 variables: variable x becomes the
/// monomial for position x, applications compose the interpretation of the
/// root over the argument polynomials. Throws Error("missing_interpretation")
/// if a symbol has no (inherited) entry.
Polynomial termpoly(const PolyInterpretation& pi, const BoundedTerm& t);
Polynomial termpoly(const PolyInterpretation& pi, int bound, const Term& t);

/// termpoly(lhs) - termpoly(rhs) with the bound max(maxvar lhs, maxvar rhs).
/// All coefficients non-negative certifies lhs >= rhs over every natural
/// valuation.
Polynomial rule_poly_ge(const PolyInterpretation& pi, const Rule& r);

/// rule_poly_ge minus the constant 1; non-negative coefficients certify a
/// strict decrease.
Polynomial rule_poly_gt(const PolyInterpretation& pi, const Rule& r);

/// Absolute positiveness: every (canonical) coefficient is >= 0. Sound but
/// incomplete for positiveness over the naturals.
bool coef_pos(const Polynomial& p);

/// Weak monotonicity test: every coefficient of every entry is >= 0.
bool weak_monotone(const PolyInterpretation& pi);

/// Strict monotonicity test: weak, and in each entry the coefficient of the
/// plain monomial x_i is >= 1 for every argument position i.
bool strong_monotone(const PolyInterpretation& pi);

std::string to_string(const Polynomial& p);

} // namespace trs
