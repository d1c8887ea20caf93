#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "revar/rational.hpp"

namespace revar {

/// Exponent tuple of a monomial; length = number of ambient variables.
using Exp = std::vector<std::uint32_t>;

int exp_total_degree(const Exp& e);
bool exp_divides(const Exp& a, const Exp& b);  // true iff a[i] <= b[i] for all i
Exp exp_add(const Exp& a, const Exp& b);
Exp exp_sub(const Exp& a, const Exp& b);  // requires exp_divides(b, a)
Exp exp_lcm(const Exp& a, const Exp& b);

/// Shared, immutable variable-name table. Default names are t1..tn.
class VarNames {
public:
    static std::shared_ptr<const VarNames> standard(int n);
    static std::shared_ptr<const VarNames> make(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& all() const { return names_; }

private:
    explicit VarNames(std::vector<std::string> names) : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

using NamesPtr = std::shared_ptr<const VarNames>;

/// Total multiplicative well-orders on monomials: graded reverse lex, pure lex
/// and a two-block elimination order (grevlex within each block, the
/// eliminated block compared first).
class MonomialOrder {
public:
    enum class Kind { GrevLex, Lex, Block };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, {}); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
    static MonomialOrder block_elimination(std::vector<int> first_block);

    Kind kind() const { return kind_; }
    const std::vector<int>& first_block() const { return block_; }

    /// Three-way comparison: negative when a < b, 0 when equal, positive when a > b.
    int cmp(const Exp& a, const Exp& b) const;
    bool less(const Exp& a, const Exp& b) const { return cmp(a, b) < 0; }
    bool greater(const Exp& a, const Exp& b) const { return cmp(a, b) > 0; }

    /// Stable string key for Groebner-basis caches.
    std::string cache_key() const;

private:
    MonomialOrder(Kind k, std::vector<int> block) : kind_(k), block_(std::move(block)) {}
    Kind kind_;
    std::vector<int> block_;  // sorted variable indices of the eliminated block
};

/// Sparse multivariate polynomial over the rationals. Terms are stored in a
/// fixed exponent-lexicographic map (no zero coefficients), so iteration is
/// deterministic independently of any monomial order; order-dependent views
/// are produced by terms_sorted()/leading_term().
class MultiPoly {
public:
    MultiPoly() : n_(0) {}
    explicit MultiPoly(int nvars, NamesPtr names = nullptr);

    static MultiPoly constant(int nvars, const Rational& c, NamesPtr names = nullptr);
    static MultiPoly variable(int nvars, int i, NamesPtr names = nullptr);
    static MultiPoly monomial(int nvars, Exp e, const Rational& c, NamesPtr names = nullptr);

    int nvars() const { return n_; }
    const NamesPtr& names() const { return names_; }
    void set_names(NamesPtr names) { names_ = std::move(names); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exp, Rational>& terms() const { return terms_; }
    Rational coeff(const Exp& e) const;
    Rational constant_term() const;
    int total_degree() const;  // -1 for the zero polynomial

    /// Adds c * x^e, erasing the term if the sum cancels.
    void add_term(const Exp& e, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly scaled(const Rational& c) const;
    MultiPoly times_monomial(const Exp& e, const Rational& c) const;
    MultiPoly pow(unsigned k) const;

    bool operator==(const MultiPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    Rational evaluate(std::span<const Rational> point) const;
    /// Substitutes t_i -> images[i] (general polynomial composition).
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;
    /// Substitutes t_i -> factors[i] * t_i (monomial scaling only).
    MultiPoly scale_vars(std::span<const Rational> factors) const;

    std::pair<Exp, Rational> leading_term(const MonomialOrder& ord) const;  // throws on zero
    std::vector<std::pair<Exp, Rational>> terms_sorted(const MonomialOrder& ord) const;  // descending

    /// Integer-content-free form with positive leading coefficient under ord.
    MultiPoly normalized(const MonomialOrder& ord) const;

    std::string str() const;  // grevlex-descending rendering
    /// Parses sums of monomials like "t1^2*t2 - 3/2*t2 + 1".
    static MultiPoly parse(int nvars, const std::string& text, NamesPtr names = nullptr);

private:
    int n_;
    NamesPtr names_;
    std::map<Exp, Rational> terms_;
};

/// Single-divisor division: p = q*d + r with no term of r divisible by LT(d).
/// Returns {q, r}.
std::pair<MultiPoly, MultiPoly> divide_single(const MultiPoly& p, const MultiPoly& d,
                                              const MonomialOrder& ord);
/// Exact division; throws std::domain_error when the remainder is nonzero.
MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& d, const MonomialOrder& ord);

/// Laurent polynomial term map (integer exponents), used when parsing module
/// presentations over the Laurent ring before denominators are cleared.
struct LaurentPoly {
    int nvars = 0;
    std::map<std::vector<long>, Rational> terms;
};
LaurentPoly parse_laurent(int nvars, const std::string& text, const NamesPtr& names = nullptr);

}  // namespace revar
