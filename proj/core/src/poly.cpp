#include "revar/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace revar {

int exp_total_degree(const Exp& e) {
    int s = 0;
    for (auto x : e) s += static_cast<int>(x);
    return s;
}

bool exp_divides(const Exp& a, const Exp& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exp exp_add(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exp exp_sub(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exp exp_lcm(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

std::shared_ptr<const VarNames> VarNames::standard(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
    return std::shared_ptr<const VarNames>(new VarNames(std::move(names)));
}

std::shared_ptr<const VarNames> VarNames::make(std::vector<std::string> names) {
    return std::shared_ptr<const VarNames>(new VarNames(std::move(names)));
}

MonomialOrder MonomialOrder::block_elimination(std::vector<int> first_block) {
    std::sort(first_block.begin(), first_block.end());
    first_block.erase(std::unique(first_block.begin(), first_block.end()), first_block.end());
    return MonomialOrder(Kind::Block, std::move(first_block));
}

namespace {

// grevlex on the full tuple: higher total degree wins; ties broken by the
// *last* differing coordinate, smaller exponent winning.
int cmp_grevlex(const Exp& a, const Exp& b) {
    int da = exp_total_degree(a), db = exp_total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

int cmp_lex(const Exp& a, const Exp& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

// grevlex restricted to the coordinates listed in idx (ascending).
int cmp_grevlex_subset(const Exp& a, const Exp& b, const std::vector<int>& idx) {
    int da = 0, db = 0;
    for (int i : idx) {
        da += static_cast<int>(a[i]);
        db += static_cast<int>(b[i]);
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t k = idx.size(); k-- > 0;) {
        int i = idx[k];
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::cmp(const Exp& a, const Exp& b) const {
    if (a.size() != b.size()) throw std::invalid_argument("MonomialOrder::cmp: arity mismatch");
    switch (kind_) {
        case Kind::GrevLex:
            return cmp_grevlex(a, b);
        case Kind::Lex:
            return cmp_lex(a, b);
        case Kind::Block: {
            if (int c = cmp_grevlex_subset(a, b, block_)) return c;
            std::vector<int> rest;
            rest.reserve(a.size());
            std::size_t bi = 0;
            for (int i = 0; i < static_cast<int>(a.size()); ++i) {
                if (bi < block_.size() && block_[bi] == i) {
                    ++bi;
                    continue;
                }
                rest.push_back(i);
            }
            return cmp_grevlex_subset(a, b, rest);
        }
    }
    return 0;
}

std::string MonomialOrder::cache_key() const {
    switch (kind_) {
        case Kind::GrevLex:
            return "grevlex";
        case Kind::Lex:
            return "lex";
        case Kind::Block: {
            std::string k = "block";
            for (int i : block_) k += ":" + std::to_string(i);
            return k;
        }
    }
    return "?";
}

MultiPoly::MultiPoly(int nvars, NamesPtr names) : n_(nvars), names_(std::move(names)) {
    if (nvars < 0) throw std::invalid_argument("MultiPoly: negative variable count");
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c, NamesPtr names) {
    MultiPoly p(nvars, std::move(names));
    if (!c.is_zero()) p.terms_.emplace(Exp(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i, NamesPtr names) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("MultiPoly::variable: index out of range");
    Exp e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, std::move(e), Rational(1), std::move(names));
}

MultiPoly MultiPoly::monomial(int nvars, Exp e, const Rational& c, NamesPtr names) {
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("MultiPoly::monomial: exponent arity mismatch");
    MultiPoly p(nvars, std::move(names));
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exp_total_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coeff(Exp(n_, 0)); }

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, exp_total_degree(e));
    return d;
}

void MultiPoly::add_term(const Exp& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(n_, names_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (n_ != o.n_) throw std::invalid_argument("MultiPoly: arity mismatch in +");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (n_ != o.n_) throw std::invalid_argument("MultiPoly: arity mismatch in -");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("MultiPoly: arity mismatch in *");
    MultiPoly r(a.n_, a.names_ ? a.names_ : b.names_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(exp_add(ea, eb), ca * cb);
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(n_, names_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

MultiPoly MultiPoly::times_monomial(const Exp& e, const Rational& c) const {
    MultiPoly r(n_, names_);
    if (c.is_zero()) return r;
    for (const auto& [te, tc] : terms_) r.terms_.emplace(exp_add(te, e), tc * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly r = constant(n_, 1, names_);
    MultiPoly base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return r;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != n_)
        throw std::invalid_argument("MultiPoly::evaluate: point arity mismatch");
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < n_; ++i)
            if (e[i]) term *= point[i].pow(static_cast<long>(e[i]));
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != n_)
        throw std::invalid_argument("MultiPoly::substitute: image count mismatch");
    int m = images.empty() ? 0 : images[0].nvars();
    NamesPtr nm = images.empty() ? nullptr : images[0].names();
    MultiPoly r(m, nm);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(m, c, nm);
        for (int i = 0; i < n_; ++i)
            if (e[i]) term = term * images[i].pow(e[i]);
        r += term;
    }
    return r;
}

MultiPoly MultiPoly::scale_vars(std::span<const Rational> factors) const {
    if (static_cast<int>(factors.size()) != n_)
        throw std::invalid_argument("MultiPoly::scale_vars: factor count mismatch");
    MultiPoly r(n_, names_);
    for (const auto& [e, c] : terms_) {
        Rational f = c;
        for (int i = 0; i < n_; ++i)
            if (e[i]) f *= factors[i].pow(static_cast<long>(e[i]));
        r.add_term(e, f);
    }
    return r;
}

std::pair<Exp, Rational> MultiPoly::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::domain_error("MultiPoly::leading_term: zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

std::vector<std::pair<Exp, Rational>> MultiPoly::terms_sorted(const MonomialOrder& ord) const {
    std::vector<std::pair<Exp, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [&](const auto& a, const auto& b) { return ord.greater(a.first, b.first); });
    return v;
}

MultiPoly MultiPoly::normalized(const MonomialOrder& ord) const {
    if (is_zero()) return *this;
    // lcm of denominators / gcd of numerators, sign from the leading term
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& [e, c] : terms_) {
        mpz_class d = c.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        mpz_class n = c.numerator();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    mpq_class q(den_lcm, num_gcd);
    q.canonicalize();
    Rational scale{q};
    if (leading_term(ord).second.sign() < 0) scale = -scale;
    return scaled(scale);
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;
    int nvars;
    const NamesPtr& names;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) +
                                    ": " + msg + " in '" + s + "'");
    }

    std::string read_integer() {
        skip_ws();
        std::string out;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) out.push_back(s[i++]);
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected digits");
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out.push_back(s[i++]);
        return out;
    }

    Rational read_rational() {
        std::string num = read_integer();
        skip_ws();
        if (i < s.size() && s[i] == '/') {
            ++i;
            std::string den = read_integer();
            return Rational::parse(num + "/" + den);
        }
        return Rational::parse(num);
    }

    int read_var() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        if (i == start) fail("expected variable name");
        std::string name = s.substr(start, i - start);
        if (names) {
            for (int v = 0; v < names->size(); ++v)
                if (names->name(v) == name) return v;
        } else if (name.size() >= 2 && name[0] == 't') {
            int v = std::atoi(name.c_str() + 1) - 1;
            if (v >= 0 && v < nvars) return v;
        }
        fail("unknown variable '" + name + "'");
    }

    long read_exponent(bool allow_negative) {
        skip_ws();
        if (i >= s.size() || s[i] != '^') return 1;
        ++i;
        std::string e = read_integer();
        long v = std::atol(e.c_str());
        if (v < 0 && !allow_negative) fail("negative exponent not allowed here");
        return v;
    }

    // term := [rational] ( '*'? var ('^' int)? )*  — '*' separators required
    // between factors, optional between coefficient and first variable.
    template <typename Emit>
    void parse_sum(bool laurent, Emit emit) {
        bool first = true;
        while (!eof()) {
            int sign = 1;
            skip_ws();
            if (s[i] == '+' || s[i] == '-') {
                sign = s[i] == '-' ? -1 : 1;
                ++i;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            skip_ws();
            if (i >= s.size()) fail("dangling sign");
            Rational c(sign);
            std::vector<long> e(nvars, 0);
            bool any_factor = false;
            if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                c = c * read_rational();
                any_factor = true;
                skip_ws();
                if (i < s.size() && s[i] == '*') ++i;
            }
            while (true) {
                skip_ws();
                if (i >= s.size() || s[i] == '+' || s[i] == '-') break;
                int v = read_var();
                long k = read_exponent(laurent);
                e[v] += k;
                any_factor = true;
                skip_ws();
                if (i < s.size() && s[i] == '*') {
                    ++i;
                    continue;
                }
                break;
            }
            if (!any_factor) fail("empty term");
            emit(e, c);
        }
    }
};

}  // namespace

MultiPoly MultiPoly::parse(int nvars, const std::string& text, NamesPtr names) {
    if (!names) names = VarNames::standard(nvars);
    MultiPoly p(nvars, names);
    Parser parser{text, 0, nvars, names};
    parser.parse_sum(false, [&](const std::vector<long>& e, const Rational& c) {
        Exp ee(nvars);
        for (int i = 0; i < nvars; ++i) ee[i] = static_cast<std::uint32_t>(e[i]);
        p.add_term(ee, c);
    });
    return p;
}

LaurentPoly parse_laurent(int nvars, const std::string& text, const NamesPtr& names) {
    NamesPtr nm = names ? names : VarNames::standard(nvars);
    LaurentPoly p;
    p.nvars = nvars;
    Parser parser{text, 0, nvars, nm};
    parser.parse_sum(true, [&](const std::vector<long>& e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = p.terms.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) p.terms.erase(it);
        }
    });
    return p;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    auto sorted = terms_sorted(MonomialOrder::grevlex());
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            a = a.abs();
        }
        first = false;
        std::string mono;
        for (int i = 0; i < n_; ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += names_ ? names_->name(i) : "t" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            os << a.str();
        } else if (a.is_one()) {
            os << mono;
        } else {
            os << a.str() << "*" << mono;
        }
    }
    return os.str();
}

std::pair<MultiPoly, MultiPoly> divide_single(const MultiPoly& p, const MultiPoly& d,
                                              const MonomialOrder& ord) {
    if (d.is_zero()) throw std::domain_error("divide_single: division by zero polynomial");
    auto [dlt, dlc] = d.leading_term(ord);
    MultiPoly q(p.nvars(), p.names()), r(p.nvars(), p.names());
    MultiPoly work = p;
    while (!work.is_zero()) {
        auto [lt, lc] = work.leading_term(ord);
        if (exp_divides(dlt, lt)) {
            Exp m = exp_sub(lt, dlt);
            Rational c = lc / dlc;
            q.add_term(m, c);
            work -= d.times_monomial(m, c);
        } else {
            r.add_term(lt, lc);
            work.add_term(lt, -lc);
        }
    }
    return {q, r};
}

MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& d, const MonomialOrder& ord) {
    auto [q, r] = divide_single(p, d, ord);
    if (!r.is_zero()) throw std::domain_error("exact_divide: nonzero remainder");
    return q;
}

}  // namespace revar
