#include "q5/residue.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace q5 {

namespace {

Rational rpow(const Rational& c, int e) {
    Rational base = e < 0 ? Rational(1) / c : c;
    Rational r = 1;
    for (int i = 0; i < std::abs(e); ++i) r *= base;
    return r;
}

/// binom(a, j) for any integer a.
Rational gbinom(int a, int j) {
    Rational r = 1;
    for (int i = 0; i < j; ++i) {
        r *= a - i;
        r /= i + 1;
    }
    return r;
}

// c * m
struct Scaled {
    Rational c = 1;
    Monomial m;

    Scaled operator*(const Scaled& o) const { return {c * o.c, m * o.m}; }
    Scaled pow(int e) const { return {rpow(c, e), m.pow(e)}; }
    bool is_one() const { return m.is_one() && c == 1; }
    RationalPoly poly() const { return RationalPoly::term(m, c); }
};

RationalPoly poly_pow(const RationalPoly& p, int r) {
    RationalPoly out(Rational(1));
    for (int i = 0; i < r; ++i) out *= p;
    return out;
}

template <class A, class B>
std::vector<A> series_mul(const std::vector<A>& a, const std::vector<B>& b, int order) {
    std::vector<A> out(static_cast<std::size_t>(order) + 1, A(0L));
    for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
        if (detail::scalar_is_zero(a[i])) continue;
        for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j) {
            if (detail::scalar_is_zero(b[j])) continue;
            A term = a[i];
            term *= b[j];
            out[i + j] += term;
        }
    }
    return out;
}

std::vector<Rational> series_inverse(const std::vector<Rational>& a, int order) {
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
    out[0] = Rational(1) / a[0];
    for (int i = 1; i <= order; ++i) {
        Rational acc = 0;
        for (int j = 1; j <= i && j < static_cast<int>(a.size()); ++j) acc += a[j] * out[i - j];
        out[i] = -acc / a[0];
    }
    return out;
}

template <class A>
std::vector<A> series_pow(const std::vector<A>& a, int r, int order) {
    std::vector<A> out(static_cast<std::size_t>(order) + 1, A(0L));
    out[0] = A(1L);
    for (int i = 0; i < r; ++i) out = series_mul(out, a, order);
    return out;
}

using FactorKey = std::vector<BinomialFactor>;

void merge_into(std::map<FactorKey, RationalPoly>& acc, FactoredRational&& term) {
    if (term.numerator.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(term.factors, std::move(term.numerator));
    if (!inserted) {
        it->second += term.numerator;
        if (it->second.is_zero()) acc.erase(it);
    }
}

ResidueSum flatten(std::map<FactorKey, RationalPoly>&& acc) {
    ResidueSum out;
    out.reserve(acc.size());
    for (auto& [key, num] : acc) {
        FactoredRational f;
        f.numerator = std::move(num);
        f.factors = key;
        out.push_back(std::move(f));
    }
    return out;
}

struct Involved {
    Scaled c;  // coefficient times the part free of x
    int e;     // exponent of x
    int r;
};

}  // namespace

ContourOrder::ContourOrder(std::vector<Var> smallest_first, std::vector<Var> elimination)
    : smallest_first_(std::move(smallest_first)), elimination_(std::move(elimination)) {
    for (Var v : elimination_)
        if (std::find(smallest_first_.begin(), smallest_first_.end(), v) == smallest_first_.end())
            throw InputError("eliminated variable " + var::name(v) + " missing from the magnitude order");
}

ContourOrder ContourOrder::standard(int k) {
    std::vector<Var> order{var::series_t()};
    for (int i = k; i >= 1; --i) order.push_back(var::torus(i));
    std::vector<Var> elim;
    for (int i = 1; i <= k; ++i) elim.push_back(var::torus(i));
    return ContourOrder(std::move(order), std::move(elim));
}

ContourOrder ContourOrder::standard_reversed(int k) {
    ContourOrder o = standard(k);
    std::reverse(o.elimination_.begin(), o.elimination_.end());
    return o;
}

int ContourOrder::rank(Var v) const {
    auto it = std::find(smallest_first_.begin(), smallest_first_.end(), v);
    if (it == smallest_first_.end()) throw std::logic_error("variable " + var::name(v) + " has no magnitude");
    return static_cast<int>(it - smallest_first_.begin());
}

bool ContourOrder::is_small(const Monomial& m) const {
    int best = -1;
    int exp = 0;
    for (const auto& f : m.factors()) {
        int r = rank(f.var);
        if (best < 0 || r < best) {
            best = r;
            exp = f.exp;
        }
    }
    return best >= 0 && exp > 0;
}

std::string ContourOrder::describe() const {
    std::string s;
    for (std::size_t i = 0; i < smallest_first_.size(); ++i) s += (i ? " << " : "|") + var::name(smallest_first_[i]);
    s += "|; eliminate";
    for (Var v : elimination_) s += " " + var::name(v);
    return s;
}

void FactoredRational::canonicalize(const ContourOrder& order) {
    if (!prefactor.is_one()) {
        numerator *= RationalPoly::term(prefactor, Rational(1));
        prefactor = Monomial{};
    }
    std::map<std::pair<Monomial, Rational>, int, decltype([](const auto& a, const auto& b) {
                 if (!(a.first == b.first)) return a.first < b.first;
                 return a.second < b.second;
             })>
        merged;
    for (const auto& f : factors) {
        if (f.multiplicity == 0) continue;
        if (f.mono.is_one()) {
            if (f.coeff == 1) throw DomainError("denominator factor (1 - 1)");
            numerator *= rpow(Rational(1) - f.coeff, -f.multiplicity);
            continue;
        }
        if (order.is_small(f.mono)) {
            merged[{f.mono, f.coeff}] += f.multiplicity;
            continue;
        }
        // 1/(1 - C)^r = (-1/C)^r / (1 - 1/C)^r
        Scaled inv = Scaled{f.coeff, f.mono}.pow(-1);
        Scaled lead = Scaled{Rational(-1), {}} * inv;
        numerator *= lead.pow(f.multiplicity).poly();
        merged[{inv.m, inv.c}] += f.multiplicity;
    }
    factors.clear();
    for (const auto& [key, mult] : merged)
        if (mult != 0) factors.push_back({key.second, key.first, mult});
    std::sort(factors.begin(), factors.end());
}

FactoredRational build_integrand(int k, WeylNumerator numerator) {
    if (k < 1 || k > 5) throw InputError("qubit count must be in 1..5");
    FactoredRational f;
    f.numerator = RationalPoly(Rational(1));
    for (int i = 1; i <= k; ++i) f.prefactor = f.prefactor.times(var::torus(i), -1);
    const Rational sign = numerator == WeylNumerator::kSigned ? -1 : 1;
    for (int i = 1; i <= k; ++i)
        f.numerator *= RationalPoly(Rational(1)) + RationalPoly::term(Monomial::of(var::torus(i), -2), sign);
    for (int s = 0; s < (1 << k); ++s) {
        Monomial m = Monomial::of(var::series_t());
        for (int i = 1; i <= k; ++i) m = m.times(var::torus(i), (s >> (i - 1)) & 1 ? -1 : 1);
        f.factors.push_back({Rational(1), m, 1});
    }
    std::sort(f.factors.begin(), f.factors.end());
    return f;
}

ResidueSum inner_residue(const FactoredRational& input, Var x, const ContourOrder& order) {
    FactoredRational f = input;
    f.canonicalize(order);
    // Res F dx summed over inside poles = constant term of x F.
    f.numerator *= RationalPoly::variable(x);

    std::vector<BinomialFactor> fixed;
    std::vector<Involved> inv;
    for (const auto& bf : f.factors) {
        const int e = bf.mono.exponent(x);
        if (e == 0) fixed.push_back(bf);
        else inv.push_back({{bf.coeff, bf.mono.without(x)}, e, bf.multiplicity});
    }

    std::map<FactorKey, RationalPoly> acc;
    auto emit = [&](RationalPoly num, std::vector<BinomialFactor> extra) {
        FactoredRational out;
        out.numerator = std::move(num);
        out.factors = fixed;
        out.factors.insert(out.factors.end(), extra.begin(), extra.end());
        out.canonicalize(order);
        merge_into(acc, std::move(out));
    };

    if (inv.empty()) {
        RationalPoly ct;
        for (const auto& [m, c] : f.numerator.terms())
            if (m.exponent(x) == 0) ct.add_term(m, c);
        emit(std::move(ct), {});
        return flatten(std::move(acc));
    }

    // Every factor is small, so its roots lie inside exactly when the
    // exponent of x is negative.
    int period = 1;
    for (const auto& i : inv)
        if (i.e < 0) period = std::lcm(period, -i.e);

    // Make every x-exponent a multiple of `period`, then pass to w = x^period.
    RationalPoly num = f.numerator;
    for (auto& i : inv) {
        const int len = period / std::gcd(std::abs(i.e), period);
        if (len > 1) {
            RationalPoly geo;
            const Scaled y{i.c.c, i.c.m.times(x, i.e)};
            for (int j = 0; j < len; ++j) geo += y.pow(j).poly();
            num *= poly_pow(geo, i.r);
            i.c = i.c.pow(len);
            i.e *= len;
        }
        i.e /= period;
    }
    std::map<int, RationalPoly> by_exp;
    for (const auto& [m, c] : num.terms()) {
        const int ex = m.exponent(x);
        if (ex % period) continue;
        by_exp[ex / period].add_term(m.without(x), c);
    }
    if (by_exp.empty()) return {};

    // Origin: expand every factor at w = 0.
    {
        int shift = 0;
        for (const auto& i : inv)
            if (i.e < 0) shift += -i.e * i.r;
        const int top = -by_exp.begin()->first - shift;
        if (top >= 0) {
            std::vector<RationalPoly> ser(static_cast<std::size_t>(top) + 1);
            ser[0] = RationalPoly(Rational(1));
            Scaled lead;
            for (const auto& i : inv) {
                const Scaled base = i.e > 0 ? i.c : i.c.pow(-1);
                const int step = std::abs(i.e);
                if (i.e < 0) lead = lead * Scaled{rpow(Rational(-1), i.r), {}} * i.c.pow(-i.r);
                std::vector<RationalPoly> geo(static_cast<std::size_t>(top) + 1);
                for (int j = 0; j * step <= top; ++j)
                    geo[j * step] = base.pow(j).poly() * Rational(binomial(i.r + j - 1, j));
                ser = series_mul(ser, geo, top);
            }
            RationalPoly total;
            for (const auto& [p, np] : by_exp) {
                const int need = -p - shift;
                if (need < 0) break;
                if (need <= top && !ser[need].is_zero()) total += np * ser[need];
            }
            if (!total.is_zero()) emit(total * lead.poly(), {});
        }
    }

    // Poles w = W inside the contour: the roots of factors (1 - C/w).
    std::vector<Scaled> poles;
    for (const auto& i : inv) {
        if (i.e != -1) continue;
        const bool seen = std::any_of(poles.begin(), poles.end(),
                                      [&](const Scaled& w) { return w.c == i.c.c && w.m == i.c.m; });
        if (!seen) poles.push_back(i.c);
    }

    for (const Scaled& w : poles) {
        struct Vanishing {
            int a, r;
        };
        struct Other {
            Scaled mu;
            int a, r;
        };
        std::vector<Vanishing> van;
        std::vector<Other> other;
        int order_r = 0;
        for (const auto& i : inv) {
            Scaled mu = i.c * w.pow(i.e);
            if (mu.is_one()) {
                van.push_back({i.e, i.r});
                order_r += i.r;
            } else {
                other.push_back({mu, i.e, i.r});
            }
        }
        const int top = order_r - 1;

        // w = W(1 + s); collect everything regular at s = 0 to order s^top.
        std::vector<RationalPoly> h(static_cast<std::size_t>(top) + 1);
        for (const auto& [p, np] : by_exp) {
            const RationalPoly moved = np * w.pow(p).poly();
            for (int j = 0; j <= top; ++j) {
                Rational b = gbinom(p, j);
                if (!is_zero(b)) h[j] += moved * b;
            }
        }
        std::vector<Rational> scalar(static_cast<std::size_t>(top) + 1, Rational(0));
        for (int j = 0; j <= top; ++j) scalar[j] = j % 2 ? -1 : 1;  // 1/(1+s)
        for (const auto& v : van) {
            // 1 - (1+s)^a = s * phi(s)
            std::vector<Rational> phi(static_cast<std::size_t>(top) + 1);
            for (int j = 0; j <= top; ++j) phi[j] = -gbinom(v.a, j + 1);
            scalar = series_mul(scalar, series_pow(series_inverse(phi, top), v.r, top), top);
        }
        h = series_mul(h, scalar, top);

        std::vector<BinomialFactor> extra;
        for (const auto& o : other) {
            // (1 - mu (1+s)^a)^{-1} (1 - mu)^{top+1}
            //   = sum_{j<=top} mu^j ((1+s)^a - 1)^j (1 - mu)^{top-j}   mod s^{top+1}
            std::vector<Rational> delta(static_cast<std::size_t>(top) + 1, Rational(0));
            for (int j = 1; j <= top; ++j) delta[j] = gbinom(o.a, j);
            const RationalPoly one_minus = RationalPoly(Rational(1)) - o.mu.poly();
            std::vector<RationalPoly> pser(static_cast<std::size_t>(top) + 1);
            std::vector<Rational> dpow(static_cast<std::size_t>(top) + 1, Rational(0));
            dpow[0] = 1;
            for (int j = 0; j <= top; ++j) {
                const RationalPoly coef = o.mu.pow(j).poly() * poly_pow(one_minus, top - j);
                for (int i = j; i <= top; ++i)
                    if (!is_zero(dpow[i])) pser[i] += coef * dpow[i];
                dpow = series_mul(dpow, delta, top);
            }
            h = series_mul(h, series_pow(pser, o.r, top), top);
            extra.push_back({o.mu.c, o.mu.m, (top + 1) * o.r});
        }
        if (!h[top].is_zero()) emit(std::move(h[top]), std::move(extra));
    }
    return flatten(std::move(acc));
}

std::vector<Rational> HilbertRational::series(int n_max) const {
    return taylor_coefficients(numerator, denominator, n_max);
}

std::string HilbertRational::str() const { return "(" + numerator.str() + ") / (" + denominator.str() + ")"; }

HilbertRational reduce_rational(const UPoly& num, const UPoly& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    if (num.is_zero()) return {UPoly(), UPoly::constant(1)};
    UPoly g = UPoly::gcd(num, den);
    UPoly n = UPoly::divmod(num, g).first;
    UPoly d = UPoly::divmod(den, g).first;
    // Strip common powers of t left by a zero constant term in both.
    while (is_zero(d.at(0))) {
        if (!is_zero(n.at(0))) throw std::domain_error("rational function has a pole at t = 0");
        n = UPoly(std::vector<Rational>(n.coeffs().begin() + 1, n.coeffs().end()));
        d = UPoly(std::vector<Rational>(d.coeffs().begin() + 1, d.coeffs().end()));
    }
    const Rational d0 = d.at(0);
    return {n.scaled(Rational(1) / d0), d.scaled(Rational(1) / d0)};
}

HilbertRational sum_univariate(const ResidueSum& terms, Var t) {
    std::map<std::pair<int, Rational>, int, decltype([](const auto& a, const auto& b) {
                 if (a.first != b.first) return a.first < b.first;
                 return a.second < b.second;
             })>
        top;
    for (const auto& term : terms)
        for (const auto& f : term.factors) {
            if (f.mono.factors().size() != 1 || f.mono.factors()[0].var != t)
                throw std::logic_error("leftover variables after elimination");
            auto& slot = top[{f.mono.exponent(t), f.coeff}];
            slot = std::max(slot, f.multiplicity);
        }
    UPoly common = UPoly::constant(1);
    for (const auto& [key, r] : top) common = common * UPoly::one_minus(key.second, key.first).pow(r);

    std::vector<RationalPoly> nums;
    for (const auto& term : terms) nums.push_back(term.numerator * RationalPoly::term(term.prefactor, Rational(1)));
    int low = 0;
    for (const auto& n : nums)
        for (const auto& [m, c] : n.terms()) low = std::min(low, m.exponent(t));

    UPoly total;
    for (std::size_t j = 0; j < terms.size(); ++j) {
        const auto& term = terms[j];
        std::vector<Rational> nc;
        for (const auto& [m, c] : nums[j].terms()) {
            if (m.factors().size() > 1 || (!m.is_one() && m.factors()[0].var != t))
                throw std::logic_error("leftover variables after elimination");
            const int idx = m.exponent(t) - low;
            if (idx >= static_cast<int>(nc.size())) nc.resize(idx + 1, Rational(0));
            nc[idx] += c;
        }
        UPoly part(std::move(nc));
        auto mult = top;
        for (const auto& f : term.factors) mult[{f.mono.exponent(t), f.coeff}] -= f.multiplicity;
        for (const auto& [key, r] : mult) part = part * UPoly::one_minus(key.second, key.first).pow(r);
        total += part;
    }
    UPoly den = common * UPoly::monomial(-low);
    return reduce_rational(total, den);
}

HilbertRational hilbert_series_residue(int k, const ContourOrder& order, const ResidueOptions& options,
                                       ResidueStats* stats) {
    if (k < 1 || k > 5) throw InputError("qubit count must be in 1..5");
    if (k == 5 && !options.allow_long) throw InputError("k = 5 needs the long-running flag");
    FactoredRational integrand = build_integrand(k, options.numerator);
    integrand.canonicalize(order);
    ResidueSum terms{integrand};
    for (Var x : order.elimination()) {
        std::map<FactorKey, RationalPoly> acc;
        for (const auto& term : terms)
            for (auto& piece : inner_residue(term, x, order)) merge_into(acc, std::move(piece));
        terms = flatten(std::move(acc));
        if (stats) stats->terms_after_step.push_back(terms.size());
    }
    return sum_univariate(terms, var::series_t());
}

HilbertRational hilbert_series_residue(int k, const ResidueOptions& options) {
    return hilbert_series_residue(k, ContourOrder::standard(k), options);
}

}  // namespace q5
