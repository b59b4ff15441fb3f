#include "invol/genfun/catalog.hpp"

#include <stdexcept>

#include "invol/chebyshev/chebyshev.hpp"

namespace invol {

namespace {

using LF = LaurentFraction;

LF V(int n) { return LF(chebV(n)); }
LF W(int n) { return LF(chebW(n)); }
LF Y(int n) { return V(n) + V(n - 1); }
LF X() { return LF(LaurentPolynomial::monomial(1L, 1)); }
LF Xp(int e) { return LF(LaurentPolynomial::monomial(1L, e)); }
LF IU() { return LF(LaurentPolynomial(Polynomial(GaussianInt::I()))); }
LF IX() { return IU() * X(); }
LF poly(std::initializer_list<long> c) { return LF(LaurentPolynomial(Polynomial(c))); }
LF vp(int k) { return LF(LaurentPolynomial(v_poly(k))); }
LF C(long c) { return LF(c); }

template <class Fn>
LF sum(int lo, int hi, Fn f) {
    LF s(0L);
    for (int j = lo; j <= hi; ++j) s += f(j);
    return s;
}

Permutation dec(int k) { return decreasing(k); }
Permutation sk(const Permutation& a, const Permutation& b) { return skew_sum(a, b); }
Permutation perm(std::string_view s) { return Permutation::parse(s); }

GFQuery query(Family f, Variant v, const Permutation& p) {
    GFQuery q;
    q.family = f;
    q.variant = v;
    q.patterns = {PatternArg(p)};
    return q;
}

GFQuery query_none(Family f, Variant v) {
    GFQuery q;
    q.family = f;
    q.variant = v;
    q.patterns = {PatternArg(NoPattern{})};
    return q;
}

Reference engine_ref(std::vector<GFQuery> qs) {
    Reference r;
    r.kind = Reference::Kind::Engine;
    r.queries = std::move(qs);
    return r;
}

Reference occurrence_ref(const Permutation& p, int r) {
    Reference ref;
    ref.kind = Reference::Kind::Occurrence;
    ref.pattern = p;
    ref.r = r;
    return ref;
}

Formula rat(std::function<LF(const Params&)> f) {
    Formula out;
    out.rational = std::move(f);
    return out;
}

Formula ser(std::function<PowerSeries(const Params&, int)> f) {
    Formula out;
    out.series = std::move(f);
    return out;
}

// Theorem forms of F^-[k]; F of the empty pattern is 0.
LF Fminus_dec(int k) {
    if (k == 0) return C(0);
    if (k % 2 == 0) return W(k / 2 - 1) / (IX() * W(k / 2));
    const int m = (k + 1) / 2;
    return (W(m - 2) - IX() * W(m - 3)) / (IX() * (W(m - 1) - IX() * W(m - 2)));
}

// (f0, f1) with F_pi = f0/f1 for the sandwich bases 12, 21, 132, 213.
std::pair<LF, LF> sandwich_fraction(int idx, Variant v) {
    const bool plus = v == Variant::Plus;
    switch (idx) {
        case 0: return plus ? std::pair{C(1), poly({1, -1})} : std::pair{poly({1, 1}), poly({1, 0, 1})};
        case 1: return {C(1), poly({1, -1})};
        case 2:
        case 3: return plus ? std::pair{C(1), poly({1, -1, -1})} : std::pair{C(1), poly({1, -1, 1})};
        default: throw std::invalid_argument("sandwich base index out of range");
    }
}

// Shape 0: 1(-)pi(-)1, 1: 1(-)pi, 2: pi(-)1.
Permutation wrap(const Permutation& pi, int shape) {
    const Permutation one{1};
    if (shape == 0) return sk(sk(one, pi), one);
    if (shape == 1) return sk(one, pi);
    return sk(pi, one);
}

bool wrap_ok(const Permutation& pi, int shape) {
    if (shape == 1) return pi.entries().back() != 1;
    if (shape == 2) return pi.entries().front() != pi.size();
    return true;
}

PowerSeries geometric_tail(int N, int from, const std::function<mpz_class(int)>& c) {
    PowerSeries s(N);
    for (int n = from; n <= N; ++n) s[n] = GaussianInt(c(n));
    return s;
}

mpz_class fib(int n) {
    mpz_class r;
    mpz_fib_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class pow2(int e) {
    mpz_class r = 1;
    r <<= static_cast<mp_bitcnt_t>(e);
    return r;
}

mpz_class divide_exact(const mpz_class& a, long b, const char* what) {
    if (a % b != 0) throw TranscriptionError(std::string(what) + ": non-integer coefficient");
    return a / b;
}

// (A sqrt(D) + B) / (2 x^2 E sqrt(D)) with D(0) = 1.
PowerSeries algebraic_p(const Polynomial& A, const Polynomial& B, const Polynomial& E, const Polynomial& D, int N) {
    const int M = N + 2;
    auto lift = [M](const Polynomial& p) {
        PowerSeries s(M);
        for (int d = 0; d <= std::min(p.degree(), M); ++d) s[d] = p.coeff(d);
        return s;
    };
    PowerSeries root = lift(D).sqrt();
    PowerSeries num = lift(A) * root + lift(B);
    PowerSeries den = lift(E) * root;
    for (int n = 0; n <= M; ++n) {
        GaussianInt q;
        if (!exact_divide(num[n], GaussianInt(2L), q)) throw TranscriptionError("P(empty): odd numerator coefficient");
        num[n] = q;
    }
    return num.divide_x(2).divided_by(den.truncated(N));
}

Formula p_relation(Variant v) {
    return ser([v](const Params& p, int N) {
        const Permutation& pi = relation_bases().at(static_cast<std::size_t>(p[0]));
        const Permutation q = wrap(pi, p[1]);
        auto eng = shared_engine(v, N);
        PowerSeries Fq = to_gaussian(eng->F(q));
        PowerSeries Fp = to_gaussian(eng->F(pi));
        PowerSeries Pp = to_gaussian(eng->P(pi));
        PowerSeries x2 = PowerSeries::monomial(GaussianInt(1L), 2, N);
        if (v == Variant::Plus) {
            PowerSeries g = RationalFunction(Polynomial::monomial(1L, 2), Polynomial({1, -1})).expand(N);
            return x2 * Fq * Fq * (Pp + g * Fp * Fp);
        }
        PowerSeries g = RationalFunction(Polynomial({0, 0, 1, 1}), Polynomial({1, 0, 1})).expand(N);
        return -(x2 * Fq * Fq * (Pp - g * Fp * Fp));
    });
}

Formula g_relation(Variant v) {
    return ser([v](const Params& p, int N) {
        const Permutation& pi = relation_bases().at(static_cast<std::size_t>(p[0]));
        const Permutation q = wrap(pi, p[1]);
        auto eng = shared_engine(v, N);
        PowerSeries Fq = to_gaussian(eng->F(q));
        PowerSeries Gp = to_gaussian(eng->G(pi));
        PowerSeries r = PowerSeries::monomial(GaussianInt(1L), 2, N) * Gp * Fq * Fq;
        return v == Variant::Plus ? r : -r;
    });
}

Reference relation_ref(Family f, Variant v, const Params& p) {
    const Permutation& pi = relation_bases().at(static_cast<std::size_t>(p[0]));
    return engine_ref({query(f, v, wrap(pi, p[1]))});
}

bool relation_ok(const Params& p) {
    return wrap_ok(relation_bases().at(static_cast<std::size_t>(p[0])), p[1]);
}

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> c;
    const auto P = Variant::Plus;
    const auto M = Variant::Minus;
    auto add = [&](CatalogEntry e) { c.push_back(std::move(e)); };
    auto one_query = [](Family f, Variant v, std::function<Permutation(const Params&)> pat) {
        return [f, v, pat](const Params& p) { return engine_ref({query(f, v, pat(p))}); };
    };

    // F family.
    add({.id = "F+[2k]", .family = Family::F, .variant = P, .params = {{"k", 1}},
         .statement = "V_{k-1}/(x V_k)",
         .printed = rat([](const Params& p) { return V(p[0] - 1) / (X() * V(p[0])); }),
         .reference = one_query(Family::F, P, [](const Params& p) { return dec(2 * p[0]); })});
    add({.id = "F+[2k-1]", .family = Family::F, .variant = P, .params = {{"k", 1}},
         .statement = "(V_{k-1}+V_{k-2})/(x(V_k+V_{k-1}))",
         .printed = rat([](const Params& p) { return (V(p[0] - 1) + V(p[0] - 2)) / (X() * (V(p[0]) + V(p[0] - 1))); }),
         .reference = one_query(Family::F, P, [](const Params& p) { return dec(2 * p[0] - 1); })});
    add({.id = "F-[2k]", .family = Family::F, .variant = M, .params = {{"k", 1}},
         .statement = "W_{k-1}/(ix W_k)",
         .printed = rat([](const Params& p) { return W(p[0] - 1) / (IX() * W(p[0])); }),
         .reference = one_query(Family::F, M, [](const Params& p) { return dec(2 * p[0]); })});
    add({.id = "F-[2k-1]", .family = Family::F, .variant = M, .params = {{"k", 1}},
         .statement = "(W_{k-2} - ix W_{k-3})/(ix(W_{k-1} - ix W_{k-2}))",
         .printed = rat([](const Params& p) { return Fminus_dec(2 * p[0] - 1); }),
         .reference = one_query(Family::F, M, [](const Params& p) { return dec(2 * p[0] - 1); })});
    auto f_k231 = [](const Params& p) {
        const int k = p[0];
        const LF a = poly({1, 0, 1}), b = IX() * poly({1, 1});
        return (a * W(k - 1) - b * W(k - 2)) / (IX() * (a * W(k) - b * W(k - 1)));
    };
    add({.id = "F-[k]-231", .family = Family::F, .variant = M, .params = {{"k", 1}},
         .statement = "((1+x^2)W_{k-1} - ix(1+x)W_{k-2})/(ix((1+x^2)W_k - ix(1+x)W_{k-1})), also for [k]-12",
         .printed = rat(f_k231),
         .reference = [](const Params& p) {
             return engine_ref({query(Family::F, M, sk(dec(p[0]), perm("231"))),
                                query(Family::F, M, sk(dec(p[0]), perm("12")))});
         }});
    add({.id = "F-[k]-213", .family = Family::F, .variant = M, .params = {{"k", 0}},
         .statement = "(W_k - ix W_{k-1})/(ix(W_{k+1} - ix W_k)), also for [k]-132",
         .printed = rat([](const Params& p) {
             const int k = p[0];
             return (W(k) - IX() * W(k - 1)) / (IX() * (W(k + 1) - IX() * W(k)));
         }),
         .reference = [](const Params& p) {
             return engine_ref({query(Family::F, M, sk(dec(p[0]), perm("213"))),
                                query(Family::F, M, sk(dec(p[0]), perm("132")))});
         }});
    auto f_k123 = [](const LF& c) {
        return [c](const Params& p) {
            const int k = p[0];
            const LF a = pow(poly({1, 0, 1}), 3);
            return (a * W(k - 1) - IX() * c * W(k - 2)) / (IX() * (a * W(k) - IX() * c * W(k - 1)));
        };
    };
    add({.id = "F-[k]-123", .family = Family::F, .variant = M, .params = {{"k", 0}},
         .statement = "((1+x^2)^3 W_{k-1} - ix(1+3x^2+2x^4+x^5)W_{k-2})/(ix((1+x^2)^3 W_k - ix(1+3x^2+2x^4+x^5)W_{k-1}))",
         .printed = rat(f_k123(poly({1, 0, 3, 0, 2, 1}))),
         .corrected = rat(f_k123(poly({1, 1, 3, 0, 2, 1}))),
         .correction_note = "inner polynomial 1+x+3x^2+2x^4+x^5",
         .reference = one_query(Family::F, M, [](const Params& p) { return sk(dec(p[0]), perm("123")); })});
    add({.id = "F-[1,l]", .family = Family::F, .variant = M, .params = {{"l", 1}},
         .statement = "(1 + x F-[l])/(1 + x^2 F-[l])",
         .printed = rat([](const Params& p) {
             const LF f = Fminus_dec(p[0]);
             return (C(1) + X() * f) / (C(1) + Xp(2) * f);
         }),
         .reference = one_query(Family::F, M, [](const Params& p) { return layered({1, p[0]}); }),
         .weight = [](const Params& p) { return 1 + p[0]; }});
    add({.id = "F-[k,l]", .family = Family::F, .variant = M, .params = {{"k", 2}, {"l", 1}},
         .statement = "(1 + x^2 F-[k-2] F-[l])/(1 - x + x^2 F-[k-2] + x^2 F-[l])",
         .printed = rat([](const Params& p) {
             const LF a = Fminus_dec(p[0] - 2), b = Fminus_dec(p[1]);
             return (C(1) + Xp(2) * a * b) / (C(1) - X() + Xp(2) * a + Xp(2) * b);
         }),
         .reference = one_query(Family::F, M, [](const Params& p) { return layered({p[0], p[1]}); }),
         .weight = [](const Params& p) { return p[0] + p[1]; }});
    add({.id = "F-[k,l]-merged", .family = Family::F, .variant = M, .params = {{"k", 1}, {"l", 1}},
         .statement = "F-[k+l] when k and l are not both odd",
         .printed = rat([](const Params& p) { return Fminus_dec(p[0] + p[1]); }),
         .reference = one_query(Family::F, M, [](const Params& p) { return layered({p[0], p[1]}); }),
         .admissible = [](const Params& p) { return p[0] % 2 == 0 || p[1] % 2 == 0; },
         .weight = [](const Params& p) { return p[0] + p[1]; }});
    add({.id = "F-[2k-1,2l-1]", .family = Family::F, .variant = M, .params = {{"k", 1}, {"l", 1}},
         .statement = "(W_{k+l-1} - 2i W_{k+l-2} - W_{k+l-3})/(ix(W_{k+l} - 2i W_{k+l-1} - W_{k+l-2}))",
         .printed = rat([](const Params& p) {
             const int s = p[0] + p[1];
             const LF two_i = C(2) * IU();
             return (W(s - 1) - two_i * W(s - 2) - W(s - 3)) / (IX() * (W(s) - two_i * W(s - 1) - W(s - 2)));
         }),
         .reference = one_query(Family::F, M, [](const Params& p) { return layered({2 * p[0] - 1, 2 * p[1] - 1}); }),
         .weight = [](const Params& p) { return 2 * p[0] + 2 * p[1] - 2; }});
    add({.id = "F-[2k1,2k2,2k3]", .family = Family::F, .variant = M, .params = {{"k1", 1}, {"k2", 1}, {"k3", 1}},
         .statement = "(W_s W_{s-1} + W_{k1+k2-1} W_{k1+k3-1} W_{k2+k3-1})/(ix W_{k1+k2} W_{k1+k3} W_{k2+k3}), s = k1+k2+k3",
         .printed = rat([](const Params& p) {
             const int a = p[0], b = p[1], d = p[2], s = a + b + d;
             return (W(s) * W(s - 1) + W(a + b - 1) * W(a + d - 1) * W(b + d - 1)) /
                    (IX() * W(a + b) * W(a + d) * W(b + d));
         }),
         .reference = one_query(Family::F, M, [](const Params& p) { return layered({2 * p[0], 2 * p[1], 2 * p[2]}); }),
         .weight = [](const Params& p) { return 2 * (p[0] + p[1] + p[2]); }});
    for (Variant v : {P, M}) {
        const bool plus = v == P;
        add({.id = plus ? "F+[j]-pi-[j]" : "F-[j]-pi-[j]", .family = Family::F, .variant = v,
             .params = {{"j", 1}, {"base", 0, 3}},
             .statement = plus ? "(f1 V_{j-1} - x f0 V_{j-2})/(x f1 V_j - x^2 f0 V_{j-1}), F+_pi = f0/f1"
                               : "(f1 W_{j-1} - ix f0 W_{j-2})/(ix f1 W_j + x^2 f0 W_{j-1}), F-_pi = f0/f1",
             .printed = rat([v, plus](const Params& p) {
                 const int j = p[0];
                 auto [f0, f1] = sandwich_fraction(p[1], v);
                 if (plus) return (f1 * V(j - 1) - X() * f0 * V(j - 2)) / (X() * f1 * V(j) - Xp(2) * f0 * V(j - 1));
                 return (f1 * W(j - 1) - IX() * f0 * W(j - 2)) / (IX() * f1 * W(j) + Xp(2) * f0 * W(j - 1));
             }),
             .reference = [v](const Params& p) {
                 const Permutation& pi = sandwich_bases().at(static_cast<std::size_t>(p[1]));
                 return engine_ref({query(Family::F, v, sk(sk(dec(p[0]), pi), dec(p[0])))});
             }});
    }

    // G family.
    add({.id = "G+12", .family = Family::G, .variant = P, .statement = "x^2/(1-x^2)",
         .printed = rat([](const Params&) { return Xp(2) / poly({1, 0, -1}); }),
         .reference = [](const Params&) { return engine_ref({query(Family::G, Variant::Plus, perm("12"))}); }});
    add({.id = "G-12", .family = Family::G, .variant = M, .statement = "x^2/(1+x^2)",
         .printed = rat([](const Params&) { return Xp(2) / poly({1, 0, 1}); }),
         .reference = [](const Params&) { return engine_ref({query(Family::G, Variant::Minus, perm("12"))}); }});
    add({.id = "G+[k]-12", .family = Family::G, .variant = P, .params = {{"k", 1}},
         .statement = "(1-x)/((1+x) V_{k+1}^2)",
         .printed = rat([](const Params& p) { return poly({1, -1}) / (poly({1, 1}) * pow(V(p[0] + 1), 2)); }),
         .corrected = rat([](const Params& p) { return pow(poly({1, -1}), 2) / pow(V(p[0] + 1), 2); }),
         .correction_note = "numerator (1-x)^2 over V_{k+1}^2",
         .reference = one_query(Family::G, P, [](const Params& p) { return sk(dec(p[0]), perm("12")); })});
    add({.id = "G+[k]-231", .family = Family::G, .variant = P, .params = {{"k", 1}},
         .statement = "(1-x)/((1+x) V_{k+1}^2), equal to G+[k]-12",
         .printed = rat([](const Params& p) { return poly({1, -1}) / (poly({1, 1}) * pow(V(p[0] + 1), 2)); }),
         .corrected = rat([](const Params& p) { return p[0] == 1 ? pow(poly({1, -1}), 2) / pow(V(2), 2) : C(0); }),
         .correction_note = "equal to G+[k]-12 only at k = 1; 0 for k >= 2",
         .reference = one_query(Family::G, P, [](const Params& p) { return sk(dec(p[0]), perm("231")); })});
    auto g_minus_k12 = [](long top) {
        return [top](const Params& p) {
            const int k = p[0];
            const LF a = poly({1, 0, 1});
            return Xp(2) * pow(a, static_cast<unsigned>(top)) /
                   pow(a * W(k) - IX() * poly({1, 1}) * W(k - 1), 2);
        };
    };
    add({.id = "G-[k]-12", .family = Family::G, .variant = M, .params = {{"k", 1}},
         .statement = "x^2(1+x^2)/((1+x^2)W_k - ix(1+x)W_{k-1})^2",
         .printed = rat(g_minus_k12(1)),
         .corrected = rat(g_minus_k12(2)),
         .correction_note = "numerator x^2(1+x^2)^2",
         .reference = one_query(Family::G, M, [](const Params& p) { return sk(dec(p[0]), perm("12")); })});
    add({.id = "G-[k]-231", .family = Family::G, .variant = M, .params = {{"k", 1}},
         .statement = "x^2(1+x^2)/((1+x^2)W_k - ix(1+x)W_{k-1})^2, equal to G-[k]-12",
         .printed = rat(g_minus_k12(1)),
         .corrected = rat([g_minus_k12](const Params& p) { return p[0] == 1 ? g_minus_k12(2)(p) : C(0); }),
         .correction_note = "equal to G-[k]-12 only at k = 1; 0 for k >= 2",
         .reference = one_query(Family::G, M, [](const Params& p) { return sk(dec(p[0]), perm("231")); })});
    add({.id = "G+213", .family = Family::G, .variant = P, .statement = "x^3/(1-x-x^2), also for 132",
         .printed = rat([](const Params&) { return Xp(3) / poly({1, -1, -1}); }),
         .reference = [](const Params&) {
             return engine_ref({query(Family::G, Variant::Plus, perm("213")), query(Family::G, Variant::Plus, perm("132"))});
         }});
    add({.id = "G-213", .family = Family::G, .variant = M, .statement = "-x^3/(1-x+x^2), also for 132",
         .printed = rat([](const Params&) { return -Xp(3) / poly({1, -1, 1}); }),
         .reference = [](const Params&) {
             return engine_ref({query(Family::G, Variant::Minus, perm("213")), query(Family::G, Variant::Minus, perm("132"))});
         }});
    auto g_k213_ref = [](Variant v) {
        return [v](const Params& p) {
            return engine_ref({query(Family::G, v, sk(dec(p[0]), perm("213"))),
                               query(Family::G, v, sk(dec(p[0]), perm("132")))});
        };
    };
    add({.id = "G+[k]-213", .family = Family::G, .variant = P, .params = {{"k", 0}},
         .statement = "(1-x-x^2)/(x(V_{k+2}+V_{k+1})^2), also for [k]-132",
         .printed = rat([](const Params& p) { return poly({1, -1, -1}) / (X() * pow(Y(p[0] + 2), 2)); }),
         .corrected = rat([](const Params& p) {
             if (p[0] == 0) return poly({1, -1, -1}) / (X() * pow(Y(2), 2));
             return pow(poly({1, -1, -1}), 2) / (X() * poly({1, -1}) * pow(Y(p[0] + 2), 2));
         }),
         .correction_note = "for k >= 1: numerator (1-x-x^2)^2, extra factor 1-x in the denominator",
         .reference = g_k213_ref(P)});
    add({.id = "G-[k]-213", .family = Family::G, .variant = M, .params = {{"k", 0}},
         .statement = "x(1-x+x^2)/(W_{k+1} - ix W_k)^2, also for [k]-132",
         .printed = rat([](const Params& p) {
             const int k = p[0];
             return X() * poly({1, -1, 1}) / pow(W(k + 1) - IX() * W(k), 2);
         }),
         .corrected = rat([](const Params& p) {
             const int k = p[0];
             if (k == 0) return X() * poly({1, -1, 1}) / pow(W(1) - IX() * W(0), 2);
             return X() * pow(poly({1, -1, 1}), 2) / (poly({1, -1}) * pow(W(k + 1) - IX() * W(k), 2));
         }),
         .correction_note = "for k >= 1: numerator x(1-x+x^2)^2, extra factor 1-x in the denominator",
         .reference = g_k213_ref(M)});
    add({.id = "G+123", .family = Family::G, .variant = P, .statement = "x^3(1+x^2)/(1-x^2)^2",
         .printed = rat([](const Params&) { return Xp(3) * poly({1, 0, 1}) / pow(poly({1, 0, -1}), 2); }),
         .reference = [](const Params&) { return engine_ref({query(Family::G, Variant::Plus, perm("123"))}); }});
    add({.id = "G-123", .family = Family::G, .variant = M, .statement = "x^3(1-x^2)/(1+x^2)^2",
         .printed = rat([](const Params&) { return Xp(3) * poly({1, 0, -1}) / pow(poly({1, 0, 1}), 2); }),
         .reference = [](const Params&) { return engine_ref({query(Family::G, Variant::Minus, perm("123"))}); }});
    auto g_plus_k123 = [](unsigned e) {
        return [e](const Params& p) {
            const int k = p[0];
            const LF d = poly({1, -1, 0, 1}) * V(k + 1) + X() * poly({-1, 1}) * V(k);
            return X() * poly({1, 0, 1}) * pow(poly({1, -2, 0, 2, -1}), 2) / (pow(poly({1, 0, -1}), e) * pow(d, 2));
        };
    };
    add({.id = "G+[k]-123", .family = Family::G, .variant = P, .params = {{"k", 1}},
         .statement = "x(1+x^2)(1-2x+2x^3-x^4)^2/((1-x^2)^2((1-x+x^3)V_{k+1} + x(x-1)V_k)^2)",
         .printed = rat(g_plus_k123(2)),
         .corrected = rat(g_plus_k123(1)),
         .correction_note = "(1-x^2) to the first power",
         .reference = one_query(Family::G, P, [](const Params& p) { return sk(dec(p[0]), perm("123")); })});
    auto g_minus_k123 = [](unsigned e, const LF& c) {
        return [e, c](const Params& p) {
            const int k = p[0];
            const LF a = poly({1, 0, 1});
            return Xp(3) * poly({1, 0, -1}) * pow(a, e) / pow(pow(a, 3) * W(k) - IX() * c * W(k - 1), 2);
        };
    };
    add({.id = "G-[k]-123", .family = Family::G, .variant = M, .params = {{"k", 1}},
         .statement = "x^3(1-x^2)(1+x^2)^4/((1+x^2)^3 W_k - ix(1+3x^2+2x^4+x^5)W_{k-1})^2",
         .printed = rat(g_minus_k123(4, poly({1, 0, 3, 0, 2, 1}))),
         .corrected = rat(g_minus_k123(5, poly({1, 1, 3, 0, 2, 1}))),
         .correction_note = "(1+x^2)^5 in the numerator and inner polynomial 1+x+3x^2+2x^4+x^5",
         .reference = one_query(Family::G, M, [](const Params& p) { return sk(dec(p[0]), perm("123")); })});
    for (Variant v : {P, M}) {
        const bool plus = v == P;
        add({.id = plus ? "G+1-pi-1" : "G-1-pi-1", .family = Family::G, .variant = v,
             .params = {{"base", 0, static_cast<int>(relation_bases().size()) - 1}, {"shape", 0, 2}},
             .statement = plus ? "x^2 G+_pi (F+_q)^2 for q = 1-pi-1, 1-pi, pi-1"
                               : "-x^2 G-_pi (F-_q)^2 for q = 1-pi-1, 1-pi, pi-1",
             .printed = g_relation(v),
             .reference = [v](const Params& p) { return relation_ref(Family::G, v, p); },
             .admissible = relation_ok});
    }

    // P family.
    add({.id = "P+(empty)", .family = Family::P, .variant = P,
         .statement = "(2x-1)/(2x^2(1-x)) + (1-2x-2x^2)/(2x^2 sqrt(1-2x-3x^2))",
         .printed = ser([](const Params&, int N) {
             return algebraic_p(Polynomial({-1, 2}), Polynomial({1, -2, -2}) * Polynomial({1, -1}), Polynomial({1, -1}),
                                Polynomial({1, -2, -3}), N);
         }),
         .reference = [](const Params&) { return engine_ref({query_none(Family::P, Variant::Plus)}); }});
    add({.id = "P-(empty)", .family = Family::P, .variant = M,
         .statement = "(x+1)(2x^2-2x+1)/(2x^2(1+x^2)) + (x^2-1)(4x^2-2x+1)/(2x^2(1+x^2) sqrt(5x^2-2x+1))",
         .printed = ser([](const Params&, int N) {
             return algebraic_p(Polynomial({1, 1}) * Polynomial({1, -2, 2}), Polynomial({-1, 0, 1}) * Polynomial({1, -2, 4}),
                                Polynomial({1, 0, 1}), Polynomial({1, -2, 5}), N);
         }),
         .reference = [](const Params&) { return engine_ref({query_none(Family::P, Variant::Minus)}); }});
    add({.id = "P+[2k]", .family = Family::P, .variant = P, .params = {{"k", 1}},
         .statement = "sum_{j=0}^{k-2} (1-x^{2j+2}) V_j^2 / ((1-x) V_k^2)",
         .printed = rat([](const Params& p) {
             const int k = p[0];
             return sum(0, k - 2, [](int j) { return (C(1) - Xp(2 * j + 2)) * pow(V(j), 2); }) /
                    (poly({1, -1}) * pow(V(k), 2));
         }),
         .reference = one_query(Family::P, P, [](const Params& p) { return dec(2 * p[0]); })});
    add({.id = "P+[2k+1]", .family = Family::P, .variant = P, .params = {{"k", 1}},
         .statement = "sum_{j=0}^{k-1} (1-x^{2j+1})(V_j+V_{j-1})^2 / ((1-x)(V_{k+1}+V_k)^2)",
         .printed = rat([](const Params& p) {
             const int k = p[0];
             return sum(0, k - 1, [](int j) { return (C(1) - Xp(2 * j + 1)) * pow(Y(j), 2); }) /
                    (poly({1, -1}) * pow(Y(k + 1), 2));
         }),
         .reference = one_query(Family::P, P, [](const Params& p) { return dec(2 * p[0] + 1); })});
    add({.id = "P-[2k]", .family = Family::P, .variant = M, .params = {{"k", 1}},
         .statement = "sum_{j=0}^{k-1} v_{2j} W_j^2 / W_k^2",
         .printed = rat([](const Params& p) {
             const int k = p[0];
             return sum(0, k - 1, [](int j) { return vp(2 * j) * pow(W(j), 2); }) / pow(W(k), 2);
         }),
         .corrected = rat([](const Params& p) {
             const int k = p[0];
             return sum(0, k - 2, [](int j) { return vp(2 * j + 1) * pow(W(j), 2); }) / pow(W(k), 2);
         }),
         .correction_note = "sum_{j=0}^{k-2} v_{2j+1} W_j^2 / W_k^2",
         .reference = one_query(Family::P, M, [](const Params& p) { return dec(2 * p[0]); })});
    add({.id = "P-[2k+1]", .family = Family::P, .variant = M, .params = {{"k", 1}},
         .statement = "sum_{j=0}^{k-1} v_{2j}(W_j - i W_{j-1})^2 / (W_{k+1} - i W_k)^2",
         .printed = rat([](const Params& p) {
             const int k = p[0];
             return sum(0, k - 1, [](int j) { return vp(2 * j) * pow(W(j) - IU() * W(j - 1), 2); }) /
                    pow(W(k + 1) - IU() * W(k), 2);
         }),
         .reference = one_query(Family::P, M, [](const Params& p) { return dec(2 * p[0] + 1); })});
    add({.id = "P+123", .family = Family::P, .variant = P, .statement = "x^4(1+x+x^2)/((1+x)(1-x)^3)",
         .printed = rat([](const Params&) {
             return Xp(4) * poly({1, 1, 1}) / (poly({1, 1}) * pow(poly({1, -1}), 3));
         }),
         .reference = [](const Params&) { return engine_ref({query(Family::P, Variant::Plus, perm("123"))}); }});
    add({.id = "P-123", .family = Family::P, .variant = M,
         .statement = "x^4(1+3x-3x^2+6x^3+3x^4+3x^5-x^6)/((1+x^2)(1+x)^3(1-x)^3)",
         .printed = rat([](const Params&) {
             return Xp(4) * poly({1, 3, -3, 6, 3, 3, -1}) /
                    (poly({1, 0, 1}) * pow(poly({1, 1}), 3) * pow(poly({1, -1}), 3));
         }),
         .corrected = rat([](const Params&) { return Xp(4) * poly({1, 3, 2, -3, 1}) / pow(poly({1, 0, 1}), 3); }),
         .correction_note = "x^4(1+3x+2x^2-3x^3+x^4)/(1+x^2)^3",
         .reference = [](const Params&) { return engine_ref({query(Family::P, Variant::Minus, perm("123"))}); }});
    add({.id = "P+132", .family = Family::P, .variant = P, .statement = "x^4/((1-x)(1-x-x^2)), also for 213",
         .printed = rat([](const Params&) { return Xp(4) / (poly({1, -1}) * poly({1, -1, -1})); }),
         .reference = [](const Params&) {
             return engine_ref({query(Family::P, Variant::Plus, perm("132")), query(Family::P, Variant::Plus, perm("213"))});
         }});
    add({.id = "P-132", .family = Family::P, .variant = M, .statement = "x^4(1+x)/((1-x+x^2)(1+x^2)), also for 213",
         .printed = rat([](const Params&) { return Xp(4) * poly({1, 1}) / (poly({1, -1, 1}) * poly({1, 0, 1})); }),
         .reference = [](const Params&) {
             return engine_ref({query(Family::P, Variant::Minus, perm("132")), query(Family::P, Variant::Minus, perm("213"))});
         }});
    for (Variant v : {P, M}) {
        add({.id = v == P ? "P+231" : "P-231", .family = Family::P, .variant = v, .statement = "0, also for 312",
             .printed = rat([](const Params&) { return C(0); }),
             .reference = [v](const Params&) {
                 return engine_ref({query(Family::P, v, perm("231")), query(Family::P, v, perm("312"))});
             }});
    }
    add({.id = "P+[k]-12", .family = Family::P, .variant = P, .params = {{"k", 1}},
         .statement = "sum_{j=1}^{k-1} (1-x^j) V_j^2 / ((1-x) V_{k+1}^2)",
         .printed = rat([](const Params& p) {
             const int k = p[0];
             return sum(1, k - 1, [](int j) { return (C(1) - Xp(j)) * pow(V(j), 2); }) /
                    (poly({1, -1}) * pow(V(k + 1), 2));
         }),
         .reference = one_query(Family::P, P, [](const Params& p) { return sk(dec(p[0]), perm("12")); })});
    add({.id = "P-[k]-12", .family = Family::P, .variant = M, .params = {{"k", 1}},
         .statement = "sum_{j=1}^{k-1} v_{j-1}(W_{j-2} - ix f0 W_{j-3})^2 / (W_{k-1} - ix f0 W_{k-2})^2, f0 = (1+x^2)/(1-x+2x^2)",
         .printed = rat([](const Params& p) {
             const int k = p[0];
             const LF f0 = poly({1, 0, 1}) / poly({1, -1, 2});
             return sum(1, k - 1, [&](int j) { return vp(j - 1) * pow(W(j - 2) - IX() * f0 * W(j - 3), 2); }) /
                    pow(W(k - 1) - IX() * f0 * W(k - 2), 2);
         }),
         .reference = one_query(Family::P, M, [](const Params& p) { return sk(dec(p[0]), perm("12")); })});
    add({.id = "P+[k]-132", .family = Family::P, .variant = P, .params = {{"k", 1}},
         .statement = "((1-x^3)(V_2+V_1) + sum_{j=2}^k (V_j+V_{j-1})^2)/((1-x)(V_{k+2}+V_{k+1})^2), also for [k]-213",
         .printed = rat([](const Params& p) {
             const int k = p[0];
             return (poly({1, 0, 0, -1}) * Y(2) + sum(2, k, [](int j) { return pow(Y(j), 2); })) /
                    (poly({1, -1}) * pow(Y(k + 2), 2));
         }),
         .reference = [](const Params& p) {
             return engine_ref({query(Family::P, Variant::Plus, sk(dec(p[0]), perm("132"))),
                                query(Family::P, Variant::Plus, sk(dec(p[0]), perm("213")))});
         }});
    add({.id = "P+[k]-231", .family = Family::P, .variant = P, .params = {{"k", 2}},
         .statement = "(V_{k-1}^2 + sum_{j=1}^{k-2} (1-x^j) V_j^2)/((1-x) V_{k+1}^2)",
         .printed = rat([](const Params& p) {
             const int k = p[0];
             return (pow(V(k - 1), 2) + sum(1, k - 2, [](int j) { return (C(1) - Xp(j)) * pow(V(j), 2); })) /
                    (poly({1, -1}) * pow(V(k + 1), 2));
         }),
         .reference = one_query(Family::P, P, [](const Params& p) { return sk(dec(p[0]), perm("231")); })});
    for (Variant v : {P, M}) {
        const bool plus = v == P;
        add({.id = plus ? "P+1-pi-1" : "P-1-pi-1", .family = Family::P, .variant = v,
             .params = {{"base", 0, static_cast<int>(relation_bases().size()) - 1}, {"shape", 0, 2}},
             .statement = plus ? "x^2 (F+_q)^2 (P+_pi + x^2/(1-x) (F+_pi)^2) for q = 1-pi-1, 1-pi, pi-1"
                               : "-x^2 (F-_q)^2 (P-_pi - x^2(1+x)/(1+x^2) (F-_pi)^2) for q = 1-pi-1, 1-pi, pi-1",
             .printed = p_relation(v),
             .reference = [v](const Params& p) { return relation_ref(Family::P, v, p); },
             .admissible = relation_ok});
    }

    // Q family.
    add({.id = "Q+[2k]", .family = Family::Q, .variant = P, .params = {{"k", 1}},
         .statement = "2x/((1-x)V_k^2) sum_{i=2}^k ((1-x^{2(i-1)})V_{i-2}V_i + sum_{j=0}^{i-2}(1-x^{2(j+1)})V_j^2)/(V_{i-1}V_i)",
         .printed = rat([](const Params& p) {
             const int k = p[0];
             LF s = sum(2, k, [](int i) {
                 LF inner = sum(0, i - 2, [](int j) { return (C(1) - Xp(2 * (j + 1))) * pow(V(j), 2); });
                 return ((C(1) - Xp(2 * (i - 1))) * V(i - 2) * V(i) + inner) / (V(i - 1) * V(i));
             });
             return C(2) * X() * s / (poly({1, -1}) * pow(V(k), 2));
         }),
         .reference = [](const Params& p) {
             GFQuery q;
             q.family = Family::Q;
             q.variant = Variant::Plus;
             q.patterns = {PatternArg(dec(2 * p[0]))};
             return engine_ref({q});
         }});
    add({.id = "Q+[2k+1]", .family = Family::Q, .variant = P, .params = {{"k", 1}},
         .statement = "2/((1-x)Y_{k+1}^2) sum_{i=2}^k ((1-x^{2i+1})Y_i Y_{i+2} + sum_{j=0}^i (1-x^{2j+1})Y_j^2)/(Y_{i+1}Y_{i+2})",
         .printed = rat([](const Params& p) {
             const int k = p[0];
             LF s = sum(2, k, [](int i) {
                 LF inner = sum(0, i, [](int j) { return (C(1) - Xp(2 * j + 1)) * pow(Y(j), 2); });
                 return ((C(1) - Xp(2 * i + 1)) * Y(i) * Y(i + 2) + inner) / (Y(i + 1) * Y(i + 2));
             });
             return C(2) * s / (poly({1, -1}) * pow(Y(k + 1), 2));
         }),
         .corrected = rat([](const Params& p) {
             const int k = p[0];
             LF s = sum(0, k - 1, [](int i) {
                 LF inner = sum(0, i, [](int j) { return (C(1) - Xp(2 * j + 1)) * pow(Y(j), 2); });
                 return ((C(1) - Xp(2 * i + 1)) * Y(i) * Y(i + 2) + inner) / (Y(i + 1) * Y(i + 2));
             });
             return C(2) * s / (poly({1, -1}) * pow(Y(k + 1), 2));
         }),
         .correction_note = "outer sum over i = 0..k-1",
         .reference = [](const Params& p) {
             GFQuery q;
             q.family = Family::Q;
             q.variant = Variant::Plus;
             q.patterns = {PatternArg(dec(2 * p[0] + 1))};
             return engine_ref({q});
         }});

    // Counting corollaries.
    add({.id = "count-321", .family = Family::P, .variant = P,
         .statement = "|I_n(321;3412)| = (n-3)F_{n-1}/5 + (n-1)F_{n-3}/5 for n >= 4",
         .printed = ser([](const Params&, int N) {
             return geometric_tail(N, 4, [](int n) -> mpz_class {
                 return divide_exact((n - 3) * fib(n - 1) + (n - 1) * fib(n - 3), 5, "count-321");
             });
         }),
         .from = 4,
         .reference = [](const Params&) { return engine_ref({query(Family::P, Variant::Plus, perm("321"))}); }});
    add({.id = "count-4321", .family = Family::P, .variant = P,
         .statement = "|I_n(4321;3412)| = 2^{n-5}(3n-10) for n >= 5",
         .printed = ser([](const Params&, int N) {
             return geometric_tail(N, 5, [](int n) -> mpz_class { return pow2(n - 5) * (3 * n - 10); });
         }),
         .from = 5,
         .reference = [](const Params&) { return engine_ref({query(Family::P, Variant::Plus, perm("4321"))}); }});
    add({.id = "count-Q4321", .family = Family::Q, .variant = P,
         .statement = "|I_n(;3412,4321)| = (3n^2-23n+38)2^{n-8} for n >= 6",
         .printed = ser([](const Params&, int N) {
             return geometric_tail(N, 6, [](int n) -> mpz_class {
                 const mpz_class a = 3 * n * n - 23 * n + 38;
                 return n >= 8 ? a * pow2(n - 8) : divide_exact(a, 1L << (8 - n), "count-Q4321");
             });
         }),
         .from = 6,
         .reference = [](const Params&) {
             GFQuery q;
             q.family = Family::Q;
             q.variant = Variant::Plus;
             q.patterns = {PatternArg(dec(4))};
             return engine_ref({q});
         }});

    // Exactly one copy of a decreasing pattern in I(3412), signed.
    add({.id = "r1-[2k]", .family = Family::F, .variant = M, .params = {{"k", 1}},
         .statement = "-1/W_k^2",
         .printed = rat([](const Params& p) { return C(-1) / pow(W(p[0]), 2); }),
         .corrected = rat([](const Params& p) { return C(1) / pow(W(p[0]), 2); }),
         .correction_note = "global sign: 1/W_k^2",
         .reference = [](const Params& p) { return occurrence_ref(dec(2 * p[0]), 1); }});
    add({.id = "r1-[2k+1]", .family = Family::F, .variant = M, .params = {{"k", 1}},
         .statement = "1/(ix(W_{k+1}+W_k)^2)",
         .printed = rat([](const Params& p) { return C(1) / (IX() * pow(W(p[0] + 1) + W(p[0]), 2)); }),
         .corrected = rat([](const Params& p) { return X() / pow(W(p[0]) - IX() * W(p[0] - 1), 2); }),
         .correction_note = "x/(W_k - ix W_{k-1})^2",
         .reference = [](const Params& p) { return occurrence_ref(dec(2 * p[0] + 1), 1); }});
    return c;
}

}  // namespace

std::string ClosedFormId::str() const {
    std::string s = id;
    if (!params.empty()) {
        s += '(';
        for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
        s += ')';
    }
    return s;
}

std::string Reference::describe() const {
    if (kind == Kind::Occurrence)
        return "signed I(3412) with exactly " + std::to_string(r) + " copies of " + pattern.str();
    std::string s;
    for (const auto& q : queries) {
        if (!s.empty()) s += " = ";
        s += std::string(family_name(q.family)) + (q.variant == Variant::Plus ? "+" : "-");
        for (const auto& p : q.patterns) s += "(" + pattern_arg_str(p) + ")";
    }
    return s;
}

PowerSeries Formula::expand(const Params& p, int N) const {
    if (rational) return rational(p).to_rational().expand(N);
    if (series) return series(p, N);
    throw std::logic_error("formula without a builder");
}

std::optional<RationalFunction> Formula::rational_form(const Params& p) const {
    if (!rational) return std::nullopt;
    return rational(p).to_rational();
}

bool CatalogEntry::accepts(const Params& p) const {
    if (p.size() != params.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < params[i].min) return false;
        if (params[i].max >= 0 && p[i] > params[i].max) return false;
    }
    return !admissible || admissible(p);
}

const Formula& CatalogEntry::formula(FormChoice c) const {
    if (c == FormChoice::Corrected && corrected) return *corrected;
    return printed;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

const CatalogEntry& catalog_entry(std::string_view id) {
    for (const auto& e : catalog())
        if (e.id == id) return e;
    throw std::invalid_argument("unknown closed form id: " + std::string(id));
}

namespace {

const CatalogEntry& checked(const ClosedFormId& id) {
    const auto& e = catalog_entry(id.id);
    if (!e.accepts(id.params)) throw std::invalid_argument("parameters out of range for " + id.str());
    return e;
}

}  // namespace

PowerSeries closed_form(const ClosedFormId& id, int N, FormChoice c) {
    return checked(id).formula(c).expand(id.params, N);
}

std::optional<RationalFunction> closed_form_rational(const ClosedFormId& id, FormChoice c) {
    return checked(id).formula(c).rational_form(id.params);
}

std::vector<Params> parameter_grid(const CatalogEntry& e, int bound, int max_weight) {
    std::vector<Params> out;
    Params cur(e.params.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == e.params.size()) {
            if (e.accepts(cur) && (!e.weight || e.weight(cur) <= max_weight)) out.push_back(cur);
            return;
        }
        const int hi = e.params[i].max >= 0 ? e.params[i].max : bound;
        for (int v = e.params[i].min; v <= hi; ++v) {
            cur[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

const std::vector<Permutation>& relation_bases() {
    static const std::vector<Permutation> b = {
        Permutation{1},       Permutation{1, 2},    Permutation{2, 1},       Permutation{1, 2, 3},
        Permutation{1, 3, 2}, Permutation{2, 1, 3}, Permutation{3, 2, 1},    Permutation{1, 2, 4, 3},
        Permutation{2, 1, 4, 3}};
    return b;
}

const std::vector<Permutation>& sandwich_bases() {
    static const std::vector<Permutation> b = {Permutation{1, 2}, Permutation{2, 1}, Permutation{1, 3, 2},
                                               Permutation{2, 1, 3}};
    return b;
}

}  // namespace invol
