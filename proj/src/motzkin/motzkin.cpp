#include "invol/motzkin/motzkin.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "invol/chebyshev/chebyshev.hpp"
#include "invol/series/rational.hpp"

namespace invol {

MotzkinPath::MotzkinPath(std::vector<Step> steps) : steps_(std::move(steps)) {
    int h = 0;
    for (Step s : steps_) {
        h += s == Step::Up ? 1 : s == Step::Down ? -1 : 0;
        if (h < 0) throw std::invalid_argument("Motzkin path goes below height 0");
    }
    if (h != 0) throw std::invalid_argument("Motzkin path does not return to height 0");
}

MotzkinPath MotzkinPath::parse(std::string_view text) {
    std::vector<Step> s;
    for (char c : text) {
        switch (c) {
            case 'U': s.push_back(Step::Up); break;
            case 'D': s.push_back(Step::Down); break;
            case 'L': s.push_back(Step::Level); break;
            default: throw std::invalid_argument(std::string("bad path letter '") + c + "'");
        }
    }
    return MotzkinPath(std::move(s));
}

std::vector<int> MotzkinPath::heights() const {
    std::vector<int> h;
    h.reserve(steps_.size());
    int cur = 0;
    for (Step s : steps_) {
        h.push_back(cur);
        cur += s == Step::Up ? 1 : s == Step::Down ? -1 : 0;
    }
    return h;
}

int MotzkinPath::ups() const {
    int c = 0;
    for (Step s : steps_) c += s == Step::Up;
    return c;
}

int MotzkinPath::downs() const {
    int c = 0;
    for (Step s : steps_) c += s == Step::Down;
    return c;
}

std::string MotzkinPath::str() const {
    std::string out;
    for (Step s : steps_) out += s == Step::Up ? 'U' : s == Step::Down ? 'D' : 'L';
    return out;
}

std::vector<MotzkinPath> motzkin_paths(int n) {
    if (n < 0) throw std::invalid_argument("path length must be >= 0");
    std::vector<MotzkinPath> out;
    std::vector<Step> cur;
    auto rec = [&](auto&& self, int h) -> void {
        const int left = n - static_cast<int>(cur.size());
        if (left == 0) {
            if (h == 0) out.emplace_back(cur);
            return;
        }
        for (Step s : {Step::Up, Step::Down, Step::Level}) {
            const int nh = h + (s == Step::Up ? 1 : s == Step::Down ? -1 : 0);
            if (nh < 0 || nh > left - 1) continue;
            cur.push_back(s);
            self(self, nh);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

mpz_class motzkin_count(int n) { return static_cast<unsigned long>(motzkin_paths(n).size()); }

Permutation phi(const MotzkinPath& p) {
    const int n = p.size();
    const auto h = p.heights();
    std::vector<int> label(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) label[static_cast<std::size_t>(i)] = i + 1;
    for (int i = 0; i < n; ++i) {
        if (p.steps()[static_cast<std::size_t>(i)] != Step::Up) continue;
        for (int j = i + 1; j < n; ++j) {
            if (p.steps()[static_cast<std::size_t>(j)] == Step::Down && h[static_cast<std::size_t>(j)] == h[static_cast<std::size_t>(i)] + 1) {
                std::swap(label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(j)]);
                break;
            }
        }
    }
    return Permutation(std::move(label));
}

MotzkinPath phi_inverse(const Permutation& pi) {
    if (!is_involution(pi)) throw std::invalid_argument("phi_inverse: not an involution");
    if (contains(pi, Permutation{3, 4, 1, 2})) throw std::invalid_argument("phi_inverse: contains 3412");
    std::vector<Step> s;
    for (int i = 1; i <= pi.size(); ++i) s.push_back(pi(i) > i ? Step::Up : pi(i) < i ? Step::Down : Step::Level);
    MotzkinPath path(std::move(s));
    if (phi(path) != pi) throw std::logic_error("phi_inverse: arc structure does not round-trip");
    return path;
}

namespace {

mpz_class binom(int a, int b) {
    if (b < 0 || a < 0 || b > a) return b == 0 ? 1 : 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

// Contribution of one step at left height h to tau_k.
mpz_class step_weight(Step s, int h, int k) {
    return s == Step::Down ? binom(2 * h - 1, k - 1) : binom(2 * h, k - 1);
}

}  // namespace

mpz_class tau_path(const MotzkinPath& p, int k) {
    if (k < 1) throw std::invalid_argument("tau_k needs k >= 1");
    const auto h = p.heights();
    mpz_class t = 0;
    for (std::size_t i = 0; i < h.size(); ++i) t += step_weight(p.steps()[i], h[i], k);
    return t;
}

int path_sign(const MotzkinPath& p) {
    const GaussianInt w = i_pow(p.ups() + p.downs());
    return w.re == 1 ? 1 : -1;
}

BoundedVariant parse_bounded_variant(std::string_view s) {
    if (s == "M") return BoundedVariant::M;
    if (s == "N") return BoundedVariant::N;
    if (s == "O") return BoundedVariant::O;
    throw std::invalid_argument("bounded path variant must be M, N or O");
}

const char* bounded_variant_name(BoundedVariant v) {
    return v == BoundedVariant::M ? "M" : v == BoundedVariant::N ? "N" : "O";
}

void BoundedPathQuery::validate() const {
    if (k < 0 || r < 0 || s < 0 || r > k || s > k) throw std::invalid_argument("bounded path query needs 0 <= r, s <= k");
}

PowerSeries bounded_paths(const BoundedPathQuery& q, int N, bool is_signed) {
    q.validate();
    PowerSeries out(N);
    const GaussianInt ix(0L, 1L);
    auto rec = [&](auto&& self, int len, int h, const GaussianInt& w) -> void {
        if (h == q.s) out[len] += w;
        if (len == N) return;
        if (h < q.k) self(self, len + 1, h + 1, is_signed ? w * ix : w);
        if (h > 0) self(self, len + 1, h - 1, is_signed ? w * ix : w);
        const bool level_ok = !(q.variant == BoundedVariant::N && h == q.k) && !(q.variant == BoundedVariant::O && h == 0);
        if (level_ok) self(self, len + 1, h, w);
    };
    rec(rec, 0, q.r, GaussianInt(1L));
    return out;
}

PolyMatrix transfer_matrix(MatrixKind kind, int k) {
    if (k < 0) throw std::invalid_argument("transfer matrix needs k >= 0");
    const int n = k + 1;
    PolyMatrix m(static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n)));
    const Polynomial x = Polynomial::x();
    const Polynomial ix = Polynomial::monomial(GaussianInt::I(), 1);
    for (int i = 0; i < n; ++i) {
        m[i][i] = x;
        if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = ix;
    }
    if (kind == MatrixKind::B) m[k][k] = Polynomial();
    if (kind == MatrixKind::C) m[0][0] = Polynomial();
    return m;
}

MatrixKind matrix_for(BoundedVariant v) {
    return v == BoundedVariant::M ? MatrixKind::A : v == BoundedVariant::N ? MatrixKind::B : MatrixKind::C;
}

PolyMatrix identity_minus(const PolyMatrix& m) {
    PolyMatrix r = m;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) r[i][j] = (i == j ? Polynomial(1L) : Polynomial()) - m[i][j];
    return r;
}

Polynomial determinant(const PolyMatrix& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Polynomial(1L);
    if (n > 20) throw std::invalid_argument("determinant: matrix too large");
    // dp over the set of used columns; row = popcount(mask).
    std::unordered_map<unsigned, Polynomial> dp{{0u, Polynomial(1L)}};
    for (int row = 0; row < n; ++row) {
        std::unordered_map<unsigned, Polynomial> next;
        for (const auto& [mask, val] : dp) {
            for (int c = 0; c < n; ++c) {
                if (mask & (1u << c)) continue;
                const Polynomial& e = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
                if (e.is_zero()) continue;
                const int higher = std::popcount(mask >> (c + 1));
                Polynomial term = val * e;
                if (higher % 2) term = -term;
                next[mask | (1u << c)] += term;
            }
        }
        dp = std::move(next);
    }
    auto it = dp.find((1u << n) - 1);
    return it == dp.end() ? Polynomial() : it->second;
}

Polynomial minor(const PolyMatrix& m, int row, int col) {
    const int n = static_cast<int>(m.size());
    if (row < 0 || row >= n || col < 0 || col >= n) throw std::invalid_argument("minor index out of range");
    PolyMatrix sub;
    for (int i = 0; i < n; ++i) {
        if (i == row) continue;
        std::vector<Polynomial> r;
        for (int j = 0; j < n; ++j)
            if (j != col) r.push_back(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        sub.push_back(std::move(r));
    }
    return determinant(sub);
}

PowerSeries transfer_gf(const BoundedPathQuery& q, int N) {
    q.validate();
    const PolyMatrix t = identity_minus(transfer_matrix(matrix_for(q.variant), q.k));
    Polynomial num = minor(t, q.s, q.r);
    if ((q.r + q.s) % 2) num = -num;
    RationalFunction f(num, determinant(t));
    if (!f.expandable()) throw std::logic_error("transfer_gf: denominator constant term is not a unit");
    return f.expand(N);
}

IntSeries path_occurrence_series(int m, int r, int N, bool is_signed) {
    if (m < 1 || r < 0 || N < 0) throw std::invalid_argument("path_occurrence_series needs m >= 1, r >= 0, N >= 0");
    const int H = N / 2 + 1;
    const int T = r + 1;  // saturating bucket for "more than r"
    // state[h][t] = signed count of prefixes at height h with tau_m = t (capped).
    std::vector<std::vector<mpz_class>> cur(static_cast<std::size_t>(H + 1), std::vector<mpz_class>(static_cast<std::size_t>(T + 1)));
    cur[0][0] = 1;
    IntSeries out(N);
    out[0] = r == 0 ? 1 : 0;
    auto capped = [T](const mpz_class& t, const mpz_class& add) {
        mpz_class s = t + add;
        return s > T ? T : static_cast<int>(s.get_si());
    };
    for (int len = 1; len <= N; ++len) {
        std::vector<std::vector<mpz_class>> nxt(cur.size(), std::vector<mpz_class>(static_cast<std::size_t>(T + 1)));
        for (int h = 0; h <= H; ++h) {
            for (int t = 0; t <= T; ++t) {
                const mpz_class& v = cur[static_cast<std::size_t>(h)][static_cast<std::size_t>(t)];
                if (v == 0) continue;
                if (h + 1 <= H) nxt[h + 1][capped(t, step_weight(Step::Up, h, m))] += v;
                nxt[h][capped(t, step_weight(Step::Level, h, m))] += v;
                if (h > 0) {
                    mpz_class w = is_signed ? mpz_class(-v) : v;
                    nxt[h - 1][capped(t, step_weight(Step::Down, h, m))] += w;
                }
            }
        }
        cur = std::move(nxt);
        out[len] = cur[0][static_cast<std::size_t>(r)];
    }
    return out;
}

std::vector<DetIdentityCheck> det_identity_audit(int k) {
    if (k < 0) throw std::invalid_argument("det_identity_audit needs k >= 0");
    const Polynomial ix = Polynomial::monomial(GaussianInt::I(), 1);
    const Polynomial dA = determinant(identity_minus(transfer_matrix(MatrixKind::A, k)));
    const Polynomial dB = determinant(identity_minus(transfer_matrix(MatrixKind::B, k)));
    const Polynomial dC = determinant(identity_minus(transfer_matrix(MatrixKind::C, k)));
    std::vector<DetIdentityCheck> out;
    // (ix)^{k+1} W_{k+1} = W~_{k+1}.
    out.push_back({"Auk", k, wtilde(k + 1), dA, dA, wtilde(k + 1) == dA});
    // (ix)^{k+1}(W_{k+1} + W_k) = W~_{k+1} + ix W~_k.
    const Polynomial printed = wtilde(k + 1) + ix * wtilde(k);
    out.push_back({"Buk-printed", k, printed, dB, dC, printed == dB && printed == dC});
    // (ix)^k (W_k - ix W_{k-1}) = W~_k + x^2 W~_{k-1}.
    const Polynomial corrected = wtilde(k) + wtilde(k - 1).shifted(2);
    out.push_back({"Buk-corrected", k, corrected, dB, dC, corrected == dB && corrected == dC});
    return out;
}

}  // namespace invol
