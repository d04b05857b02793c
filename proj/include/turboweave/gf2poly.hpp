#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace turboweave {

// Polynomial over GF(2) in sparse form: the set of exponents with nonzero
// coefficient, kept sorted ascending.  The zero polynomial is the empty set.
// Sparse form is the right shape here: the polynomials of interest have
// weight <= 6 or so but degree up to the interleaver length (~10^4).
class Gf2Poly {
  public:
    Gf2Poly() = default;

    // XOR semantics: repeated exponents cancel in pairs.
    explicit Gf2Poly(std::vector<int> exponents) {
        std::sort(exponents.begin(), exponents.end());
        for (std::size_t i = 0; i < exponents.size();) {
            if (exponents[i] < 0) throw std::invalid_argument("negative exponent in Gf2Poly");
            if (i + 1 < exponents.size() && exponents[i] == exponents[i + 1]) {
                i += 2;
                continue;
            }
            exps_.push_back(exponents[i]);
            ++i;
        }
    }

    static Gf2Poly monomial(int e) { return Gf2Poly(std::vector<int>{e}); }

    static Gf2Poly from_bits(std::uint64_t bits) {
        std::vector<int> e;
        for (int k = 0; k < 64; ++k)
            if ((bits >> k) & 1u) e.push_back(k);
        return Gf2Poly(std::move(e));
    }

    // Octal tap notation, MSB-first: "15" -> binary 1101 -> taps
    // (g0,g1,g2,g3) = (1,1,0,1) -> 1 + X + X^3.
    static Gf2Poly from_octal(const std::string& digits) {
        if (digits.empty()) throw std::invalid_argument("empty octal string");
        std::uint64_t v = 0;
        for (char ch : digits) {
            if (ch < '0' || ch > '7') throw std::invalid_argument("bad octal digit");
            if (v > (~0ull >> 3)) throw std::invalid_argument("octal value too large");
            v = (v << 3) | std::uint64_t(ch - '0');
        }
        if (v == 0) return Gf2Poly();
        int len = 64 - countl_zero_u64(v);  // bit-length
        std::vector<int> e;
        for (int b = 0; b < len; ++b)
            if ((v >> b) & 1u) e.push_back(len - 1 - b);
        return Gf2Poly(std::move(e));
    }

    // Accepts either pure octal digits ("15") or an exponent list
    // ("x^32+x^16+x^8", "1+x^7", "0").
    static Gf2Poly parse(const std::string& text) {
        bool all_octal = !text.empty();
        for (char ch : text)
            if (ch < '0' || ch > '7') all_octal = false;
        if (all_octal) return from_octal(text);

        std::vector<int> e;
        std::string tok;
        auto flush = [&]() {
            if (tok.empty()) throw std::invalid_argument("empty term in polynomial");
            if (tok == "0") {
                // a literal zero term contributes nothing
            } else if (tok == "1") {
                e.push_back(0);
            } else if (tok == "x" || tok == "X") {
                e.push_back(1);
            } else if ((tok[0] == 'x' || tok[0] == 'X') && tok.size() > 2 && tok[1] == '^') {
                e.push_back(std::stoi(tok.substr(2)));
            } else {
                throw std::invalid_argument("cannot parse polynomial term '" + tok + "'");
            }
            tok.clear();
        };
        for (char ch : text) {
            if (ch == ' ' || ch == '\t') continue;
            if (ch == '+') {
                flush();
            } else {
                tok += ch;
            }
        }
        flush();
        return Gf2Poly(std::move(e));
    }

    bool is_zero() const { return exps_.empty(); }
    int weight() const { return int(exps_.size()); }
    int degree() const { return exps_.empty() ? -1 : exps_.back(); }
    const std::vector<int>& exponents() const { return exps_; }

    bool has_term(int e) const { return std::binary_search(exps_.begin(), exps_.end(), e); }

    // GF(2) addition (= subtraction): symmetric difference of exponent sets.
    Gf2Poly operator+(const Gf2Poly& o) const {
        std::vector<int> out;
        std::set_symmetric_difference(exps_.begin(), exps_.end(), o.exps_.begin(), o.exps_.end(),
                                      std::back_inserter(out));
        Gf2Poly r;
        r.exps_ = std::move(out);
        return r;
    }

    Gf2Poly shifted(int k) const {
        Gf2Poly r;
        r.exps_.reserve(exps_.size());
        for (int e : exps_) {
            if (e + k < 0) throw std::invalid_argument("shift would create negative exponent");
            r.exps_.push_back(e + k);
        }
        return r;
    }

    Gf2Poly times(const Gf2Poly& o) const {
        Gf2Poly acc;
        for (int e : o.exps_) acc = acc + shifted(e);
        return acc;
    }

    std::uint64_t to_bits() const {
        if (degree() > 63) throw std::invalid_argument("degree exceeds 63 in to_bits");
        std::uint64_t v = 0;
        for (int e : exps_) v |= 1ull << e;
        return v;
    }

    std::string str() const {
        if (exps_.empty()) return "0";
        std::string s;
        for (auto it = exps_.rbegin(); it != exps_.rend(); ++it) {
            if (!s.empty()) s += "+";
            if (*it == 0)
                s += "1";
            else if (*it == 1)
                s += "x";
            else
                s += "x^" + std::to_string(*it);
        }
        return s;
    }

    std::string octal() const {
        int d = degree();
        if (d < 0) return "0";
        if (d > 20) throw std::invalid_argument("degree too large for octal tap notation");
        std::uint64_t v = 0;
        for (int e : exps_) v |= 1ull << (d - e);
        std::string s;
        do {
            s.insert(s.begin(), char('0' + (v & 7u)));
            v >>= 3;
        } while (v);
        return s;
    }

    friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

    // ordering by (weight, exponent tuple); used for reproducible iteration
    friend bool weight_lex_less(const Gf2Poly& a, const Gf2Poly& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a.exps_ < b.exps_;
    }

    static int countl_zero_u64(std::uint64_t v) {
        int c = 0;
        for (int k = 63; k >= 0; --k) {
            if ((v >> k) & 1u) break;
            ++c;
        }
        return c;
    }

  private:
    std::vector<int> exps_;
};

namespace detail {

// ---- dense word-packed helpers for polynomials of degree <= 63 ----

inline int bit_length(std::uint64_t v) { return 64 - Gf2Poly::countl_zero_u64(v); }

inline unsigned __int128 clmul64(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 r = 0;
    while (a) {
        std::uint64_t low = a & (~a + 1);
        int k = bit_length(low) - 1;
        r ^= (unsigned __int128)b << k;
        a ^= low;
    }
    return r;
}

inline std::uint64_t reduce128(unsigned __int128 v, std::uint64_t p, int m) {
    auto top = [&](unsigned __int128 x) -> int {
        std::uint64_t hi = std::uint64_t(x >> 64);
        if (hi) return 64 + bit_length(hi) - 1;
        std::uint64_t lo = std::uint64_t(x);
        return lo ? bit_length(lo) - 1 : -1;
    };
    int h;
    while ((h = top(v)) >= m) v ^= (unsigned __int128)p << (h - m);
    return std::uint64_t(v);
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p, int m) {
    return reduce128(clmul64(a, b), p, m);
}

// X^e mod p by square-and-multiply.
inline std::uint64_t xpow_mod(long long e, std::uint64_t p, int m) {
    std::uint64_t result = reduce128(1, p, m);
    std::uint64_t base = reduce128(2, p, m);  // X mod p
    while (e > 0) {
        if (e & 1) result = mulmod(result, base, p, m);
        base = mulmod(base, base, p, m);
        e >>= 1;
    }
    return result;
}

// dense long division remainder for arbitrary degrees (fallback path)
inline std::vector<std::uint64_t> to_words(const Gf2Poly& f) {
    std::vector<std::uint64_t> w(std::size_t(f.degree() / 64 + 1), 0);
    for (int e : f.exponents()) w[std::size_t(e) / 64] |= 1ull << (e % 64);
    return w;
}

inline Gf2Poly dense_mod(const Gf2Poly& f, const Gf2Poly& p) {
    if (f.is_zero()) return Gf2Poly();
    int dp = p.degree();
    std::vector<std::uint64_t> fw = to_words(f);
    std::vector<std::uint64_t> pw = to_words(p);
    auto top_bit = [&](const std::vector<std::uint64_t>& w) -> int {
        for (int i = int(w.size()) - 1; i >= 0; --i)
            if (w[std::size_t(i)]) return i * 64 + bit_length(w[std::size_t(i)]) - 1;
        return -1;
    };
    int h;
    while ((h = top_bit(fw)) >= dp) {
        int sh = h - dp;
        int word = sh / 64, off = sh % 64;
        for (std::size_t k = 0; k < pw.size(); ++k) {
            fw[std::size_t(word) + k] ^= pw[k] << off;
            if (off && std::size_t(word) + k + 1 < fw.size()) fw[std::size_t(word) + k + 1] ^= pw[k] >> (64 - off);
        }
    }
    std::vector<int> exps;
    for (std::size_t i = 0; i < fw.size(); ++i)
        for (int b = 0; b < 64; ++b)
            if ((fw[i] >> b) & 1u) exps.push_back(int(i) * 64 + b);
    return Gf2Poly(std::move(exps));
}

}  // namespace detail

// Remainder of f modulo p over GF(2)[X].  deg r < deg p and f == q*p + r.
inline Gf2Poly poly_mod(const Gf2Poly& f, const Gf2Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("poly_mod: zero divisor");
    if (p.degree() == 0) return Gf2Poly();  // p = 1 divides everything
    if (p.degree() <= 63) {
        std::uint64_t pb = p.to_bits();
        int m = p.degree();
        std::uint64_t r = 0;
        for (int e : f.exponents()) r ^= detail::xpow_mod(e, pb, m);
        return Gf2Poly::from_bits(r);
    }
    return detail::dense_mod(f, p);
}

inline bool divides(const Gf2Poly& p, const Gf2Poly& f) { return poly_mod(f, p).is_zero(); }

// True iff p is irreducible and X generates the full multiplicative group of
// GF(2^m), i.e. the order of X mod p is 2^m - 1.
inline bool is_primitive(const Gf2Poly& p) {
    int m = p.degree();
    if (m < 1) throw std::invalid_argument("is_primitive: degree >= 1 required");
    if (m > 24) throw std::invalid_argument("is_primitive: degree too large");
    if (!p.has_term(0)) return false;  // divisible by X
    std::uint64_t pb = p.to_bits();
    // irreducibility by trial division
    for (int d = 1; 2 * d <= m; ++d) {
        for (std::uint64_t q = (1ull << d); q < (2ull << d); ++q) {
            if (detail::reduce128(pb, q, d) == 0) return false;
        }
    }
    // multiplicative order of X
    std::uint64_t n = (1ull << m) - 1;
    std::uint64_t t = detail::reduce128(2, pb, m);
    std::uint64_t order = 1;
    while (t != 1) {
        t = detail::reduce128((unsigned __int128)t << 1, pb, m);
        ++order;
        if (order > n) return false;  // not reachable for irreducible p
    }
    return order == n;
}

// The weight classes A_w of the Hamming code generated by a primitive p:
// all degree-<n multiples of p of weight exactly w, for n = 2^m - 1.
// Codewords are also kept as n-bit masks for O(1) membership tests.
struct HammingWeightClasses {
    Gf2Poly p;
    int m = 0;
    int n = 0;
    int w_max = 0;
    std::map<int, std::vector<Gf2Poly>> classes;
    std::map<int, std::unordered_set<std::uint64_t>> masks;
    std::vector<std::uint64_t> all_masks;  // every codeword of weight <= w_max, incl. 0

    int size(int w) const {
        auto it = classes.find(w);
        return it == classes.end() ? 0 : int(it->second.size());
    }

    bool is_codeword_mask(int w, std::uint64_t mask) const {
        if (w == 0) return mask == 0;
        auto it = masks.find(w);
        return it != masks.end() && it->second.count(mask) > 0;
    }
};

inline HammingWeightClasses hamming_weight_classes(const Gf2Poly& p, int w_max) {
    if (!is_primitive(p)) throw std::invalid_argument("hamming_weight_classes: p must be primitive");
    int m = p.degree();
    if (m > 6) throw std::invalid_argument("hamming_weight_classes: degree > 6 unsupported");
    HammingWeightClasses hc;
    hc.p = p;
    hc.m = m;
    hc.n = (1 << m) - 1;
    if (w_max > hc.n) throw std::invalid_argument("hamming_weight_classes: w_max exceeds code length");
    hc.w_max = w_max;
    hc.all_masks.push_back(0);

    // enumerate weight-w subsets of {0..n-1} and keep the multiples of p
    std::vector<int> idx;
    std::function<void(int, int)> rec = [&](int start, int left) {
        if (left == 0) {
            Gf2Poly cand(std::vector<int>(idx));
            if (poly_mod(cand, p).is_zero()) {
                int w = cand.weight();
                hc.classes[w].push_back(cand);
                hc.masks[w].insert(cand.to_bits());
                hc.all_masks.push_back(cand.to_bits());
            }
            return;
        }
        for (int e = start; e <= hc.n - left; ++e) {
            idx.push_back(e);
            rec(e + 1, left - 1);
            idx.pop_back();
        }
    };
    for (int w = 1; w <= w_max; ++w) rec(0, w);
    for (auto& [w, vec] : hc.classes)
        std::sort(vec.begin(), vec.end(), [](const Gf2Poly& a, const Gf2Poly& b) { return weight_lex_less(a, b); });
    return hc;
}

// Divisibility verdict via the pairing decomposition: split f = g + h with g a
// sum of exponent pairs congruent mod n (matched greedily from the highest
// exponent down) and h with pairwise-incongruent exponents; f is divisible by
// p iff the residue image of h is a codeword of the Hamming code.
inline bool divisible_by_primitive(const Gf2Poly& f, const HammingWeightClasses& hc) {
    const auto& exps = f.exponents();
    int w = int(exps.size());
    if (w == 0) return true;
    std::vector<char> used(std::size_t(w), 0);
    std::vector<int> h_residues;
    for (int i = w - 1; i >= 0; --i) {
        if (used[std::size_t(i)]) continue;
        int r = exps[std::size_t(i)] % hc.n;
        bool paired = false;
        for (int j = i - 1; j >= 0; --j) {
            if (!used[std::size_t(j)] && exps[std::size_t(j)] % hc.n == r) {
                used[std::size_t(i)] = used[std::size_t(j)] = 1;
                paired = true;
                break;
            }
        }
        if (!paired) {
            used[std::size_t(i)] = 1;
            h_residues.push_back(r);
        }
    }
    int j = int(h_residues.size());
    if (j == 0) return true;
    if (j > hc.w_max)
        throw std::invalid_argument("divisible_by_primitive: classes built with too small w_max");
    std::uint64_t mask = 0;
    for (int r : h_residues) mask |= 1ull << r;
    return hc.is_codeword_mask(j, mask);
}

// Streams exactly the polynomials of degree < N, weight <= w_max, divisible by
// p, in (weight, exponent tuple) lexicographic order, without scanning all
// 2^N sequences.  Candidates are grown exponent by exponent; a branch survives
// only if the set of odd-multiplicity residues can still be steered onto a
// codeword with the exponents that remain.
template <class Yield>
inline void enumerate_divisible(const HammingWeightClasses& hc, int N, int w_max, Yield&& yield) {
    if (w_max < 2) throw std::invalid_argument("enumerate_divisible: w_max >= 2 required");
    if (N <= hc.p.degree()) throw std::invalid_argument("enumerate_divisible: N must exceed deg p");
    if (w_max > hc.w_max)
        throw std::invalid_argument("enumerate_divisible: classes built with too small w_max");

    const int n = hc.n;
    // min_toggles[parity][R]: fewest exponent additions, of the given count
    // parity, that turn odd-residue set R into a codeword
    std::vector<std::vector<int>> min_toggles;
    const int table_bits = 1 << n;
    const int kInf = 1 << 29;
    min_toggles.assign(2, std::vector<int>(std::size_t(table_bits), kInf));
    for (int R = 0; R < table_bits; ++R) {
        for (std::uint64_t c : hc.all_masks) {
            int d = int(__builtin_popcountll(std::uint64_t(R) ^ c));
            int par = d & 1;
            if (d < min_toggles[std::size_t(par)][std::size_t(R)])
                min_toggles[std::size_t(par)][std::size_t(R)] = d;
        }
    }

    std::vector<int> cur;
    std::function<void(int, int, std::uint64_t)> rec = [&](int next_min, int left, std::uint64_t R) {
        if (left == 0) {
            if (R == 0 || hc.is_codeword_mask(int(__builtin_popcountll(R)), R))
                yield(Gf2Poly(std::vector<int>(cur)));
            return;
        }
        for (int e = next_min; e < N; ++e) {
            std::uint64_t R2 = R ^ (1ull << (e % n));
            int need = min_toggles[std::size_t((left - 1) & 1)][std::size_t(R2)];
            if (need > left - 1) continue;
            cur.push_back(e);
            rec(e + 1, left - 1, R2);
            cur.pop_back();
        }
    };
    for (int w = 2; w <= w_max; ++w) rec(0, w, 0);
}

inline std::vector<Gf2Poly> collect_divisible(const HammingWeightClasses& hc, int N, int w_max) {
    std::vector<Gf2Poly> out;
    enumerate_divisible(hc, N, w_max, [&](const Gf2Poly& f) { out.push_back(f); });
    return out;
}

}  // namespace turboweave
