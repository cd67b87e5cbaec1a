#include "rectcount/identities.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace rectcount {

namespace {

using Params = std::span<const long long>;

constexpr std::string_view k_only[] = {"k"};
constexpr std::string_view nklm12[] = {"n", "k", "l", "m1", "m2"};
constexpr std::string_view nkm[] = {"n", "k", "m"};
constexpr std::string_view nklm[] = {"n", "k", "l", "m"};
constexpr std::string_view km[] = {"k", "m"};

bool nonneg(Params p) {
    for (long long v : p)
        if (v < 0) return false;
    return true;
}

bool adm_prop2_1(Params p) { return nonneg(p); }
bool adm_eq7(Params p) {
    return nonneg(p) && p[2] <= p[1] && p[1] <= p[0] && p[3] <= p[4] && p[4] <= p[0];
}
bool adm_k_le_n(Params p) { return nonneg(p) && p[1] <= p[0]; }
bool adm_eq9(Params p) { return nonneg(p) && p[2] <= p[1] && p[1] <= p[0]; }
bool adm_klee(Params p) { return nonneg(p); }
bool adm_m_le_n(Params p) { return nonneg(p) && p[2] <= p[0]; }

constexpr std::array<IdentitySignature, identity_count> signatures_ = {{
    {IdentityId::prop2_1, "prop2_1", k_only, adm_prop2_1, "k >= 0"},
    {IdentityId::eq7, "eq7", nklm12, adm_eq7, "0 <= l <= k <= n, 0 <= m1 <= m2 <= n"},
    {IdentityId::eq8, "eq8", nkm, adm_k_le_n, "0 <= k <= n, m >= 0"},
    {IdentityId::eq9, "eq9", nklm, adm_eq9, "0 <= l <= k <= n, m >= 0"},
    {IdentityId::eq10, "eq10", nkm, adm_k_le_n, "0 <= k <= n, m >= 0"},
    {IdentityId::klee, "klee", km, adm_klee, "k >= 0, m >= 0"},
    {IdentityId::eq11, "eq11", nkm, adm_m_le_n, "0 <= m <= n, k >= 0"},
    {IdentityId::eq12, "eq12", nkm, adm_m_le_n, "0 <= m <= n, k >= 0"},
}};

// Accumulates rhs terms in evaluation order and applies the optional fault to
// the single term whose flat index matches.
struct RhsAccum {
    ExactInt value = 0;
    long long index = 0;
    const TermFault* fault = nullptr;

    void add(ExactInt term) {
        if (fault != nullptr && index == fault->term_index) term += fault->delta;
        value += term;
        ++index;
    }
};

EvalResult eval_impl(IdentityId id, Params p, BinomCache& B, const TermFault* fault,
                     long long* term_count) {
    const IdentitySignature& sig = signature(id);
    if (p.size() != sig.params.size())
        throw std::invalid_argument(std::string(sig.name) + ": expected " +
                                    std::to_string(sig.params.size()) + " parameters");
    if (!sig.admissible(p))
        throw std::invalid_argument(std::string(sig.name) + ": parameters must satisfy " +
                                    std::string(sig.constraint));

    ExactInt lhs;
    RhsAccum rhs{.value = 0, .index = 0, .fault = fault};

    switch (id) {
        case IdentityId::prop2_1: {
            const long long k = p[0];
            lhs = 1;
            for (long long i = 0; i <= k; ++i) {
                ExactInt term = B(k, i) * pow2(k - i);
                if (i & 1) term = -term;
                rhs.add(std::move(term));
            }
            break;
        }
        case IdentityId::eq7: {
            const long long n = p[0], k = p[1], l = p[2], m1 = p[3], m2 = p[4];
            lhs = 0;
            for (long long i = m1 - l; i <= m2 - l; ++i) lhs += B(n - k, i);
            for (long long i1 = 0; i1 <= l; ++i1) {
                const ExactInt outer = B(l, i1);
                for (long long i2 = 0; i2 <= k - l; ++i2) {
                    const ExactInt mid = outer * B(k - l, i2);
                    for (long long i3 = m1 - i2; i3 <= m2 - i2; ++i3) {
                        ExactInt term = mid * B(n - i1 - i2, i3);
                        if ((i1 + i2) & 1) term = -term;
                        rhs.add(std::move(term));
                    }
                }
            }
            break;
        }
        case IdentityId::eq8: {
            const long long n = p[0], k = p[1], m = p[2];
            lhs = B(n - k, m - k);
            for (long long i = 0; i <= k; ++i) {
                ExactInt term = B(k, i) * B(n - i, m);
                if (i & 1) term = -term;
                rhs.add(std::move(term));
            }
            break;
        }
        case IdentityId::eq9: {
            const long long n = p[0], k = p[1], l = p[2], m = p[3];
            lhs = B(n - k, m - l);
            for (long long i1 = 0; i1 <= l; ++i1) {
                const ExactInt outer = B(l, i1);
                for (long long i2 = 0; i2 <= k - l; ++i2) {
                    ExactInt term = outer * B(k - l, i2) * B(n - i1 - i2, m - i2);
                    if ((i1 + i2) & 1) term = -term;
                    rhs.add(std::move(term));
                }
            }
            break;
        }
        case IdentityId::eq10: {
            const long long n = p[0], k = p[1], m = p[2];
            lhs = B(n - k, m);
            for (long long i = 0; i <= k; ++i) {
                ExactInt term = B(k, i) * B(n - i, m - i);
                if (i & 1) term = -term;
                rhs.add(std::move(term));
            }
            break;
        }
        case IdentityId::klee: {
            const long long k = p[0], m = p[1];
            lhs = B(k, m - k);
            if (k & 1) lhs = -lhs;
            for (long long i = 0; i <= k; ++i) {
                ExactInt term = B(k, i) * B(k + i, m);
                if (i & 1) term = -term;
                rhs.add(std::move(term));
            }
            break;
        }
        case IdentityId::eq11: {
            const long long n = p[0], k = p[1], m = p[2];
            lhs = 0;
            for (long long i = 0; i <= m; ++i) lhs += B(n, i);
            for (long long i1 = 0; i1 <= k; ++i1) {
                const ExactInt outer = B(k, i1);
                for (long long i2 = 0; i2 <= m - i1; ++i2) {
                    ExactInt term = outer * B(n + k - i1, i2);
                    if (i1 & 1) term = -term;
                    rhs.add(std::move(term));
                }
            }
            break;
        }
        case IdentityId::eq12: {
            const long long n = p[0], k = p[1], m = p[2];
            lhs = 0;
            for (long long i = 0; i <= m; ++i) lhs += B(n, i);
            for (long long i1 = 0; i1 <= k; ++i1) {
                const ExactInt outer = B(k, i1);
                for (long long i2 = k; i2 <= m + k; ++i2) {
                    ExactInt term = outer * B(n + k - i1, i2);
                    if (i1 & 1) term = -term;
                    rhs.add(std::move(term));
                }
            }
            break;
        }
    }
    if (term_count != nullptr) *term_count = rhs.index;
    return {std::move(lhs), std::move(rhs.value)};
}

}  // namespace

std::span<const IdentitySignature> identity_signatures() { return signatures_; }

const IdentitySignature& signature(IdentityId id) {
    return signatures_[static_cast<std::size_t>(id)];
}

std::optional<IdentityId> identity_by_name(std::string_view name) {
    for (const auto& sig : signatures_)
        if (sig.name == name) return sig.id;
    return std::nullopt;
}

EvalResult eval_identity(IdentityId id, std::span<const long long> params, BinomCache& cache,
                         const TermFault* fault) {
    return eval_impl(id, params, cache, fault, nullptr);
}

EvalResult eval_identity(IdentityId id, std::span<const long long> params) {
    BinomCache cache;
    return eval_impl(id, params, cache, nullptr, nullptr);
}

long long rhs_term_count(IdentityId id, std::span<const long long> params, BinomCache& cache) {
    long long count = 0;
    eval_impl(id, params, cache, nullptr, &count);
    return count;
}

}  // namespace rectcount
