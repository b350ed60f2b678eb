#include "amelab/pauli.hpp"

#include <bit>

#include "amelab/errors.hpp"

namespace ame {

namespace {

constexpr int kMaxQubits = 8;

void check_capacity(int n) {
    if (n < 1 || n > kMaxQubits) throw CapacityError("qubit count must be in 1.." + std::to_string(kMaxQubits));
}

void check_same_n(const PauliString& p, const PauliString& q) {
    if (p.n != q.n) throw DimensionError("Pauli strings live on different qubit counts");
}

int popcount(uint32_t v) { return std::popcount(v); }

}  // namespace

std::string PauliString::str() const {
    std::string s(n, 'I');
    for (int i = 1; i <= n; ++i) {
        const int bit = n - i;
        const bool x = (x_mask >> bit) & 1;
        const bool z = (z_mask >> bit) & 1;
        s[i - 1] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return s;
}

PauliString PauliString::from_str(const std::string& s) {
    const int n = static_cast<int>(s.size());
    check_capacity(n);
    PauliString p{n, 0, 0};
    for (int i = 1; i <= n; ++i) {
        const uint32_t bit = 1u << (n - i);
        switch (s[i - 1]) {
            case 'I': break;
            case 'X': p.x_mask |= bit; break;
            case 'Y': p.x_mask |= bit; p.z_mask |= bit; break;
            case 'Z': p.z_mask |= bit; break;
            default: throw ParseError("Pauli string letters must be I, X, Y or Z");
        }
    }
    return p;
}

cdouble PhasedPauli::phase() const {
    static constexpr cdouble kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPowers[((phase_exponent % 4) + 4) % 4];
}

int weight(const PauliString& p) { return popcount(p.x_mask | p.z_mask); }

bool commutes(const PauliString& p, const PauliString& q) {
    check_same_n(p, q);
    return ((popcount(p.x_mask & q.z_mask) + popcount(p.z_mask & q.x_mask)) & 1) == 0;
}

PhasedPauli multiply(const PauliString& p, const PauliString& q) {
    check_same_n(p, q);
    PauliString r{p.n, p.x_mask ^ q.x_mask, p.z_mask ^ q.z_mask};
    // Writing each string as i^{#Y} X^x Z^z, the only non-commuting swap when
    // concatenating is Z^{p.z} past X^{q.x}.
    const int e = popcount(p.x_mask & p.z_mask) + popcount(q.x_mask & q.z_mask) -
                  popcount(r.x_mask & r.z_mask) + 2 * popcount(p.z_mask & q.x_mask);
    return PhasedPauli{r, ((e % 4) + 4) % 4};
}

Matrix to_matrix(const PauliString& p) {
    check_capacity(p.n);
    const int dim = 1 << p.n;
    Matrix m(dim, dim);
    const int ny = popcount(p.x_mask & p.z_mask);
    static constexpr cdouble kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const cdouble ipow = kPowers[ny % 4];
    for (int c = 0; c < dim; ++c) {
        const int r = c ^ static_cast<int>(p.x_mask);
        const double sign = (popcount(static_cast<uint32_t>(c) & p.z_mask) & 1) ? -1.0 : 1.0;
        m(r, c) = ipow * sign;
    }
    return m;
}

Matrix to_matrix(const PhasedPauli& p) {
    Matrix m = to_matrix(p.pauli);
    m *= p.phase();
    return m;
}

std::vector<PauliString> enumerate_paulis(int n) {
    check_capacity(n);
    const uint32_t count = 1u << (2 * n);
    std::vector<PauliString> out;
    out.reserve(count);
    for (uint32_t alpha = 0; alpha < count; ++alpha) {
        PauliString p{n, 0, 0};
        for (int i = 1; i <= n; ++i) {
            const uint32_t digit = (alpha >> (2 * (n - i))) & 3u;
            const uint32_t bit = 1u << (n - i);
            if (digit == 1 || digit == 2) p.x_mask |= bit;
            if (digit == 2 || digit == 3) p.z_mask |= bit;
        }
        out.push_back(p);
    }
    return out;
}

uint32_t pauli_index(const PauliString& p) {
    uint32_t alpha = 0;
    for (int i = 1; i <= p.n; ++i) {
        const uint32_t bit = 1u << (p.n - i);
        const bool x = p.x_mask & bit;
        const bool z = p.z_mask & bit;
        const uint32_t digit = x ? (z ? 2u : 1u) : (z ? 3u : 0u);
        alpha |= digit << (2 * (p.n - i));
    }
    return alpha;
}

EvenOddResult verify_even_odd(int n) {
    if (n < 1 || n > 4) throw CapacityError("verify_even_odd is exhaustive; n must be in 1..4");
    const auto paulis = enumerate_paulis(n);
    for (size_t a = 1; a < paulis.size(); ++a) {
        for (size_t b = 1; b < paulis.size(); ++b) {
            const auto& p = paulis[a];
            const auto& q = paulis[b];
            if (!commutes(p, q)) continue;  // anticommutator vanishes
            const int parity_product = weight(multiply(p, q).pauli) & 1;
            const int parity_expected = (weight(p) & 1) ^ (weight(q) & 1);
            if (parity_product != parity_expected) {
                return EvenOddResult{false, std::make_pair(p, q)};
            }
        }
    }
    return EvenOddResult{};
}

}  // namespace ame
