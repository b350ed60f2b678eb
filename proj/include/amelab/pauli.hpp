#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amelab/linalg.hpp"

namespace ame {

/// n-qubit Pauli string in symplectic bit-mask form.
///
/// Qubit i (1-based) occupies bit (n - i) of both masks, i.e. qubit 1 is the
/// most significant of the low n bits, matching the basis-index convention
/// b = sum_k j_k 2^(n-k) used throughout. Per qubit, (x,z) = (1,0) is sigma_x,
/// (0,1) sigma_z, (1,1) sigma_y, (0,0) identity.
struct PauliString {
    int n = 0;
    uint32_t x_mask = 0;
    uint32_t z_mask = 0;

    bool is_identity() const { return x_mask == 0 && z_mask == 0; }

    bool operator==(const PauliString&) const = default;

    /// ASCII form over {I,X,Y,Z}, qubit 1 first, e.g. "IXYZ".
    std::string str() const;
    static PauliString from_str(const std::string& s);
};

/// A Pauli string together with a fourth root of unity, stored as the power
/// of i modulo 4 so group algebra stays exact.
struct PhasedPauli {
    PauliString pauli;
    int phase_exponent = 0;  // phase = i^phase_exponent, exponent in {0,1,2,3}

    cdouble phase() const;
};

/// Number of qubits the string acts on non-trivially.
int weight(const PauliString& p);

/// True iff the symplectic form popcount(p.x & q.z) + popcount(p.z & q.x)
/// is even; equivalent to commutation of the dense realizations.
bool commutes(const PauliString& p, const PauliString& q);

/// Product with exact phase: to_matrix(p) * to_matrix(q) == phase * to_matrix(result).
PhasedPauli multiply(const PauliString& p, const PauliString& q);

/// Dense 2^n x 2^n realization, qubit 1 as the leftmost tensor factor. n <= 8.
Matrix to_matrix(const PauliString& p);
Matrix to_matrix(const PhasedPauli& p);

/// All 4^n Pauli strings in a fixed, documented order: index alpha's base-4
/// digits (most significant digit = qubit 1) encode {0:I, 1:X, 2:Y, 3:Z}.
/// Index 0 is the identity. n <= 8.
std::vector<PauliString> enumerate_paulis(int n);

/// Enumeration index of a given string under the order above.
uint32_t pauli_index(const PauliString& p);

/// Exhaustive check of the even-odd weight lemma for single Pauli strings:
/// for every ordered pair of non-identity strings that commute (non-vanishing
/// anticommutator), parity(wt(PQ)) == parity(wt(P)) XOR parity(wt(Q)).
/// Returns the first violating pair if any. n <= 4.
struct EvenOddResult {
    bool holds = true;
    std::optional<std::pair<PauliString, PauliString>> counterexample;
};

EvenOddResult verify_even_odd(int n);

}  // namespace ame
