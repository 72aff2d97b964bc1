"""Diagonal cost Hamiltonians as weighted Pauli-Z subset terms.

A diagonal Hamiltonian on n qubits is a map from vertex subsets S to real
weights W_S, representing H = sum_S W_S Z_S.  Subsets are bitmasks: bit v
corresponds to vertex/qubit v, so n is capped at 64.  On a basis state x
(also a bitmask, bit v = assignment of vertex v, with bit 1 standing for
the +1 side of a cut) the term Z_S evaluates to the parity character
chi_S(x) = (-1)^{|S & x|}.

Boolean clauses enter through their Walsh-Hadamard expansion
C(x) = sum_S C_hat(S) chi_S(x), and clause weights accumulate per subset
when clauses overlap.  Terms whose accumulated weight is exactly zero are
dropped, so the stored term list realizes the nonzero support M directly.
The empty-set term (identity coefficient) is kept separately from M.

Clause truth tables are indexed little-endian: entry t is the clause value
on the assignment where support[j] takes bit j of t.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_CLAUSE_VARS = 16


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


@dataclass(frozen=True)
class DiagonalHamiltonian:
    """Immutable term map; `terms` is sorted (mask, weight) pairs, weights != 0."""
    n: int
    terms: tuple[tuple[int, float], ...]

    @property
    def constant(self) -> float:
        """Weight of the empty subset (the identity coefficient)."""
        return self.terms[0][1] if self.terms and self.terms[0][0] == 0 else 0.0

    def nonconstant_terms(self) -> tuple[tuple[int, float], ...]:
        """The collection M of nonempty, nonzero-weight terms."""
        return tuple((m, w) for m, w in self.terms if m != 0)


@dataclass(frozen=True)
class Clause:
    support: tuple[int, ...]
    truth_table: tuple[float, ...]

    def __post_init__(self):
        k = len(self.support)
        if k > MAX_CLAUSE_VARS:
            raise ValueError(f"clause on {k} variables exceeds cap {MAX_CLAUSE_VARS}")
        if len(set(self.support)) != k:
            raise ValueError("clause support has repeated vertices")
        if len(self.truth_table) != 2 ** k:
            raise ValueError(
                f"truth table has {len(self.truth_table)} entries, expected {2 ** k}")


def make_hamiltonian(n: int, weights: dict) -> DiagonalHamiltonian:
    """Assemble a DiagonalHamiltonian from a mask -> weight map, dropping zeros."""
    if n > 64:
        raise ValueError(f"bitmask subsets cap n at 64, got {n}")
    for m in weights:
        if m >> n:
            raise ValueError(f"subset {m:#x} not within 0..{n - 1}")
    terms = tuple(sorted((m, float(w)) for m, w in weights.items() if w != 0.0))
    return DiagonalHamiltonian(n=n, terms=terms)


def _walsh_coefficients(truth_table) -> np.ndarray:
    """Normalized Walsh-Hadamard transform: out[s] = 2^-k sum_t f[t] (-1)^{|s&t|}."""
    a = np.asarray(truth_table, dtype=float).copy()
    size = len(a)
    h = 1
    while h < size:
        a = a.reshape(-1, 2 * h)
        left = a[:, :h].copy()
        a[:, :h] += a[:, h:]
        a[:, h:] = left - a[:, h:]
        a = a.reshape(size)
        h *= 2
    return a / size


def fourier_encode_clause(c: Clause) -> DiagonalHamiltonian:
    """Encode one clause as a diagonal Hamiltonian on its support vertices."""
    coeffs = _walsh_coefficients(c.truth_table)
    weights = {}
    for s, w in enumerate(coeffs):
        if w != 0.0:
            weights[mask_of(c.support[j] for j in vertices_of(s))] = w
    return make_hamiltonian(1 + max(c.support), weights)


def local_satisfaction_clause(d: int, support=None) -> Clause:
    """Indicator that a degree-d vertex is locally satisfied.

    Variables are (x_v, x_1, ..., x_d); the clause is 1 exactly when at
    least ceil(d/2) neighbors disagree with x_v, i.e. at most floor(d/2)
    agree.
    """
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    if support is None:
        support = tuple(range(d + 1))
    table = []
    for t in range(2 ** (d + 1)):
        center = t & 1
        agreeing = sum(1 for j in range(1, d + 1) if t >> j & 1 == center)
        table.append(1.0 if agreeing <= d // 2 else 0.0)
    return Clause(support=tuple(support), truth_table=tuple(table))


def build_localmaxcut_hamiltonian(g) -> DiagonalHamiltonian:
    """Sum of per-vertex satisfaction clauses over a d-regular graph.

    Weights accumulate per subset, so coinciding terms (short cycles) merge
    and exact cancellations drop out of the term map.
    """
    from .graph import neighborhood

    d = g.degree
    if d is None:
        raise ValueError("graph is not regular")
    base = fourier_encode_clause(local_satisfaction_clause(d))
    weights = {}
    for v in range(g.n):
        ball = neighborhood(g, v)
        for pmask, w in base.terms:
            m = mask_of(ball[j] for j in vertices_of(pmask))
            weights[m] = weights.get(m, 0.0) + w
    return make_hamiltonian(g.n, weights)


def evaluate_classical(h: DiagonalHamiltonian, x) -> float:
    """Diagonal value sum_S W_S chi_S(x); x is a bitmask or 0/1 sequence.

    On a LocalMaxCut Hamiltonian this equals the number of locally
    satisfied vertices under the cut x.
    """
    if not isinstance(x, int):
        bits = list(x)
        if len(bits) != h.n:
            raise ValueError(f"assignment length {len(bits)} != n={h.n}")
        x = mask_of(v for v, b in enumerate(bits) if b)
    if x >> h.n:
        raise ValueError(f"assignment {x:#x} not within 0..{h.n - 1}")
    total = 0.0
    for m, w in h.terms:
        total += w if (m & x).bit_count() % 2 == 0 else -w
    return total


def evaluate_all(h: DiagonalHamiltonian) -> np.ndarray:
    """Vector of evaluate_classical over all 2^n basis states, basis order."""
    x = np.arange(2 ** h.n, dtype=np.uint64)
    values = np.zeros(2 ** h.n)
    for m, w in h.terms:
        parity = np.bitwise_count(x & np.uint64(m)) & np.uint64(1)
        values += w * (1.0 - 2.0 * parity)
    return values


def hamiltonian_to_json(h: DiagonalHamiltonian) -> dict:
    """JSON-friendly dump: subsets as sorted vertex arrays with weights."""
    items = [{"subset": vertices_of(m), "weight": w} for m, w in h.terms]
    items.sort(key=lambda it: (len(it["subset"]), it["subset"]))
    return {"n": h.n, "terms": items}
