"""CNF formulas, assignments, DIMACS parsing, and basic formula surgery.

Assignments live on the Boolean hypercube {0,1}^n.  Variable 1 is the
leftmost bit of the string form and the most significant bit of the
integer key, so numeric order on keys equals lexicographic order on
strings.
"""

from __future__ import annotations

import numpy as np


class ParseError(ValueError):
    """Malformed DIMACS input; carries the 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapabilityError(RuntimeError):
    """Instance exceeds a configured size limit (not a correctness error)."""


class UnsatError(RuntimeError):
    """The formula has no satisfying assignment (or none was found where
    an exhaustive method was used)."""


class InfeasibleError(RuntimeError):
    """The request cannot be met, e.g. fewer distinct solutions than asked."""


class PartialSetError(RuntimeError):
    """A dispersion driver ran out of oracle retries; carries what was built."""

    def __init__(self, message, partial):
        super().__init__(message)
        self.partial = partial


class Literal:
    """A possibly negated variable.  `variable` is 1-based."""

    __slots__ = ("variable", "negated")

    def __init__(self, variable, negated=False):
        if variable < 1:
            raise ValueError("variable index must be >= 1")
        self.variable = int(variable)
        self.negated = bool(negated)

    @classmethod
    def from_int(cls, lit):
        if lit == 0:
            raise ValueError("0 is not a literal")
        return cls(abs(lit), lit < 0)

    def to_int(self):
        return -self.variable if self.negated else self.variable

    def __neg__(self):
        return Literal(self.variable, not self.negated)

    def __eq__(self, other):
        return (
            isinstance(other, Literal)
            and self.variable == other.variable
            and self.negated == other.negated
        )

    def __hash__(self):
        return hash((self.variable, self.negated))

    def __repr__(self):
        return f"Literal({self.to_int()})"


class Assignment:
    """An immutable point of {0,1}^n.

    Stored as (n, key) with variable 1 as the most significant bit of
    `key`; supports XOR, Hamming weight and Hamming distance.
    """

    __slots__ = ("n", "key")

    def __init__(self, n, key):
        if not 0 <= key < (1 << n):
            raise ValueError("key out of range for n")
        self.n = int(n)
        self.key = int(key)

    @classmethod
    def from_bits(cls, bits):
        bits = list(bits)
        key = 0
        for b in bits:
            key = (key << 1) | (1 if b else 0)
        return cls(len(bits), key)

    @classmethod
    def from_string(cls, s):
        if not all(c in "01" for c in s):
            raise ValueError("assignment strings are over {0,1}")
        return cls(len(s), int(s, 2) if s else 0)

    @classmethod
    def zeros(cls, n):
        return cls(n, 0)

    @classmethod
    def ones(cls, n):
        return cls(n, (1 << n) - 1)

    @classmethod
    def from_array(cls, arr):
        return cls.from_bits(bool(b) for b in arr)

    def bit(self, variable):
        """Value of 1-based `variable`."""
        return (self.key >> (self.n - variable)) & 1

    @property
    def bits(self):
        return tuple((self.key >> (self.n - 1 - i)) & 1 for i in range(self.n))

    def to_string(self):
        return format(self.key, f"0{self.n}b") if self.n else ""

    def to_array(self):
        return np.array(self.bits, dtype=bool)

    def weight(self):
        return self.key.bit_count()

    def distance(self, other):
        if self.n != other.n:
            raise ValueError("length mismatch")
        return (self.key ^ other.key).bit_count()

    def __xor__(self, other):
        if self.n != other.n:
            raise ValueError("length mismatch")
        return Assignment(self.n, self.key ^ other.key)

    def complement(self):
        return Assignment(self.n, self.key ^ ((1 << self.n) - 1))

    def flip(self, variable):
        return Assignment(self.n, self.key ^ (1 << (self.n - variable)))

    def __eq__(self, other):
        return (
            isinstance(other, Assignment)
            and self.n == other.n
            and self.key == other.key
        )

    def __hash__(self):
        return hash((self.n, self.key))

    def __lt__(self, other):
        return (self.n, self.key) < (other.n, other.key)

    def __repr__(self):
        return f"Assignment('{self.to_string()}')"


def _normalize_clause(clause, n):
    lits = set()
    for lit in clause:
        lit = int(lit)
        if lit == 0:
            raise ValueError("0 is not a literal")
        if abs(lit) > n:
            raise ValueError(f"variable {abs(lit)} exceeds n={n}")
        lits.add(lit)
    for lit in lits:
        if -lit in lits:
            return None  # tautological clause, always true
    return tuple(sorted(lits, key=lambda l: (abs(l), l < 0)))


class CnfFormula:
    """A CNF formula: `n` variables and an ordered tuple of clauses.

    Clauses are tuples of nonzero signed ints (DIMACS convention),
    deduplicated and sorted by variable; tautological clauses are
    dropped at construction.  An empty clause tuple marks a trivially
    false formula; no clauses at all marks a trivially true one.
    Clause order is semantically relevant to the randomized algorithms
    (first-unit / first-violated rules), so it is preserved.
    """

    def __init__(self, n, clauses):
        if n < 0:
            raise ValueError("n must be nonnegative")
        self.n = int(n)
        norm = []
        for clause in clauses:
            c = _normalize_clause(clause, self.n)
            if c is not None:
                norm.append(c)
        self.clauses = tuple(norm)
        self._arrays = None

    @property
    def k(self):
        """Maximum clause width (0 for a trivially true formula)."""
        return max((len(c) for c in self.clauses), default=0)

    @property
    def num_clauses(self):
        return len(self.clauses)

    def is_trivially_true(self):
        return not self.clauses

    def is_trivially_false(self):
        return any(len(c) == 0 for c in self.clauses)

    def to_dimacs(self):
        lines = [f"p cnf {self.n} {len(self.clauses)}"]
        for clause in self.clauses:
            lines.append(" ".join(str(l) for l in clause) + " 0")
        return "\n".join(lines) + "\n"

    def clause_arrays(self):
        """Padded numpy views of the clause list, cached per formula.

        Returns (vars, neg, valid): three (m, k) arrays with 0-based
        variable indices, negation flags and a padding mask.
        """
        if self._arrays is None:
            m = len(self.clauses)
            width = max(self.k, 1)
            cvars = np.zeros((m, width), dtype=np.int64)
            cneg = np.zeros((m, width), dtype=bool)
            valid = np.zeros((m, width), dtype=bool)
            for i, clause in enumerate(self.clauses):
                for j, lit in enumerate(clause):
                    cvars[i, j] = abs(lit) - 1
                    cneg[i, j] = lit < 0
                    valid[i, j] = True
            self._arrays = (cvars, cneg, valid)
        return self._arrays

    def __eq__(self, other):
        return (
            isinstance(other, CnfFormula)
            and self.n == other.n
            and self.clauses == other.clauses
        )

    def __hash__(self):
        return hash((self.n, self.clauses))

    def __repr__(self):
        return f"CnfFormula(n={self.n}, m={len(self.clauses)}, k={self.k})"


def parse_dimacs(text):
    """Parse DIMACS CNF text into a CnfFormula.

    Comment lines start with 'c' (or '%'); the header is "p cnf n m".
    Clauses are 0-terminated signed integer lists and may span lines; a
    clause left open at end of input is closed there.
    """
    n = None
    clauses = []
    current = []
    saw_tokens = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "c%":
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise ParseError("malformed header (expected 'p cnf n m')", lineno)
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise ParseError("malformed header (non-integer counts)", lineno)
            if n < 0:
                raise ParseError("negative variable count", lineno)
            continue
        if n is None:
            raise ParseError("clause before 'p cnf' header", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"not an integer literal: {tok!r}", lineno)
            saw_tokens = True
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                if abs(lit) > n:
                    raise ParseError(
                        f"variable {abs(lit)} exceeds declared n={n}", lineno
                    )
                current.append(lit)
    if n is None:
        raise ParseError("empty input: no 'p cnf' header found")
    if current:
        clauses.append(current)
    del saw_tokens
    return CnfFormula(n, clauses)


def evaluate(formula, z):
    """True iff every clause of `formula` has a literal made true by `z`."""
    if z.n != formula.n:
        raise ValueError("assignment length does not match formula")
    for clause in formula.clauses:
        for lit in clause:
            if z.bit(abs(lit)) != (lit < 0):
                break
        else:
            return False
    return True


def evaluate_keys(formula, keys):
    """Vectorized `evaluate` over an int64 array of assignment keys."""
    keys = np.asarray(keys, dtype=np.int64)
    ok = np.ones(keys.shape, dtype=bool)
    n = formula.n
    for clause in formula.clauses:
        sat = np.zeros(keys.shape, dtype=bool)
        for lit in clause:
            bitval = (keys >> (n - abs(lit))) & 1
            sat |= (bitval == 0) if lit < 0 else (bitval == 1)
        ok &= sat
    return ok


def condition(formula, variable, value):
    """Fix `variable` to `value`: drop satisfied clauses, remove false
    literals of the variable from the rest."""
    if not 1 <= variable <= formula.n:
        raise ValueError("variable out of range")
    true_lit = variable if value else -variable
    new_clauses = []
    for clause in formula.clauses:
        if true_lit in clause:
            continue
        if -true_lit in clause:
            new_clauses.append(tuple(l for l in clause if l != -true_lit))
        else:
            new_clauses.append(clause)
    return CnfFormula(formula.n, new_clauses)


def rotate(formula, z):
    """Swap literal polarity of every variable j with z_j = 0.

    z* satisfies F iff z* XOR ~z satisfies the rotated formula, so the
    map u -> u XOR ~z is a distance-preserving bijection between the
    two solution spaces.  Rotating twice with the same z gives back F.
    """
    if z.n != formula.n:
        raise ValueError("length mismatch")
    new_clauses = []
    for clause in formula.clauses:
        new_clauses.append(
            tuple(-l if z.bit(abs(l)) == 0 else l for l in clause)
        )
    return CnfFormula(formula.n, new_clauses)
