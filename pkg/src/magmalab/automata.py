"""Semi-automata and Mealy automata, including machines built from Z_n groupoids.

States, input letters and output letters are 0-based indices.  Product
machines encode pairs in mixed radix with the first component most
significant, the same convention ``direct_product`` uses for magmas.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from . import config
from .errors import (
    ALPHABET_MISMATCH,
    ENTRY_OUT_OF_RANGE,
    INDEX_OUT_OF_RANGE,
    INVALID_SPEC,
    LENGTH_MISMATCH,
    ORDER_TOO_LARGE,
    PARSE_ERROR,
    MagmaError,
)
from .magma import SubsetMask
from .zn import ZnSpec


def _check_rows(rows: Sequence[Sequence[int]], height: int, width: int, bound: int, what: str):
    rows = tuple(tuple(int(v) for v in r) for r in rows)
    if len(rows) != height or any(len(r) != width for r in rows):
        raise MagmaError(LENGTH_MISMATCH, f"{what} table must be {height}x{width}")
    for z, r in enumerate(rows):
        for a, v in enumerate(r):
            if not 0 <= v < bound:
                raise MagmaError(ENTRY_OUT_OF_RANGE, f"{what}({z},{a}) = {v} not in [0,{bound})")
    return rows


def _check_labels(labels, count: int, what: str):
    if labels is None:
        return None
    labels = tuple(str(x) for x in labels)
    if len(labels) != count or len(set(labels)) != count:
        raise MagmaError(LENGTH_MISMATCH, f"{what} labels must be {count} distinct names")
    return labels


@dataclass(frozen=True)
class SemiAutomaton:
    state_count: int
    input_count: int
    delta: tuple[tuple[int, ...], ...]
    state_labels: tuple[str, ...] | None = None
    input_labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.state_count < 1 or self.input_count < 1:
            raise MagmaError(INVALID_SPEC, "need at least one state and one letter")
        object.__setattr__(self, "delta", _check_rows(self.delta, self.state_count,
                                                      self.input_count, self.state_count, "delta"))
        object.__setattr__(self, "state_labels", _check_labels(self.state_labels, self.state_count, "state"))
        object.__setattr__(self, "input_labels", _check_labels(self.input_labels, self.input_count, "input"))

    def state_name(self, z: int) -> str:
        return self.state_labels[z] if self.state_labels else str(z)

    def input_name(self, a: int) -> str:
        return self.input_labels[a] if self.input_labels else str(a)

    def step(self, z: int, a: int) -> int:
        if not 0 <= z < self.state_count:
            raise MagmaError(INDEX_OUT_OF_RANGE, f"state {z} out of range")
        if not 0 <= a < self.input_count:
            raise MagmaError(INDEX_OUT_OF_RANGE, f"letter {a} out of range")
        return self.delta[z][a]


@dataclass(frozen=True)
class Automaton:
    semi: SemiAutomaton
    output_count: int
    lam: tuple[tuple[int, ...], ...]
    output_labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.output_count < 1:
            raise MagmaError(INVALID_SPEC, "need at least one output letter")
        object.__setattr__(self, "lam", _check_rows(self.lam, self.semi.state_count,
                                                    self.semi.input_count, self.output_count, "lambda"))
        object.__setattr__(self, "output_labels", _check_labels(self.output_labels, self.output_count, "output"))

    @property
    def state_count(self) -> int:
        return self.semi.state_count

    @property
    def input_count(self) -> int:
        return self.semi.input_count

    @property
    def delta(self) -> tuple[tuple[int, ...], ...]:
        return self.semi.delta

    def output_name(self, b: int) -> str:
        return self.output_labels[b] if self.output_labels else str(b)


Machine = Union[SemiAutomaton, Automaton]


def _semi(machine: Machine) -> SemiAutomaton:
    return machine.semi if isinstance(machine, Automaton) else machine


def make_automaton(delta, lam, output_count: int | None = None, *, state_labels=None,
                   input_labels=None, output_labels=None) -> Automaton:
    """Convenience constructor from two row lists; output count defaults to max(lambda)+1."""
    delta = [list(r) for r in delta]
    lam = [list(r) for r in lam]
    k = len(delta)
    n = len(delta[0]) if delta else 0
    if output_count is None:
        output_count = max(max(r) for r in lam) + 1
    semi = SemiAutomaton(k, n, delta, state_labels, input_labels)
    return Automaton(semi, output_count, lam, output_labels)


# ------------------------------------------------------------------ runs

def run_semi(sa: Machine, z0: int, word: Sequence[int]) -> int:
    """Left fold of delta over the word; the empty word leaves z0 unchanged."""
    sa = _semi(sa)
    if not 0 <= z0 < sa.state_count:
        raise MagmaError(INDEX_OUT_OF_RANGE, f"state {z0} out of range")
    z = z0
    for a in word:
        z = sa.step(z, a)
    return z


def run_auto(at: Automaton, z0: int, word: Sequence[int]) -> tuple[list[int], int]:
    """Output sequence and final state."""
    if not 0 <= z0 < at.state_count:
        raise MagmaError(INDEX_OUT_OF_RANGE, f"state {z0} out of range")
    out: list[int] = []
    z = z0
    for a in word:
        nz = at.semi.step(z, a)
        out.append(at.lam[z][a])
        z = nz
    return out, z


@dataclass(frozen=True)
class FreeWord:
    """A non-associative word: a leaf letter, or the juxtaposition of two words."""

    letter: int | None = None
    left: "FreeWord | None" = None
    right: "FreeWord | None" = None

    def __post_init__(self) -> None:
        leaf = self.letter is not None and self.left is None and self.right is None
        node = self.letter is None and self.left is not None and self.right is not None
        if not (leaf or node):
            raise MagmaError(INVALID_SPEC, "a free word is a letter or a pair of free words")

    @classmethod
    def leaf(cls, a: int) -> "FreeWord":
        return cls(letter=a)

    @classmethod
    def join(cls, w1: "FreeWord", w2: "FreeWord") -> "FreeWord":
        return cls(left=w1, right=w2)

    def leaves(self) -> list[int]:
        out: list[int] = []
        stack = [self]
        while stack:
            w = stack.pop()
            if w.letter is not None:
                out.append(w.letter)
            else:
                stack.append(w.right)
                stack.append(w.left)
        return out

    def __str__(self) -> str:
        if self.letter is not None:
            return str(self.letter)
        return f"({self.left}.{self.right})"


def run_free(sa: Machine, z0: int, fw: FreeWord) -> int:
    """Evaluate a free word: a leaf applies delta, a pair runs left then right."""
    sa = _semi(sa)
    if fw.letter is not None:
        return sa.step(z0, fw.letter)
    return run_free(sa, run_free(sa, z0, fw.left), fw.right)


# ------------------------------------------------------ groupoid machines

def _plain(spec: ZnSpec, role: str) -> ZnSpec:
    if spec.adjoin_identity:
        raise MagmaError(INVALID_SPEC, f"{role} spec {spec} must not adjoin an identity")
    return spec


def from_groupoids(zspec: ZnSpec, aspec: ZnSpec, bspec: ZnSpec | None = None) -> Machine:
    """Machine with states Z_nZ, letters Z_nA and optionally outputs Z_nB.

    delta(z, a) is z*a in the state groupoid with the letter reduced mod n_Z;
    lambda(z, a) is z*a in the output groupoid with both reduced mod n_B.
    """
    zs, as_ = _plain(zspec, "state"), _plain(aspec, "input")
    nz, na = zs.n, as_.n
    delta = [[(zs.t * z + zs.u * (a % nz)) % nz for a in range(na)] for z in range(nz)]
    semi = SemiAutomaton(nz, na, delta)
    if bspec is None:
        return semi
    bs = _plain(bspec, "output")
    nb = bs.n
    lam = [[(bs.t * (z % nb) + bs.u * (a % nb)) % nb for a in range(na)] for z in range(nz)]
    return Automaton(semi, nb, lam)


# ------------------------------------------------------- sub-machines

def _closed_bits(sa: SemiAutomaton, letters: Sequence[int] | None = None) -> list[int]:
    """All nonempty delta-closed state sets (including the full set) as bitmasks."""
    k = sa.state_count
    letters = range(sa.input_count) if letters is None else letters
    succ = [0] * k
    for z in range(k):
        for a in letters:
            succ[z] |= 1 << sa.step(z, a)
    # Closed sets are exactly unions of forward-reachability closures, so
    # close every subset of generators; k is small for this module's use.
    reach = []
    for z in range(k):
        bits, frontier = 1 << z, 1 << z
        while frontier:
            new = 0
            f = frontier
            while f:
                low = f & -f
                new |= succ[low.bit_length() - 1]
                f ^= low
            frontier = new & ~bits
            bits |= new
        reach.append(bits)
    found = {0}
    for z in range(k):
        found |= {b | reach[z] for b in found}
    found.discard(0)
    return sorted(found, key=lambda b: (b.bit_count(), [i for i in range(k) if b >> i & 1]))


def closed_state_sets(machine: Machine, letters: Sequence[int] | None = None) -> list[SubsetMask]:
    """Proper nonempty state sets that every letter maps into themselves.

    ``letters`` restricts the alphabet; by default every letter must keep
    the set closed.
    """
    sa = _semi(machine)
    full = (1 << sa.state_count) - 1
    return [SubsetMask(sa.state_count, b) for b in _closed_bits(sa, letters) if b != full]


def s_sub_semi_automata(machine: Machine, letters: Sequence[int] | None = None) -> list[SubsetMask]:
    """Closed proper state sets that properly contain another closed set."""
    closed = closed_state_sets(machine, letters)
    return [h for h in closed if any(k.bits != h.bits and k.issubset(h) for k in closed)]


# -------------------------------------------------------- composition

def series_compose(k1: Automaton, k2: Automaton) -> Automaton:
    """K1's output drives K2; states are pairs (z1, z2), outputs are K2's."""
    if k1.output_count != k2.input_count:
        raise MagmaError(ALPHABET_MISMATCH,
                         f"K1 emits {k1.output_count} letters but K2 reads {k2.input_count}")
    s2 = k2.state_count
    delta, lam = [], []
    for z1 in range(k1.state_count):
        for z2 in range(s2):
            drow, lrow = [], []
            for a in range(k1.input_count):
                b1 = k1.lam[z1][a]
                drow.append(k1.delta[z1][a] * s2 + k2.delta[z2][b1])
                lrow.append(k2.lam[z2][b1])
            delta.append(drow)
            lam.append(lrow)
    labels = [f"({k1.semi.state_name(x)},{k2.semi.state_name(y)})"
              for x in range(k1.state_count) for y in range(s2)]
    semi = SemiAutomaton(len(delta), k1.input_count, delta, labels, k1.semi.input_labels)
    return Automaton(semi, k2.output_count, lam, k2.output_labels)


def parallel_compose(k1: Automaton, k2: Automaton) -> Automaton:
    """Componentwise product on states, letters and outputs."""
    s2, n2, m2 = k2.state_count, k2.input_count, k2.output_count
    delta, lam = [], []
    for z1 in range(k1.state_count):
        for z2 in range(s2):
            drow, lrow = [], []
            for a1 in range(k1.input_count):
                for a2 in range(n2):
                    drow.append(k1.delta[z1][a1] * s2 + k2.delta[z2][a2])
                    lrow.append(k1.lam[z1][a1] * m2 + k2.lam[z2][a2])
            delta.append(drow)
            lam.append(lrow)

    def pairs(f1, c1, f2, c2):
        return [f"({f1(x)},{f2(y)})" for x in range(c1) for y in range(c2)]

    semi = SemiAutomaton(
        len(delta), k1.input_count * n2, delta,
        pairs(k1.semi.state_name, k1.state_count, k2.semi.state_name, s2),
        pairs(k1.semi.input_name, k1.input_count, k2.semi.input_name, n2),
    )
    return Automaton(semi, k1.output_count * m2, lam,
                     pairs(k1.output_name, k1.output_count, k2.output_name, m2))


def pair_index(radix: int, first: int, second: int) -> int:
    """Encode a pair the way the composition builders do."""
    return first * radix + second


# -------------------------------------------------- divides / equivalent

def _maps_onto(k1: Machine, k2: Machine, states: list[int]) -> bool:
    """Is there a surjection phi: states -> K1 commuting with delta (and lambda)?"""
    with_out = isinstance(k1, Automaton)
    s1, s2 = _semi(k1), _semi(k2)
    target = s1.state_count
    if len(states) < target:
        return False
    pos = {z: i for i, z in enumerate(states)}
    phi: list[int] = [-1] * len(states)

    def consistent(i: int) -> bool:
        z = states[i]
        for a in range(s2.input_count):
            if with_out and k2.lam[z][a] != k1.lam[phi[i]][a]:
                return False
            j = pos[s2.delta[z][a]]
            if phi[j] >= 0 and phi[j] != s1.delta[phi[i]][a]:
                return False
        # constraints where z is the successor of an already assigned state
        for j, y in enumerate(states):
            if phi[j] < 0:
                continue
            for a in range(s2.input_count):
                if s2.delta[y][a] == z and phi[i] != s1.delta[phi[j]][a]:
                    return False
        return True

    def search(i: int) -> bool:
        if i == len(states):
            return len(set(phi)) == target
        remaining = len(states) - i
        missing = target - len(set(p for p in phi[:i]))
        if missing > remaining:
            return False
        for v in range(target):
            phi[i] = v
            if consistent(i) and search(i + 1):
                return True
        phi[i] = -1
        return False

    return search(0)


def automaton_divides(k1: Machine, k2: Machine) -> bool:
    """K1 is a homomorphic image of a sub-machine of K2 (letters mapped identically)."""
    cap = config.AUTOMATON_CAP
    if k1.state_count > cap or k2.state_count > cap:
        raise MagmaError(ORDER_TOO_LARGE, f"state counts above {cap}")
    if isinstance(k1, Automaton) != isinstance(k2, Automaton):
        return False
    if k1.input_count != k2.input_count:
        return False
    if isinstance(k1, Automaton) and k1.output_count != k2.output_count:
        return False
    for bits in _closed_bits(_semi(k2)):
        states = [z for z in range(k2.state_count) if bits >> z & 1]
        if _maps_onto(k1, k2, states):
            return True
    return False


def automaton_equivalent(k1: Machine, k2: Machine) -> bool:
    return automaton_divides(k1, k2) and automaton_divides(k2, k1)


# ------------------------------------------------------- text formats

def to_dot(machine: Machine, name: str = "machine") -> str:
    """State graph in DOT; one edge per (state, letter), labelled a or a/output."""
    sa = _semi(machine)
    lines = [f"digraph {name} {{"]
    for z in range(sa.state_count):
        lines.append(f'  "{sa.state_name(z)}";')
    for z in range(sa.state_count):
        for a in range(sa.input_count):
            label = sa.input_name(a)
            if isinstance(machine, Automaton):
                label += "/" + machine.output_name(machine.lam[z][a])
            lines.append(f'  "{sa.state_name(z)}" -> "{sa.state_name(sa.delta[z][a])}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps_machine(machine: Machine) -> str:
    sa = _semi(machine)
    head = f"{sa.state_count} {sa.input_count}"
    if isinstance(machine, Automaton):
        head += f" {machine.output_count}"
    rows = [" ".join(map(str, r)) for r in sa.delta]
    if isinstance(machine, Automaton):
        rows += [" ".join(map(str, r)) for r in machine.lam]
    if sa.state_labels:
        rows.append("# labels: " + " ".join(sa.state_labels))
    return "\n".join([head, *rows]) + "\n"


def loads_machine(text: str) -> Machine:
    labels = None
    for raw in text.splitlines():
        if raw.startswith("# labels:"):
            labels = raw[len("# labels:"):].split()
    lines = [ln for ln in (s.split("#", 1)[0].strip() for s in text.splitlines()) if ln]
    try:
        head = [int(x) for x in lines[0].split()]
        if len(head) not in (2, 3):
            raise ValueError("header needs 2 or 3 numbers")
        k, n = head[0], head[1]
        rows = [[int(x) for x in ln.split()] for ln in lines[1:]]
    except (IndexError, ValueError) as exc:
        raise MagmaError(PARSE_ERROR, f"bad machine text: {exc}") from None
    want = 2 * k if len(head) == 3 else k
    if len(rows) != want:
        raise MagmaError(PARSE_ERROR, f"expected {want} table rows, got {len(rows)}")
    semi = SemiAutomaton(k, n, rows[:k], labels)
    if len(head) == 2:
        return semi
    return Automaton(semi, head[2], rows[k:])


def all_words(n_letters: int, max_len: int) -> Iterator[tuple[int, ...]]:
    """Every word up to ``max_len`` letters, shortest first."""
    for length in range(max_len + 1):
        yield from itertools.product(range(n_letters), repeat=length)
