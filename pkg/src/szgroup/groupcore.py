"""Straight-line programs, random elements and generic conjugation tools."""
import copy
import math

import numpy as np

from . import linalg as la
from .errors import EvenOrder, IndexOutOfRange, ParseError, RetryLimitExceeded

DEFAULT_RETRY_MULT = 64


def make_rng(seed: int = 0) -> np.random.Generator:
    """Deterministic 64-bit generator (PCG64) used for every randomized call."""
    return np.random.Generator(np.random.PCG64(seed))


class SLP:
    """A straight-line program; the value is that of the last instruction.

    Instructions are tuples ``('G', k)``, ``('M', i, j)``, ``('P', i, e)`` or
    ``('C', i, j)`` (the conjugate of line i by line j).
    """

    __slots__ = ("instructions",)

    def __init__(self, instructions):
        self.instructions = [tuple(x) for x in instructions]
        for n, ins in enumerate(self.instructions):
            refs = ins[1:2] if ins[0] == "P" else (ins[1:3] if ins[0] in "MC" else ())
            if any(not 0 <= r < n for r in refs):
                raise IndexOutOfRange(f"line {n} refers forward or out of range")

    def __len__(self):
        return len(self.instructions)

    def __eq__(self, other):
        return isinstance(other, SLP) and self.instructions == other.instructions

    def __repr__(self):
        return f"SLP(len={len(self)})"

    def max_gen(self) -> int:
        return max((ins[1] for ins in self.instructions if ins[0] == "G"), default=-1)

    def evaluate(self, F, gens):
        return slp_evaluate(self, gens, F)

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in ins) for ins in self.instructions)

    @classmethod
    def from_text(cls, text: str) -> "SLP":
        out = []
        for n, line in enumerate(text.strip().splitlines(), 1):
            parts = line.split()
            try:
                if parts[0] == "G" and len(parts) == 2:
                    out.append(("G", int(parts[1])))
                elif parts[0] in ("M", "P", "C") and len(parts) == 3:
                    out.append((parts[0], int(parts[1]), int(parts[2])))
                else:
                    raise ValueError
            except (ValueError, IndexError):
                raise ParseError(f"bad SLP instruction {line!r}", line=n) from None
        return cls(out)


def slp_evaluate(w: SLP, gens, F):
    """Evaluate w on the matrices gens; each line is computed once."""
    vals = []
    for ins in w.instructions:
        op = ins[0]
        if op == "G":
            if not 0 <= ins[1] < len(gens):
                raise IndexOutOfRange(f"generator {ins[1]} out of range")
            vals.append(np.asarray(gens[ins[1]]))
        elif op == "M":
            vals.append(la.matmul(F, vals[ins[1]], vals[ins[2]]))
        elif op == "P":
            vals.append(la.mat_pow(F, vals[ins[1]], ins[2]))
        else:
            vals.append(la.conj(F, vals[ins[1]], vals[ins[2]]))
    if not vals:
        raise IndexOutOfRange("empty SLP")
    return vals[-1]


class SLPBuilder:
    """Shared DAG of instructions over a fixed list of user generators.

    Nodes are deduplicated, so building the same expression twice is free.
    Standalone programs are cut out by reachability.
    """

    def __init__(self, ngens: int):
        self.ngens = ngens
        self.instr = []
        self._index = {}

    def _add(self, ins):
        n = self._index.get(ins)
        if n is None:
            n = len(self.instr)
            self.instr.append(ins)
            self._index[ins] = n
        return n

    def gen(self, k: int):
        if not 0 <= k < self.ngens:
            raise IndexOutOfRange(f"generator {k} out of range")
        return self._add(("G", k))

    def mul(self, i, j):
        return self._add(("M", i, j))

    def pow(self, i, e: int):
        if e == 1:
            return i
        return self._add(("P", i, e))

    def conj(self, i, j):
        return self._add(("C", i, j))

    def extract(self, node) -> SLP:
        need = set()
        stack = [node]
        while stack:
            n = stack.pop()
            if n in need:
                continue
            need.add(n)
            ins = self.instr[n]
            if ins[0] in "MC":
                stack.extend(ins[1:3])
            elif ins[0] == "P":
                stack.append(ins[1])
        order = sorted(need)
        remap = {n: i for i, n in enumerate(order)}
        out = []
        for n in order:
            ins = self.instr[n]
            if ins[0] == "G":
                out.append(ins)
            elif ins[0] == "P":
                out.append(("P", remap[ins[1]], ins[2]))
            else:
                out.append((ins[0], remap[ins[1]], remap[ins[2]]))
        return SLP(out)

    def length(self, node) -> int:
        return len(self.extract(node))


class Elt:
    """A matrix together with its node in an SLPBuilder."""

    __slots__ = ("mat", "node")

    def __init__(self, mat, node):
        self.mat = mat
        self.node = node

    def __repr__(self):
        return f"Elt(node={self.node})"


class GenSet:
    """Generators of a matrix group plus the machinery to track SLPs in them.

    ``elements`` are the user generators themselves; every Elt produced by
    the methods below carries a node in ``builder`` whose program evaluates
    to its matrix on those generators.
    """

    def __init__(self, F, gens, builder=None, retry_mult: float = DEFAULT_RETRY_MULT):
        self.F = F
        self.gens = [np.asarray(g, dtype=np.int64) for g in gens]
        if not self.gens:
            raise ValueError("empty generating set")
        self.d = self.gens[0].shape[0]
        self.builder = builder or SLPBuilder(len(self.gens))
        self.elements = [Elt(g, self.builder.gen(i)) for i, g in enumerate(self.gens)]
        self.retry_mult = retry_mult
        self._pr = None

    @property
    def slps(self):
        return [self.slp(e) for e in self.elements]

    def slp(self, x: Elt) -> SLP:
        return self.builder.extract(x.node)

    def cap(self, expected: float) -> int:
        return max(1, math.ceil(self.retry_mult * expected))

    def identity(self) -> Elt:
        return Elt(la.identity(self.d), self.builder.pow(self.elements[0].node, 0))

    def mul(self, x: Elt, y: Elt) -> Elt:
        return Elt(la.matmul(self.F, x.mat, y.mat), self.builder.mul(x.node, y.node))

    def inv(self, x: Elt) -> Elt:
        return Elt(la.mat_inv(self.F, x.mat), self.builder.pow(x.node, -1))

    def pow(self, x: Elt, e: int) -> Elt:
        return Elt(la.mat_pow(self.F, x.mat, e), self.builder.pow(x.node, e))

    def conj(self, x: Elt, y: Elt) -> Elt:
        return Elt(la.conj(self.F, x.mat, y.mat), self.builder.conj(x.node, y.node))

    def comm(self, x: Elt, y: Elt) -> Elt:
        # [x, y] = x^-1 x^y
        return self.mul(self.inv(x), self.conj(x, y))

    def prod(self, *xs: Elt) -> Elt:
        r = xs[0]
        for x in xs[1:]:
            r = self.mul(r, x)
        return r

    def random(self, rng) -> Elt:
        if self._pr is None:
            self._pr = ProductReplacement(self, rng)
        return self._pr.next(rng)

    def reset_random(self, rng, slots: int = 10, scramble: int = 100):
        self._pr = ProductReplacement(self, rng, slots, scramble)

    def with_short_words(self, rng, slots: int = 10, scramble: int = 30, word: int = 6) -> "GenSet":
        """A view sharing this builder whose random elements have bounded SLPs."""
        view = copy.copy(self)
        view._pr = ShortWords(self, rng, slots, scramble, word)
        return view


class ProductReplacement:
    """Product replacement with an accumulator ("rattle")."""

    def __init__(self, gs: GenSet, rng, slots: int = 10, scramble: int = 100):
        self.gs = gs
        base = gs.elements
        self.slots = [base[i % len(base)] for i in range(max(slots, len(base)))]
        self.acc = gs.identity()
        for _ in range(scramble):
            self._step(rng)

    def _step(self, rng):
        n = len(self.slots)
        i = int(rng.integers(n))
        j = int(rng.integers(n - 1))
        if j >= i:
            j += 1
        gs = self.gs
        if rng.integers(2):
            self.slots[i] = gs.mul(self.slots[i], self.slots[j])
        else:
            self.slots[i] = gs.mul(self.slots[j], self.slots[i])
        self.acc = gs.mul(self.acc, self.slots[i])

    def next(self, rng) -> Elt:
        self._step(rng)
        return self.acc


class ShortWords(ProductReplacement):
    """Scramble once, then draw products of a few random slots.

    Slots are not updated after the scramble, so a draw's SLP is the shared
    scramble plus ``word`` lines, and unused draws leave no trace in later
    programs.
    """

    def __init__(self, gs: GenSet, rng, slots: int = 10, scramble: int = 30, word: int = 6):
        super().__init__(gs, rng, slots, scramble)
        self.word = word

    def next(self, rng) -> Elt:
        idx = rng.integers(len(self.slots), size=self.word)
        return self.gs.prod(*(self.slots[int(i)] for i in idx))


def random_element(gs: GenSet, rng):
    x = gs.random(rng)
    return x.mat, gs.slp(x)


def dihedral_conjugator(gs: GenSet, a: Elt, b: Elt, rng, order_fn=None) -> Elt:
    """g with a^g = b for conjugate involutions a, b."""
    F = gs.F
    if order_fn is None:
        order_fn = lambda M: la.matrix_order(F, M)
    if np.array_equal(a.mat, b.mat):
        return gs.identity()
    for _ in range(gs.cap(4)):
        h = gs.random(rng)
        c = gs.mul(gs.conj(a, h), b)
        n = order_fn(c.mat)
        if n % 2 == 0:
            continue
        g = gs.mul(h, gs.pow(c, (n + 1) // 2))
        if np.array_equal(la.conj(F, a.mat, g.mat), b.mat):
            return g
    raise RetryLimitExceeded("dihedral trick")


def formula_conjugator(F, a, b):
    """g = (ba)^k for a, b of odd order 2k+1."""
    n = la.matrix_order(F, a)
    if n % 2 == 0:
        raise EvenOrder("order of a is even")
    return la.mat_pow(F, la.matmul(F, b, a), n // 2)


def _keys(F, arr):
    dt = np.uint8 if F.q <= 256 else np.uint32
    flat = arr.astype(dt).reshape(arr.shape[0], -1)
    return [r.tobytes() for r in flat]


def enumerate_group(F, gens, limit: int | None = None):
    """Breadth-first closure of ⟨gens⟩; returns an array of all elements."""
    gens = [np.asarray(g, dtype=np.int64) for g in gens]
    d = gens[0].shape[0]
    start = la.identity(d)[None]
    seen = set(_keys(F, start))
    found = [start]
    frontier = start
    G = np.stack(gens)
    while frontier.shape[0]:
        # all products frontier[i] @ gens[k]
        prod = la.matmul(F, frontier[:, None], G[None]).reshape(-1, d, d)
        new = []
        for k, key in enumerate(_keys(F, prod)):
            if key not in seen:
                seen.add(key)
                new.append(k)
        frontier = prod[new]
        if frontier.shape[0]:
            found.append(frontier)
        if limit is not None and len(seen) > limit:
            raise RetryLimitExceeded("group larger than enumeration limit")
    return np.concatenate(found)


def group_order(F, gens, limit: int | None = None) -> int:
    return enumerate_group(F, gens, limit).shape[0]


def element_keys(F, arr) -> set:
    return set(_keys(F, np.asarray(arr)))
