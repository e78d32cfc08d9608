"""Coxeter systems, words, ShortLex normal forms and ball enumeration.

Two interchangeable word-problem engines sit behind :class:`CoxeterSystem`:

``"tits"``
    Tits rewriting. A word is closed under braid moves, and an adjacent
    equal pair is deleted as soon as one is exposed. Exact and simple, but the
    closure is exponential in the number of commuting letters.

``"roots"``
    Length descent in the geometric representation. The bilinear form is
    ``B(a_i, a_j) = -cos(pi / m_ij)`` (``-1`` when ``m_ij`` is infinite). When
    every ``m_ij`` lies in ``{2, 3, inf}`` the matrix ``2B`` is integral and all
    arithmetic is done in Python integers, so the engine is exact. Otherwise
    floats are used and a root sign closer to zero than ``tol`` raises
    :class:`~coxwalls.errors.PrecisionError`.

The roots engine is the default. The test-suite checks that both engines
return identical normal forms on exhaustive word sets.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapExceededError, InvalidInputError, PrecisionError

INFINITY = math.inf


@dataclass(frozen=True)
class Caps:
    """Enumeration limits; exceeding one raises ``CapExceededError``."""

    closure: int = 10**6  # braid-closure size
    order: int = 200  # largest power tried when looking for a finite order
    ball: int = 10**6  # elements held by ``ball``
    depth: int = 64  # recursion depth of ``straighten``


class Element:
    """A group element, stored as its ShortLex normal form.

    Elements are interned per system, so two equal elements built through the
    same system are usually the same object. Use ``sys.element(...)`` or
    ``sys.normal_form(...)`` to build one.
    """

    __slots__ = ("system", "word", "_hash", "_dual")

    def __init__(self, system: CoxeterSystem, word: tuple[int, ...]):
        self.system = system
        self.word = word
        self._hash = hash(word)
        self._dual = None

    @property
    def length(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def is_identity(self) -> bool:
        return not self.word

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if self is other:
            return True
        return self.word == other.word and self.system == other.system

    def __hash__(self):
        return self._hash

    def __lt__(self, other: Element) -> bool:
        # ShortLex
        return (len(self.word), self.word) < (len(other.word), other.word)

    def __mul__(self, other: Element) -> Element:
        return self.system.multiply(self, other)

    def inverse(self) -> Element:
        return self.system.inverse(self)

    @property
    def dual(self) -> list:
        """Coordinate sums of the roots ``w^-1(a_j)``; ``dual[j] < 0`` iff ``j`` is a left descent."""
        if self._dual is None:
            self._dual = self.system._dual_of_word(self.word)
        return self._dual

    def __str__(self) -> str:
        return self.system.format_word(self.word) or "1"

    def __repr__(self) -> str:
        return f"Element({self.system.format_word(self.word)!r})"


class CoxeterSystem:
    """A finitely generated Coxeter system ``(W, S)``.

    Parameters
    ----------
    generators:
        Distinct, nonempty generator names. Their order defines ShortLex.
    matrix:
        Symmetric Coxeter matrix with ones on the diagonal, entries ``>= 2``
        off it, and :data:`INFINITY` for ``m = inf``.
    engine:
        ``"roots"`` (default) or ``"tits"``.
    tol:
        Sign tolerance for the floating-point root arithmetic.
    caps:
        Enumeration limits used as defaults by every operation.
    """

    def __init__(
        self,
        generators: Sequence[str],
        matrix: Sequence[Sequence[float]],
        *,
        engine: str = "roots",
        tol: float = 1e-9,
        caps: Caps | None = None,
    ):
        generators = tuple(generators)
        n = len(generators)
        if n == 0:
            raise InvalidInputError("a Coxeter system needs at least one generator")
        if any(not isinstance(g, str) or not g for g in generators):
            raise InvalidInputError("generator names must be nonempty strings")
        if len(set(generators)) != n:
            raise InvalidInputError("generator names must be distinct")
        rows = [list(r) for r in matrix]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise InvalidInputError(f"matrix must be {n}x{n}")
        for i in range(n):
            for j in range(n):
                m = rows[i][j]
                if m != INFINITY and (not float(m).is_integer()):
                    raise InvalidInputError(f"matrix[{i}][{j}] = {m!r} is not an integer or INFINITY")
                if m != INFINITY:
                    rows[i][j] = int(m)
        for i in range(n):
            if rows[i][i] != 1:
                raise InvalidInputError(f"matrix[{i}][{i}] must be 1, got {rows[i][i]!r}")
            for j in range(n):
                if rows[i][j] != rows[j][i]:
                    raise InvalidInputError("matrix not symmetric")
                if i != j and rows[i][j] < 2:
                    raise InvalidInputError(f"matrix[{i}][{j}] must be >= 2 off the diagonal")
        if engine not in ("roots", "tits"):
            raise InvalidInputError(f"unknown engine {engine!r}")

        self.generators = generators
        self.matrix = tuple(tuple(r) for r in rows)
        self.rank = n
        self.engine = engine
        self.tol = tol
        self.caps = caps or Caps()
        self._index = {g: i for i, g in enumerate(generators)}

        # 2B is integral exactly when every m is 2, 3 or infinite.
        self.exact = all(m in (1, 2, 3, INFINITY) for r in self.matrix for m in r)
        self.form2 = [[self._form2_entry(self.matrix[i][j]) for j in range(n)] for i in range(n)]
        self._nz = [[(j, c) for j, c in enumerate(self.form2[i]) if c != 0] for i in range(n)]
        self._alt = {}
        for i in range(n):
            for j in range(n):
                m = self.matrix[i][j]
                if i != j and m != INFINITY:
                    self._alt[i, j] = tuple(i if k % 2 == 0 else j for k in range(m))

        self._elements: dict[tuple[int, ...], Element] = {}
        self._nf_cache: dict[tuple[int, ...], Element] = {}
        self._reduce_cache: dict[tuple[int, ...], tuple[int, ...]] = {}
        self._ball_cache: dict[int, list[Element]] = {}
        # per-system memo tables owned by other modules, keyed by table name
        self.memo: dict[str, dict] = {}
        self.identity = self._intern(())

    def table(self, name: str) -> dict:
        return self.memo.setdefault(name, {})

    def _form2_entry(self, m):
        if m == 1:
            return 2
        if m == INFINITY:
            return -2
        if m == 2:
            return 0
        if m == 3:
            return -1
        return -2.0 * math.cos(math.pi / m)

    # -- identity and display --------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, CoxeterSystem):
            return NotImplemented
        return self is other or (self.generators == other.generators and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.generators, self.matrix))

    def __repr__(self):
        return f"CoxeterSystem({list(self.generators)!r}, {[list(r) for r in self.matrix]!r})"

    def with_engine(self, engine: str) -> CoxeterSystem:
        """Same group, different word-problem engine (fresh caches)."""
        return CoxeterSystem(self.generators, self.matrix, engine=engine, tol=self.tol, caps=self.caps)

    def with_caps(self, caps: Caps) -> CoxeterSystem:
        return CoxeterSystem(self.generators, self.matrix, engine=self.engine, tol=self.tol, caps=caps)

    def format_word(self, word: Iterable[int]) -> str:
        names = [self.generators[i] for i in word]
        if all(len(g) == 1 for g in self.generators):
            return "".join(names)
        return " ".join(names)

    def word(self, value) -> tuple[int, ...]:
        """Parse a word.

        A string is read letter by letter when every generator name is a single
        character, otherwise it must be whitespace separated. Sequences may
        hold generator names or indices.
        """
        if isinstance(value, str):
            if all(len(g) == 1 for g in self.generators):
                tokens = [ch for ch in value if not ch.isspace()]
            else:
                tokens = value.split()
        else:
            tokens = list(value)
        out = []
        for tok in tokens:
            if isinstance(tok, str):
                if tok not in self._index:
                    raise InvalidInputError(f"unknown generator {tok!r}")
                out.append(self._index[tok])
            else:
                out.append(tok)
        return self._check(out)

    def _check(self, word) -> tuple[int, ...]:
        if isinstance(word, str):
            return self.word(word)
        w = tuple(word)
        n = self.rank
        for x in w:
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
                raise InvalidInputError(f"letter {x!r} out of range for rank {n}")
        return w

    def generator(self, s) -> Element:
        if isinstance(s, str):
            s = self.word([s])[0]
        return self.normal_form((s,))

    def element(self, value) -> Element:
        """Element represented by ``value`` (any word, not necessarily reduced)."""
        if isinstance(value, Element):
            self._same(value)
            return value
        return self.normal_form(self.word(value))

    def _intern(self, nf: tuple[int, ...]) -> Element:
        el = self._elements.get(nf)
        if el is None:
            el = Element(self, nf)
            self._elements[nf] = el
            self._nf_cache[nf] = el
        return el

    def _same(self, *elements: Element) -> None:
        for e in elements:
            if not isinstance(e, Element):
                raise InvalidInputError(f"expected an Element, got {type(e).__name__}")
            if e.system is not self and e.system != self:
                raise InvalidInputError("system mismatch")

    # -- geometric representation ------------------------------------------

    def _one(self):
        return 1 if self.exact else 1.0

    def _act_dual(self, c: list, s: int) -> None:
        # row vector times the reflection matrix of s, in place
        cs = c[s]
        if cs:
            for j, coef in self._nz[s]:
                c[j] -= coef * cs

    def _act_root(self, v: list, s: int) -> None:
        # reflection of s applied to a column vector, in place
        v[s] -= sum(coef * v[j] for j, coef in self._nz[s])

    def _dual_of_word(self, word: Sequence[int]) -> list:
        c = [self._one()] * self.rank
        for s in reversed(word):
            self._act_dual(c, s)
        return c

    def root(self, word: Sequence[int], t: int) -> list:
        """Coordinates of ``x(a_t)`` where ``x`` is the element spelled by ``word``."""
        v = [0 * self._one()] * self.rank
        v[t] = self._one()
        for s in reversed(word):
            self._act_root(v, s)
        return v

    def matrix_of(self, word: Sequence[int]) -> list[list]:
        """Matrix of the element spelled by ``word``; column ``j`` is ``x(a_j)``."""
        n = self.rank
        one = self._one()
        m = [[one if i == j else 0 * one for j in range(n)] for i in range(n)]
        for s in word:
            self._right_act(m, s)
        return m

    def _right_act(self, m: list[list], s: int) -> None:
        # m <- m * (reflection matrix of s)
        for row in m:
            x = row[s]
            if x:
                for j, coef in self._nz[s]:
                    row[j] -= x * coef

    def edge_roots(self, start: Sequence[int], letters: Sequence[int]) -> list[list]:
        """Root ``x_i(a_{t_i})`` of each edge of the path from ``start`` along ``letters``."""
        m = self.matrix_of(start)
        out = []
        for t in letters:
            out.append([row[t] for row in m])
            self._right_act(m, t)
        return out

    def form(self, u: Sequence, v: Sequence):
        """Twice the bilinear form, ``2 B(u, v)``; integral on an exact system."""
        f = self.form2
        n = self.rank
        return sum(u[i] * f[i][j] * v[j] for i in range(n) if u[i] for j in range(n) if v[j])

    def sign(self, x) -> int:
        """Sign of a root coordinate sum, honouring ``tol`` in float mode."""
        if self.exact:
            return (x > 0) - (x < 0)
        if abs(x) <= self.tol:
            raise PrecisionError(f"root sign {x!r} within tolerance {self.tol}")
        return 1 if x > 0 else -1

    def _extract(self, c: list) -> tuple[int, ...]:
        # peel the smallest left descent until none is left
        out = []
        n = self.rank
        exact = self.exact
        while True:
            if not exact:
                for x in c:
                    if abs(x) <= self.tol:
                        raise PrecisionError(f"root sign {x!r} within tolerance {self.tol}")
            for j in range(n):
                if c[j] < 0:
                    break
            else:
                return tuple(out)
            out.append(j)
            self._act_dual(c, j)

    # -- word problem ----------------------------------------------------

    def _alt_at(self, word: tuple[int, ...], i: int):
        s, t = word[i], word[i + 1]
        if s == t:
            return None
        alt = self._alt.get((s, t))
        if alt is None or i + len(alt) > len(word):
            return None
        if word[i:i + len(alt)] != alt:
            return None
        return word[:i] + self._alt[t, s] + word[i + len(alt):]

    def braid_neighbours(self, word: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
        """Words one braid move away from ``word``."""
        for i in range(len(word) - 1):
            nxt = self._alt_at(word, i)
            if nxt is not None:
                yield nxt

    def braid_closure(self, word: Sequence[int], cap: int | None = None) -> set[tuple[int, ...]]:
        """All words reachable from ``word`` by braid moves."""
        cap = self.caps.closure if cap is None else cap
        start = self._check(word)
        seen = {start}
        queue = deque([start])
        while queue:
            w = queue.popleft()
            for nxt in self.braid_neighbours(w):
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > cap:
                        raise CapExceededError("braid closure", cap)
                    queue.append(nxt)
        return seen

    def _find_pair(self, word: tuple[int, ...], cap: int):
        # search the braid closure for an exposed adjacent pair
        seen = {word}
        queue = deque([word])
        while queue:
            w = queue.popleft()
            for i in range(len(w) - 1):
                if w[i] == w[i + 1]:
                    return w[:i] + w[i + 2:]
            for nxt in self.braid_neighbours(w):
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > cap:
                        raise CapExceededError("braid closure", cap)
                    queue.append(nxt)
        return None

    def _reduce_tits(self, word: tuple[int, ...]) -> tuple[int, ...]:
        hit = self._reduce_cache.get(word)
        if hit is not None:
            return hit
        cap = self.caps.closure
        # a reduced prefix times a letter is either reduced or loses exactly one pair
        r: tuple[int, ...] = ()
        for k, s in enumerate(word):
            cand = r + (s,)
            known = self._reduce_cache.get(word[:k + 1])
            if known is not None:
                r = known
                continue
            shorter = self._find_pair(cand, cap)
            r = cand if shorter is None else shorter
            self._reduce_cache[word[:k + 1]] = r
        self._reduce_cache[word] = r
        return r

    def reduce(self, word) -> tuple[int, ...]:
        """A reduced word for the same element.

        The ``tits`` engine returns the first reduced word found by rewriting;
        the ``roots`` engine returns the ShortLex normal form.
        """
        w = self._check(word)
        if self.engine == "tits":
            return self._reduce_tits(w)
        return self.normal_form(w).word

    def normal_form(self, word) -> Element:
        w = self._check(word)
        el = self._nf_cache.get(w)
        if el is not None:
            return el
        if self.engine == "tits":
            r = self._reduce_tits(w)
            nf = min(self.braid_closure(r)) if r else ()
        else:
            c = self._dual_of_word(w)
            dual = list(c)
            nf = self._extract(c)
        el = self._intern(nf)
        if self.engine == "roots" and el._dual is None:
            el._dual = dual
        self._nf_cache[w] = el
        return el

    def multiply(self, a: Element, b: Element) -> Element:
        self._same(a, b)
        if not a.word:
            return b
        if not b.word:
            return a
        return self.normal_form(a.word + b.word)

    def inverse(self, a: Element) -> Element:
        self._same(a)
        return self.normal_form(a.word[::-1])

    def conjugate(self, a: Element, b: Element) -> Element:
        """``a b a^-1``."""
        self._same(a, b)
        return self.normal_form(a.word + b.word + a.word[::-1])

    def length(self, a: Element) -> int:
        self._same(a)
        return len(a.word)

    def distance(self, a: Element, b: Element) -> int:
        self._same(a, b)
        if a is b:
            return 0
        if self.engine == "roots":
            # length of a^-1 b by peeling its dual, without interning
            c = self._dual_of_word(a.word[::-1] + b.word)
            return self._peel_count(c)
        return len(self.normal_form(a.word[::-1] + b.word).word)

    def _peel_count(self, c: list) -> int:
        n = self.rank
        k = 0
        while True:
            if not self.exact:
                for x in c:
                    if abs(x) <= self.tol:
                        raise PrecisionError(f"root sign {x!r} within tolerance {self.tol}")
            for j in range(n):
                if c[j] < 0:
                    break
            else:
                return k
            k += 1
            self._act_dual(c, j)

    def is_right_descent(self, a: Element, s: int) -> bool:
        """``l(a s) < l(a)``."""
        return self.sign(sum(self.root(a.word, s))) < 0

    def is_left_descent(self, a: Element, s: int) -> bool:
        """``l(s a) < l(a)``."""
        return self.sign(a.dual[s]) < 0

    def all_reduced_words(self, a: Element, cap: int | None = None) -> set[tuple[int, ...]]:
        """Every reduced word for ``a`` (the braid closure of its normal form)."""
        self._same(a)
        return self.braid_closure(a.word, cap)

    def ball(self, radius: int, cap: int | None = None) -> list[Element]:
        """Elements of length at most ``radius``, in ShortLex order."""
        if radius < 0:
            raise InvalidInputError("radius must be non-negative")
        cap = self.caps.ball if cap is None else cap
        hit = self._ball_cache.get(radius)
        if hit is not None:
            return list(hit)
        out = [self.identity]
        level = [self.identity]
        seen = {self.identity}
        for k in range(radius):
            nxt = set()
            for x in level:
                for s in range(self.rank):
                    y = self.normal_form(x.word + (s,))
                    if len(y.word) == k + 1 and y not in seen:
                        nxt.add(y)
            if not nxt:
                break
            seen |= nxt
            if len(seen) > cap:
                raise CapExceededError("ball", cap)
            level = sorted(nxt)
            out.extend(level)
        self._ball_cache[radius] = out
        return list(out)


# Module-level spellings of the core operations.


def reduce(sys: CoxeterSystem, word) -> tuple[int, ...]:
    return sys.reduce(word)


def normal_form(sys: CoxeterSystem, word) -> Element:
    return sys.normal_form(word)


def multiply(sys: CoxeterSystem, a: Element, b: Element) -> Element:
    return sys.multiply(a, b)


def inverse(sys: CoxeterSystem, a: Element) -> Element:
    return sys.inverse(a)


def length(a: Element) -> int:
    return len(a.word)


def distance(sys: CoxeterSystem, a: Element, b: Element) -> int:
    return sys.distance(a, b)


def all_reduced_words(sys: CoxeterSystem, a: Element, cap: int | None = None) -> set[tuple[int, ...]]:
    return sys.all_reduced_words(a, cap)


def ball(sys: CoxeterSystem, radius: int, cap: int | None = None) -> list[Element]:
    return sys.ball(radius, cap)
