"""Exact arithmetic in presented algebras with PBW bases.

Three kinds of presented algebra are supported:

* ``Yangian(n)`` on generators ``T[i,j;r]`` (``r >= 1``) with the RTT
  commutator rule as straightening oracle;
* ``TensorYangian(n, k)``, the k-fold tensor power of ``Yangian(n)``,
  generators ``@s:T[i,j;r]``;
* ``TensorEnveloping(n, l)``, the l-fold tensor power of ``U(gl_n)``,
  generators ``E[s;i,j]``.

Generators are plain tuples whose natural tuple order is the PBW order:
``(i, j, r)`` for the Yangian, ``(s, i, j, r)`` for tensor Yangians and
``(s, i, j)`` for enveloping algebras.  An :class:`Element` is a sparse map
from words (tuples of generators) to nonzero rationals.
"""

from __future__ import annotations

import math
import re
from typing import Callable, Dict, Iterable, Iterator, Tuple, Union

import gmpy2

Rational = type(gmpy2.mpq())
Gen = tuple
Word = Tuple[tuple, ...]
Scalar = Union[int, "gmpy2.mpq"]

# degree of the zero element
MINUS_INFINITY = -math.inf

DEFAULT_TERM_CAP = 2_000_000

YANGIAN = "yangian"
TENSOR_YANGIAN = "tensor-yangian"
ENVELOPING = "enveloping"


class AlgebraError(Exception):
    pass


class ContextMismatch(AlgebraError):
    pass


class IndexBoundError(AlgebraError, ValueError):
    pass


class TermCapExceeded(AlgebraError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"intermediate result has {size} terms (cap {cap})")
        self.size = size
        self.cap = cap


class ParseError(AlgebraError, ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


def rational(value) -> Rational:
    """Coerce ints, Fractions, strings like ``"3/2"`` to an exact rational."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not allowed")
    return gmpy2.mpq(value)


def _add_into(acc: dict, word, coeff) -> None:
    c = acc.get(word)
    if c is None:
        acc[word] = coeff
    else:
        c = c + coeff
        if c:
            acc[word] = c
        else:
            del acc[word]


def _axpy(acc: dict, scale, terms: dict) -> None:
    """acc += scale * terms (in place)."""
    for w, c in terms.items():
        _add_into(acc, w, scale * c)


class Algebra:
    """A presented algebra: generator alphabet, PBW order, straightening oracle.

    Instances own the memo tables used by :meth:`normal_form`; build them via
    the cached factories :func:`Yangian`, :func:`TensorYangian` and
    :func:`TensorEnveloping` so that equal contexts share one cache.  The
    caches are not locked: use one instance per worker process.
    """

    def __init__(self, kind: str, n: int, slots: int = 1, term_cap: int = DEFAULT_TERM_CAP):
        if n < 1:
            raise ValueError("n must be positive")
        if slots < 1:
            raise ValueError("number of tensor slots must be positive")
        self.kind = kind
        self.n = n
        self.slots = slots
        self.term_cap = term_cap
        self._bracket_cache: Dict[tuple, dict] = {}
        self._lmul_cache: Dict[tuple, dict] = {}
        self._bracket: Callable[[Gen, Gen], dict] = {
            YANGIAN: self._yangian_bracket,
            TENSOR_YANGIAN: self._tensor_yangian_bracket,
            ENVELOPING: self._enveloping_bracket,
        }[kind]

    # -- identity -----------------------------------------------------------

    @property
    def key(self) -> tuple:
        return (self.kind, self.n, self.slots)

    def __eq__(self, other) -> bool:
        return isinstance(other, Algebra) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        if self.kind == YANGIAN:
            return f"Yangian({self.n})"
        if self.kind == TENSOR_YANGIAN:
            return f"TensorYangian({self.n}, {self.slots})"
        return f"TensorEnveloping({self.n}, {self.slots})"

    def clear_cache(self) -> None:
        self._bracket_cache.clear()
        self._lmul_cache.clear()

    # -- generators ---------------------------------------------------------

    def check_gen(self, g: Gen) -> None:
        n = self.n
        if self.kind == YANGIAN:
            ok = len(g) == 3 and 1 <= g[0] <= n and 1 <= g[1] <= n and g[2] >= 1
        elif self.kind == TENSOR_YANGIAN:
            ok = (len(g) == 4 and 1 <= g[0] <= self.slots and 1 <= g[1] <= n
                  and 1 <= g[2] <= n and g[3] >= 1)
        else:
            ok = len(g) == 3 and 1 <= g[0] <= self.slots and 1 <= g[1] <= n and 1 <= g[2] <= n
        if not ok:
            raise IndexBoundError(f"generator {g!r} does not belong to {self!r}")

    def gen_degree(self, g: Gen, loop: bool = False) -> int:
        if self.kind == ENVELOPING:
            return 0 if loop else 1
        r = g[-1]
        return r - 1 if loop else r

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return Element(self, {(): gmpy2.mpq(1)})

    def scalar(self, c) -> "Element":
        c = rational(c)
        return Element(self, {(): c} if c else {})

    def gen(self, *index) -> "Element":
        """The generator with the given index tuple as an Element.

        ``T(i, j, r)`` style: for a Yangian pass ``(i, j, r)``; ``r = 0``
        yields the scalar ``delta_{i,j}``.
        """
        g = tuple(index)
        if self.kind == YANGIAN and len(g) == 3 and g[2] == 0:
            return self.scalar(1 if g[0] == g[1] else 0)
        if self.kind == TENSOR_YANGIAN and len(g) == 4 and g[3] == 0:
            return self.scalar(1 if g[1] == g[2] else 0)
        self.check_gen(g)
        return Element(self, {(g,): gmpy2.mpq(1)})

    T = gen

    def generators(self, max_level: int = 1) -> list:
        """All generators (as tuples) with level at most ``max_level``, sorted."""
        n = self.n
        rng = range(1, n + 1)
        if self.kind == YANGIAN:
            gens = [(i, j, r) for i in rng for j in rng for r in range(1, max_level + 1)]
        elif self.kind == TENSOR_YANGIAN:
            gens = [(s, i, j, r) for s in range(1, self.slots + 1) for i in rng for j in rng
                    for r in range(1, max_level + 1)]
        else:
            gens = [(s, i, j) for s in range(1, self.slots + 1) for i in rng for j in rng]
        return sorted(gens)

    # -- straightening oracles ----------------------------------------------

    def _yangian_pair(self, i, j, h, k, r, s, make) -> dict:
        """Right side of the RTT commutator rule as a normalized term dict."""
        out: dict = {}
        top = r + s - 1
        for t in range(min(r, s)):
            # T_{i,k}^{(top-t)} T_{h,j}^{(t)} - T_{i,k}^{(t)} T_{h,j}^{(top-t)}
            a, b = top - t, t
            for sign, (la, lb) in ((1, (a, b)), (-1, (b, a))):
                if la == 0 and i != k:
                    continue
                if lb == 0 and h != j:
                    continue
                word = tuple(x for x in (make(i, k, la) if la else None,
                                         make(h, j, lb) if lb else None) if x is not None)
                if len(word) == 2 and word[0] > word[1]:
                    _axpy(out, sign, self._mul_words(word[:1], word[1:]))
                else:
                    _add_into(out, word, gmpy2.mpq(sign))
        return out

    def _yangian_bracket(self, g: Gen, h: Gen) -> dict:
        (i, j, r), (hh, k, s) = g, h
        return self._yangian_pair(i, j, hh, k, r, s, lambda a, b, c: (a, b, c))

    def _tensor_yangian_bracket(self, g: Gen, h: Gen) -> dict:
        if g[0] != h[0]:
            return {}
        slot = g[0]
        (_, i, j, r), (_, hh, k, s) = g, h
        return self._yangian_pair(i, j, hh, k, r, s, lambda a, b, c: (slot, a, b, c))

    def _enveloping_bracket(self, g: Gen, h: Gen) -> dict:
        if g[0] != h[0]:
            return {}
        s, i, j = g
        _, hh, k = h
        out: dict = {}
        if hh == j:
            _add_into(out, ((s, i, k),), gmpy2.mpq(1))
        if i == k:
            _add_into(out, ((s, hh, j),), gmpy2.mpq(-1))
        return out

    def bracket_terms(self, g: Gen, h: Gen) -> dict:
        key = (g, h)
        res = self._bracket_cache.get(key)
        if res is None:
            res = self._bracket(g, h) if g != h else {}
            self._bracket_cache[key] = res
        return res

    # -- normal form engine -------------------------------------------------

    def _lmul_gen(self, g: Gen, m: Word) -> dict:
        """Normal form of ``g * m`` for an ordered word ``m``."""
        if not m or g <= m[0]:
            return {(g,) + m: gmpy2.mpq(1)}
        key = (g, m)
        res = self._lmul_cache.get(key)
        if res is not None:
            return res
        h, rest = m[0], m[1:]
        res = {}
        # g h rest = h (g rest) + [g, h] rest
        for w, c in self._lmul_gen(g, rest).items():
            _axpy(res, c, self._lmul_gen(h, w))
        for w, c in self.bracket_terms(g, h).items():
            _axpy(res, c, self._mul_words(w, rest))
        if len(res) > self.term_cap:
            raise TermCapExceeded(len(res), self.term_cap)
        self._lmul_cache[key] = res
        return res

    def _mul_words(self, a: Word, m: Word) -> dict:
        """Normal form of ``a * m`` for an arbitrary word ``a`` and ordered ``m``."""
        cur = {m: gmpy2.mpq(1)}
        for g in reversed(a):
            if len(cur) == 1:
                (w, c), = cur.items()
                nxt = self._lmul_gen(g, w)
                if c != 1:
                    nxt = {x: c * y for x, y in nxt.items()}
                cur = nxt
            else:
                nxt = {}
                for w, c in cur.items():
                    _axpy(nxt, c, self._lmul_gen(g, w))
                cur = nxt
        return cur

    def _fold_left(self, terms: dict, ordered: dict) -> dict:
        """Normal form of ``terms * ordered`` where ``ordered`` is normal."""
        out: dict = {}
        for a, ca in terms.items():
            for m, cm in ordered.items():
                _axpy(out, ca * cm, self._mul_words(a, m))
            if len(out) > self.term_cap:
                raise TermCapExceeded(len(out), self.term_cap)
        return out

    def is_ordered(self, word: Word) -> bool:
        return all(word[k] <= word[k + 1] for k in range(len(word) - 1))

    def normal_form(self, x: "Element") -> "Element":
        """Rewrite ``x`` onto ordered (PBW) monomials.

        Out-of-order adjacent pairs ``g h`` are replaced by ``h g + [g, h]``;
        every correction has strictly smaller canonical degree, so the
        rewriting terminates, and since ordered monomials form a basis the
        result does not depend on the rewriting strategy.
        """
        self._check(x)
        out: dict = {}
        for w, c in x.terms.items():
            if self.is_ordered(w):
                _add_into(out, w, c)
            else:
                _axpy(out, c, self._mul_words(w, ()))
        return Element(self, out)

    def mul(self, x: "Element", y: "Element") -> "Element":
        """Normal form of the product ``x * y``."""
        self._check(x)
        self._check(y)
        if not x.terms or not y.terms:
            return self.zero()
        yn = y.terms if y.is_normal() else self.normal_form(y).terms
        return Element(self, self._fold_left(x.terms, yn))

    def _check(self, x: "Element") -> None:
        if x.alg is not self and x.alg != self:
            raise ContextMismatch(f"element of {x.alg!r} used in {self!r}")

    # -- printing -----------------------------------------------------------

    def format_gen(self, g: Gen) -> str:
        if self.kind == YANGIAN:
            return f"T[{g[0]},{g[1]};{g[2]}]"
        if self.kind == TENSOR_YANGIAN:
            return f"@{g[0]}:T[{g[1]},{g[2]};{g[3]}]"
        return f"E[{g[0]};{g[1]},{g[2]}]"

    def monomial_key(self, word: Word):
        return (sum(self.gen_degree(g) for g in word), len(word), word)


_CONTEXTS: Dict[tuple, Algebra] = {}
_TERM_CAP = [DEFAULT_TERM_CAP]


def _context(kind: str, n: int, slots: int) -> Algebra:
    key = (kind, n, slots)
    alg = _CONTEXTS.get(key)
    if alg is None:
        alg = _CONTEXTS[key] = Algebra(kind, n, slots, _TERM_CAP[0])
    return alg


def set_term_cap(cap: int) -> int:
    """Set the term cap of every shared context; returns the previous value."""
    if cap < 1:
        raise ValueError("term cap must be positive")
    old = _TERM_CAP[0]
    _TERM_CAP[0] = cap
    for alg in _CONTEXTS.values():
        alg.term_cap = cap
    return old


def Yangian(n: int) -> Algebra:
    return _context(YANGIAN, n, 1)


def TensorYangian(n: int, k: int) -> Algebra:
    return _context(TENSOR_YANGIAN, n, k)


def TensorEnveloping(n: int, l: int) -> Algebra:
    return _context(ENVELOPING, n, l)


def compare_generators(alg: Algebra, g: Gen, h: Gen) -> int:
    """-1, 0 or 1 according to the PBW order of ``alg``."""
    alg.check_gen(g)
    alg.check_gen(h)
    return (g > h) - (g < h)


def straighten_pair(alg: Algebra, g: Gen, h: Gen) -> "Element":
    """The commutator ``[g, h] = gh - hg`` expressed in normal form."""
    alg.check_gen(g)
    alg.check_gen(h)
    if g == h:
        return alg.zero()
    if g < h:
        return -Element(alg, dict(alg.bracket_terms(h, g)))
    return Element(alg, dict(alg.bracket_terms(g, h)))


class Element:
    """Exact sparse linear combination of words in the generators of ``alg``.

    ``x + y``, ``x - y`` and scalar multiples are computed termwise.  The
    product ``x * y`` of two elements is returned in normal form; the raw
    concatenation product is :func:`elem_mul`.
    """

    __slots__ = ("alg", "terms", "_normal")

    def __init__(self, alg: Algebra, terms: dict, normal=None):
        self.alg = alg
        self.terms = terms
        self._normal = normal

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_normal(self) -> bool:
        if self._normal is None:
            self._normal = all(self.alg.is_ordered(w) for w in self.terms)
        return self._normal

    def items(self) -> Iterator[Tuple[Word, Rational]]:
        """Terms in monomial order (highest degree first)."""
        key = self.alg.monomial_key
        for w in sorted(self.terms, key=key, reverse=True):
            yield w, self.terms[w]

    def coefficient(self, word: Iterable) -> Rational:
        return self.terms.get(tuple(word), gmpy2.mpq(0))

    def scalar_part(self) -> Rational:
        return self.coefficient(())

    # -- arithmetic ---------------------------------------------------------

    def _same(self, other: "Element") -> None:
        if other.alg is not self.alg and other.alg != self.alg:
            raise ContextMismatch(f"{self.alg!r} vs {other.alg!r}")

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            self._same(other)
            return other
        return self.alg.scalar(other)

    def __add__(self, other) -> "Element":
        other = self._coerce(other)
        if not other.terms:
            return self
        out = dict(self.terms)
        for w, c in other.terms.items():
            _add_into(out, w, c)
        normal = self._normal and other._normal
        return Element(self.alg, out, normal or None)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element(self.alg, {w: -c for w, c in self.terms.items()}, self._normal)

    def __sub__(self, other) -> "Element":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Element":
        return self._coerce(other) - self

    def scale(self, c) -> "Element":
        c = rational(c)
        if not c:
            return self.alg.zero()
        return Element(self.alg, {w: c * v for w, v in self.terms.items()}, self._normal)

    def __mul__(self, other) -> "Element":
        if isinstance(other, Element):
            return self.alg.mul(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> "Element":
        return self.scale(other)

    def __truediv__(self, c) -> "Element":
        return self.scale(1 / rational(c))

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self.alg == other.alg and self.terms == other.terms
        if isinstance(other, (int, Rational)) or hasattr(other, "denominator"):
            c = rational(other)
            return self.terms == ({(): c} if c else {})
        return NotImplemented

    def __hash__(self):
        return hash((self.alg.key, frozenset(self.terms.items())))

    def normal_form(self) -> "Element":
        return self.alg.normal_form(self)

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"Element({format_element(self)!r})"


def elem_mul(x: Element, y: Element) -> Element:
    """Free (concatenation) product; the result is not normalized."""
    x._same(y)
    out: dict = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            _add_into(out, a + b, ca * cb)
    return Element(x.alg, out)


def elem_commutator(x: Element, y: Element) -> Element:
    """``xy - yx`` as a free (unnormalized) combination of words."""
    return elem_mul(x, y) - elem_mul(y, x)


def commutator(x: Element, y: Element) -> Element:
    """Normal form of ``xy - yx``."""
    return x * y - y * x


def normal_form(alg: Algebra, x: Element) -> Element:
    return alg.normal_form(x)


def degree(kind: str, x: Element):
    """Canonical or loop filtration degree; ``MINUS_INFINITY`` for zero."""
    if kind not in ("canonical", "loop"):
        raise ValueError(f"unknown filtration {kind!r}")
    if not x.terms:
        return MINUS_INFINITY
    loop = kind == "loop"
    alg = x.alg
    return max(sum(alg.gen_degree(g, loop) for g in w) for w in x.terms)


# -- text format ---------------------------------------------------------------

def format_coefficient(c) -> str:
    c = rational(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_element(x: Element) -> str:
    if not x.terms:
        return "0"
    parts = []
    for w, c in x.items():
        neg = c < 0
        a = -c if neg else c
        body = "*".join(x.alg.format_gen(g) for g in w)
        if not body:
            text = format_coefficient(a)
        elif a == 1:
            text = body
        else:
            text = f"{format_coefficient(a)}*{body}"
        if not parts:
            parts.append(f"-{text}" if neg else text)
        else:
            parts.append(f" - {text}" if neg else f" + {text}")
    return "".join(parts)


_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<num>\d+(?:/\d+)?)"
    r"|(?P<tgen>(?:@(?P<slot>\d+):)?T\[\s*(?P<ti>\d+)\s*,\s*(?P<tj>\d+)\s*;\s*(?P<tr>\d+)\s*\])"
    r"|(?P<egen>E\[\s*(?P<es>\d+)\s*;\s*(?P<ei>\d+)\s*,\s*(?P<ej>\d+)\s*\])"
    r"|(?P<op>[-+*]))"
)


def _tokens(text: str):
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:pos + 1]!r}", pos)
        start = m.start(m.lastgroup) if m.lastgroup else pos
        for name in ("num", "tgen", "egen", "op"):
            if m.group(name) is not None:
                yield name, m, m.start(name)
                break
        else:  # pragma: no cover - regex guarantees a group
            raise ParseError("bad token", start)
        pos = m.end()
    yield "end", None, end


def _gen_from_match(alg: Algebra, kind: str, m, pos: int) -> Gen:
    if kind == "tgen":
        i, j, r = int(m.group("ti")), int(m.group("tj")), int(m.group("tr"))
        slot = m.group("slot")
        if alg.kind == YANGIAN and slot is None:
            g = (i, j, r)
        elif alg.kind == TENSOR_YANGIAN and slot is not None:
            g = (int(slot), i, j, r)
        else:
            raise ParseError(f"generator not valid in {alg!r}", pos)
    else:
        if alg.kind != ENVELOPING:
            raise ParseError(f"enveloping generator not valid in {alg!r}", pos)
        g = (int(m.group("es")), int(m.group("ei")), int(m.group("ej")))
    try:
        alg.check_gen(g)
    except IndexBoundError as exc:
        raise IndexBoundError(f"{exc} (position {pos})") from None
    return g


def parse_element(text: str, alg: Algebra) -> Element:
    """Parse the element grammar (see README); the result is not normalized."""
    toks = list(_tokens(text))
    out: dict = {}
    k = 0
    first = True
    while True:
        kind, m, pos = toks[k]
        sign = 1
        if kind == "end":
            if first:
                raise ParseError("empty expression", pos)
            break
        if kind == "op" and m.group("op") in "+-":
            sign = -1 if m.group("op") == "-" else 1
            k += 1
            kind, m, pos = toks[k]
        elif not first:
            raise ParseError("expected '+' or '-'", pos)
        coeff = gmpy2.mpq(sign)
        word = []
        if kind == "num":
            coeff *= gmpy2.mpq(m.group("num"))
            k += 1
            kind, m, pos = toks[k]
            if kind == "op" and m.group("op") == "*":
                k += 1
                kind, m, pos = toks[k]
                if kind not in ("tgen", "egen"):
                    raise ParseError("expected generator after '*'", pos)
            else:
                _add_into(out, (), coeff)
                first = False
                continue
        if kind not in ("tgen", "egen"):
            raise ParseError("expected coefficient or generator", pos)
        while True:
            word.append(_gen_from_match(alg, kind, m, pos))
            k += 1
            kind, m, pos = toks[k]
            if kind == "op" and m.group("op") == "*":
                k += 1
                kind, m, pos = toks[k]
                if kind not in ("tgen", "egen"):
                    raise ParseError("expected generator after '*'", pos)
                continue
            break
        _add_into(out, tuple(word), coeff)
        first = False
    return Element(alg, out)
