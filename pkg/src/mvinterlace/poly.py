"""Sparse multivariate polynomials with exact integer coefficients.

Indeterminates come in two kinds: vertex-indexed ones such as ``x_a`` (a
type tag plus a vertex name) and ordinary ones such as ``u`` or ``v'``.
A monomial is stored as a sorted tuple of ``(Var, exponent)`` pairs and a
polynomial as a dict from monomials to nonzero ``int`` coefficients.

Text form::

    poly   := term (('+' | '-') term)*
    term   := integer ('*' factor)* | factor ('*' factor)*
    factor := name ('^' integer)?
    name   := tag | tag '_' vertex

Terms are printed by increasing quasi-degree, then by the monomial string.
"""

from __future__ import annotations

import re
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple, Union


class Var(NamedTuple):
    """An indeterminate. ``group`` is 0 for vertex-indexed, 1 for ordinary.

    Tuple order gives the fixed ordering of indeterminates used inside
    monomials: vertex-indexed first (by tag, then vertex), then ordinary.
    """

    group: int
    tag: str
    vertex: str

    @property
    def is_ordinary(self) -> bool:
        return self.group == 1

    def __str__(self) -> str:
        return self.tag if self.group else f"{self.tag}_{self.vertex}"


def var(tag: str, vertex: str | None = None) -> Var:
    if vertex is None:
        return Var(1, tag, "")
    return Var(0, tag, vertex)


Powers = tuple  # tuple[tuple[Var, int], ...], sorted by Var


class Monomial(NamedTuple):
    coeff: int
    powers: Powers

    def __str__(self) -> str:
        return _term_text(self.powers, self.coeff, first=True)


def quasi_degree(m: Monomial | Powers) -> int:
    """Total exponent of the vertex-indexed indeterminates of a monomial."""
    powers = m.powers if isinstance(m, Monomial) else m
    return sum(e for v, e in powers if v.group == 0)


def _mono_mul(m1: Powers, m2: Powers) -> Powers:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_text(powers: Powers) -> str:
    return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in powers)


def _term_text(powers: Powers, c: int, first: bool) -> str:
    mono = _mono_text(powers)
    a = abs(c)
    if not mono:
        body = str(a)
    elif a == 1:
        body = mono
    else:
        body = f"{a}*{mono}"
    if first:
        return ("-" if c < 0 else "") + body
    return (" - " if c < 0 else " + ") + body


Coercible = Union["MultiPoly", int]


class MultiPoly:
    """Immutable sparse polynomial in ``Z[vertex-indexed ∪ ordinary indeterminates]``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Powers, int] | None = None):
        t = {}
        if terms:
            for m, c in terms.items():
                if c:
                    t[m] = c
        self._terms = t
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> MultiPoly:
        # terms must already be free of zero coefficients
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> MultiPoly:
        return cls._wrap({(): c} if c else {})

    @classmethod
    def from_var(cls, v: Var, exp: int = 1) -> MultiPoly:
        return cls._wrap({((v, exp),): 1} if exp else {(): 1})

    @classmethod
    def monomial(cls, powers: Mapping[Var, int] | Iterable[tuple[Var, int]], coeff: int = 1) -> MultiPoly:
        items = powers.items() if isinstance(powers, Mapping) else powers
        d: dict[Var, int] = {}
        for v, e in items:
            if e < 0:
                raise ValueError(f"negative exponent for {v}")
            if e:
                d[v] = d.get(v, 0) + e
        return cls._wrap({tuple(sorted(d.items())): coeff} if coeff else {})

    @staticmethod
    def _coerce(x: Coercible) -> MultiPoly:
        if isinstance(x, MultiPoly):
            return x
        if isinstance(x, int):
            return MultiPoly.const(x)
        return NotImplemented

    # -- inspection ----------------------------------------------------

    @property
    def terms(self) -> Mapping[Powers, int]:
        return self._terms

    def monomials(self) -> Iterator[Monomial]:
        for m, c in self._terms.items():
            yield Monomial(c, m)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, powers: Powers | Mapping[Var, int]) -> int:
        if isinstance(powers, Mapping):
            powers = tuple(sorted((v, e) for v, e in powers.items() if e))
        return self._terms.get(powers, 0)

    def variables(self) -> frozenset[Var]:
        return frozenset(v for m in self._terms for v, _ in m)

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((), 0)

    def is_positive(self) -> bool:
        """True iff every stored coefficient is > 0 (vacuously true for 0)."""
        return all(c > 0 for c in self._terms.values())

    def max_quasi_degree(self) -> int:
        return max((quasi_degree(m) for m in self._terms), default=0)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: Coercible) -> MultiPoly:
        other = MultiPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        t = dict(a)
        for m, c in b.items():
            s = t.get(m, 0) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return MultiPoly._wrap(t)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Coercible) -> MultiPoly:
        other = MultiPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> MultiPoly:
        return (-self) + other

    def __mul__(self, other: Coercible) -> MultiPoly:
        other = MultiPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        t: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = t.get(m, 0) + c1 * c2
                if s:
                    t[m] = s
                else:
                    del t[m]
        return MultiPoly._wrap(t)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MultiPoly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_truncated(self, other: MultiPoly, d: int) -> MultiPoly:
        """``(self * other)↾d`` without forming products of quasi-degree > d."""
        left = [(m, c, quasi_degree(m)) for m, c in self._terms.items()]
        right = [(m, c, quasi_degree(m)) for m, c in other._terms.items()]
        t: dict = {}
        for m1, c1, q1 in left:
            if q1 > d:
                continue
            for m2, c2, q2 in right:
                if q1 + q2 > d:
                    continue
                m = _mono_mul(m1, m2)
                s = t.get(m, 0) + c1 * c2
                if s:
                    t[m] = s
                else:
                    del t[m]
        return MultiPoly._wrap(t)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- transformations ---------------------------------------------------

    def truncate(self, d: int) -> MultiPoly:
        """d-truncation: keep the monomials of quasi-degree at most ``d``."""
        return MultiPoly._wrap({m: c for m, c in self._terms.items() if quasi_degree(m) <= d})

    def substitute(self, s: Substitution | Mapping[Var, Coercible]) -> MultiPoly:
        if not isinstance(s, Substitution):
            s = Substitution(s)
        return s.apply(self)

    def map_monomials(self, f: Callable[[Powers, int], tuple[Powers, int]]) -> MultiPoly:
        t: dict = {}
        for m, c in self._terms.items():
            m2, c2 = f(m, c)
            s = t.get(m2, 0) + c2
            if s:
                t[m2] = s
            else:
                t.pop(m2, None)
        return MultiPoly._wrap(t)

    def shift_minus(self) -> MultiPoly:
        """Replace every indeterminate ``x`` by ``x - 1``."""
        return _shift(self, -1)

    def shift_plus(self) -> MultiPoly:
        """Replace every indeterminate ``x`` by ``x + 1``."""
        return _shift(self, 1)

    # -- text ---------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Powers, int]]:
        return sorted(self._terms.items(), key=lambda mc: (quasi_degree(mc[0]), _mono_text(mc[0])))

    def canonical_text(self) -> str:
        if not self._terms:
            return "0"
        items = self.sorted_terms()
        return "".join(_term_text(m, c, i == 0) for i, (m, c) in enumerate(items))

    __str__ = canonical_text

    def __repr__(self) -> str:
        return f"MultiPoly({self.canonical_text()!r})"


def _shift(p: MultiPoly, delta: int) -> MultiPoly:
    cache: dict[tuple[Var, int], MultiPoly] = {}
    out = MultiPoly()
    for m, c in p.terms.items():
        term = MultiPoly.const(c)
        for v, e in m:
            key = (v, e)
            if key not in cache:
                cache[key] = (MultiPoly.from_var(v) + delta) ** e
            term = term * cache[key]
        out = out + term
    return out


def shift_minus(p: MultiPoly) -> MultiPoly:
    return p.shift_minus()


def shift_plus(p: MultiPoly) -> MultiPoly:
    return p.shift_plus()


def truncate(p: MultiPoly, d: int) -> MultiPoly:
    return p.truncate(d)


def is_positive(p: MultiPoly) -> bool:
    return p.is_positive()


def canonical_text(p: MultiPoly) -> str:
    return p.canonical_text()


# -- substitutions --------------------------------------------------------

SELF = "@"


class Substitution:
    """Homomorphic replacement of indeterminates.

    ``rules`` maps single indeterminates to polynomials. ``families`` maps a
    type tag to a template applied to every vertex-indexed indeterminate of
    that tag; inside the template, vertex ``@`` stands for the vertex being
    replaced, so ``{"x": y_@}`` swaps in ``y_a`` for each ``x_a``. An exact
    rule wins over a family rule; unmentioned indeterminates are unchanged.
    """

    def __init__(
        self,
        rules: Mapping[Var, Coercible] | None = None,
        families: Mapping[str, Coercible] | None = None,
    ):
        self.rules = {v: MultiPoly._coerce(p) for v, p in (rules or {}).items()}
        self.families = {t: MultiPoly._coerce(p) for t, p in (families or {}).items()}
        self._images: dict[tuple[Var, int], tuple[int, Powers] | MultiPoly] = {}
        self._memo: dict[Powers, tuple[int, Powers, tuple]] = {}

    @classmethod
    def parse(cls, text: str) -> Substitution:
        """Parse ``"u:=u'-1; v:=v'-1; x_@:=1; y_@:=0"``."""
        rules, families = {}, {}
        for part in re.split(r"[;,]", text):
            part = part.strip()
            if not part:
                continue
            lhs, sep, rhs = part.partition(":=")
            if not sep:
                raise PolySyntaxError(f"expected 'name := poly' in {part!r}", 0)
            target = parse_poly(lhs.strip())
            vs = list(target.terms)
            if len(vs) != 1 or len(vs[0]) != 1 or vs[0][0][1] != 1 or target.terms[vs[0]] != 1:
                raise PolySyntaxError(f"left side {lhs.strip()!r} is not a single indeterminate", 0)
            v = vs[0][0][0]
            value = parse_poly(rhs.strip())
            if v.group == 0 and v.vertex == SELF:
                families[v.tag] = value
            else:
                rules[v] = value
        return cls(rules, families)

    def image(self, v: Var) -> MultiPoly:
        if v in self.rules:
            return self.rules[v]
        if v.group == 0 and v.tag in self.families:
            return _bind(self.families[v.tag], v.vertex)
        return MultiPoly.from_var(v)

    _MEMO_LIMIT = 200_000

    def _monomial_image(self, m: Powers) -> tuple[int, Powers, tuple]:
        """``(coeff, powers, factors)``: the single-term part of the image of
        ``m`` and the keys ``(v, e)`` whose images have several terms."""
        hit = self._memo.get(m)
        if hit is not None:
            return hit
        c = 1
        powers: dict[Var, int] = {}
        factors = []
        for key in m:
            rep = self._images.get(key)
            if rep is None:
                img = self.image(key[0]) ** key[1]
                if len(img) == 1:
                    (pw, k), = img.terms.items()
                    rep = (k, pw)
                else:
                    rep = img
                self._images[key] = rep
            if isinstance(rep, MultiPoly):
                factors.append(key)
                continue
            c *= rep[0]
            for w, f in rep[1]:
                powers[w] = powers.get(w, 0) + f
        hit = (c, tuple(sorted(powers.items())), tuple(factors))
        if len(self._memo) >= self._MEMO_LIMIT:
            self._memo.clear()
        self._memo[m] = hit
        return hit

    def apply(self, p: MultiPoly) -> MultiPoly:
        # Monomials are grouped by their multi-term factors so each distinct
        # product of those is formed once.
        groups: dict[tuple, dict] = {}
        for m, c in p.terms.items():
            k, mono, factors = self._monomial_image(m)
            c *= k
            if not c:
                continue
            bucket = groups.setdefault(factors, {})
            total = bucket.get(mono, 0) + c
            if total:
                bucket[mono] = total
            else:
                del bucket[mono]
        out = MultiPoly()
        for factors, bucket in groups.items():
            if not bucket:
                continue
            term = MultiPoly._wrap(bucket)
            for key in factors:
                term = term * self._images[key]
            out = out + term
        return out

    __call__ = apply

    def then(self, other: Substitution) -> Substitution:
        """Composite substitution: apply ``self`` first, then ``other``.

        Family rules of ``other`` for tags not handled by ``self`` are kept.
        """
        rules = {v: other.apply(p) for v, p in self.rules.items()}
        for v, p in other.rules.items():
            rules.setdefault(v, p)
        families = {t: other.apply(p) for t, p in self.families.items()}
        for t, p in other.families.items():
            families.setdefault(t, p)
        return Substitution(rules, families)


def _bind(template: MultiPoly, vertex: str) -> MultiPoly:
    def rebind(m: Powers, c: int):
        return tuple(sorted(((Var(0, v.tag, vertex) if v.group == 0 and v.vertex == SELF else v), e)
                            for v, e in m)), c
    return template.map_monomials(rebind)


def substitute(p: MultiPoly, s: Substitution | Mapping[Var, Coercible]) -> MultiPoly:
    return p.substitute(s)


# -- parsing ---------------------------------------------------------------


class PolySyntaxError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} (at position {pos})")
        self.pos = pos


_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9']*(?:_[A-Za-z0-9@][A-Za-z0-9_.~]*)?)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise PolySyntaxError(f"unexpected character {text[pos:].lstrip()[:1]!r}", pos)
        kind = mt.lastgroup
        toks.append((kind, mt.group(kind), mt.start(kind)))
        pos = mt.end()
    toks.append(("end", "", len(text)))
    return toks


def _name_to_var(name: str) -> Var:
    tag, sep, vertex = name.partition("_")
    return var(tag, vertex) if sep else var(tag)


def parse_poly(text: str) -> MultiPoly:
    """Inverse of :meth:`MultiPoly.canonical_text`; also accepts parentheses."""
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i]

    def take(kind=None, value=None):
        nonlocal i
        t = toks[i]
        if (kind and t[0] != kind) or (value and t[1] != value):
            want = value or kind
            raise PolySyntaxError(f"expected {want!r}, found {t[1] or 'end of input'!r}", t[2])
        i += 1
        return t

    def expr() -> MultiPoly:
        sign = 1
        if peek()[1] in "+-" and peek()[0] == "op":
            sign = -1 if take()[1] == "-" else 1
        acc = term() * sign
        while peek()[0] == "op" and peek()[1] in "+-":
            op = take()[1]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term() -> MultiPoly:
        acc = factor()
        while peek()[0] == "op" and peek()[1] == "*":
            take()
            acc = acc * factor()
        return acc

    def factor() -> MultiPoly:
        base = atom()
        if peek()[0] == "op" and peek()[1] == "^":
            take()
            base = base ** int(take("int")[1])
        return base

    def atom() -> MultiPoly:
        kind, value, pos = peek()
        if kind == "int":
            take()
            return MultiPoly.const(int(value))
        if kind == "name":
            take()
            return MultiPoly.from_var(_name_to_var(value))
        if kind == "op" and value == "(":
            take()
            inner = expr()
            take("op", ")")
            return inner
        raise PolySyntaxError(f"unexpected {value or 'end of input'!r}", pos)

    result = expr()
    if peek()[0] != "end":
        raise PolySyntaxError(f"trailing input {peek()[1]!r}", peek()[2])
    return result


P = parse_poly


def add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p + q


def mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q
