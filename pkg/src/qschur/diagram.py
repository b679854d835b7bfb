"""Diagram terms for the affine q-web and q-Schur categories.

A term is a tree of generators glued by vertical composition and horizontal
tensor product.  Objects are tuples of strands: a positive int is a black
strand of that thickness, a `Red` is a red strand carrying a parameter.

Traverse conventions: TraverseUp(a, u) has source (a, u) and target (u, a),
so the black strand moves right; TraverseDown(a, u) goes (u, a) -> (a, u).
TraverseDown is the generator carrying dot degree a.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .combinat import (
    PARMAT_FLAT,
    BasisLabel,
    MultiComposition,
    MultiTableau,
    enumerate_sst,
    is_rational_partition,
    sst_matrix,
)
from .ring import ONE, IntLaurent, RatFunc, q_pow, scalar


class DiagramError(ValueError):
    pass


# ---------------------------------------------------------------------------
# strands and objects


@dataclass(frozen=True)
class Red:
    u: object

    def __post_init__(self):
        u = scalar(self.u)
        if isinstance(u, RatFunc):
            u = u.simplify()
        if not u:
            raise DiagramError("red parameters must be nonzero")
        object.__setattr__(self, "u", u)

    def __str__(self):
        return f"u({self.u})"


def _check_object(obj) -> tuple:
    obj = tuple(obj)
    for s in obj:
        if isinstance(s, Red):
            continue
        if not isinstance(s, int) or isinstance(s, bool) or s < 1:
            raise DiagramError(f"bad strand {s!r}: thickness must be a positive integer")
    return obj


def black_weight(obj: Sequence) -> int:
    return sum(s for s in obj if not isinstance(s, Red))


def object_str(obj: Sequence) -> str:
    return "(" + ", ".join(str(s) for s in obj) + ")"


def strands_of(obj, us: Sequence | None = None) -> tuple:
    """Strand object of a composition or multicomposition.

    Component 0 sits left of the first red strand; component k sits between
    u_k and u_{k+1}.
    """
    if isinstance(obj, MultiComposition):
        if us is None or len(us) != obj.level:
            raise DiagramError(f"need {obj.level} red parameters for {obj}")
        out = list(obj.components[0])
        for u, comp in zip(us, obj.components[1:]):
            out.append(Red(u))
            out.extend(comp)
        return tuple(out)
    return _check_object(obj)


# ---------------------------------------------------------------------------
# terms


class Term:
    """Base class of diagram terms."""

    source: tuple
    target: tuple

    def __matmul__(self, other):  # f @ g = f o g
        return compose(self, other)

    def __str__(self):
        return to_sexpr(self)


_GEN_KINDS = ("merge", "split", "crosspos", "crossneg", "dot", "opendot", "tup", "tdown")


@dataclass(frozen=True, eq=True)
class Gen(Term):
    kind: str
    a: int
    b: int = 0
    u: object = None

    def __post_init__(self):
        if self.kind not in _GEN_KINDS:
            raise DiagramError(f"unknown generator {self.kind!r}")
        if self.a < 1 or (self.kind in ("merge", "split", "crosspos", "crossneg") and self.b < 1):
            raise DiagramError(f"thickness must be positive in {self.kind}({self.a}, {self.b})")
        if self.kind in ("tup", "tdown"):
            object.__setattr__(self, "u", Red(self.u).u)

    @cached_property
    def source(self) -> tuple:
        k, a, b = self.kind, self.a, self.b
        if k == "merge" or k in ("crosspos", "crossneg"):
            return (a, b)
        if k == "split":
            return (a + b,)
        if k in ("dot", "opendot"):
            return (a,)
        if k == "tup":
            return (a, Red(self.u))
        return (Red(self.u), a)

    @cached_property
    def target(self) -> tuple:
        k, a, b = self.kind, self.a, self.b
        if k == "merge":
            return (a + b,)
        if k == "split":
            return (a, b)
        if k in ("crosspos", "crossneg"):
            return (b, a)
        if k in ("dot", "opendot"):
            return (a,)
        if k == "tup":
            return (Red(self.u), a)
        return (a, Red(self.u))


@dataclass(frozen=True, eq=True)
class Identity(Term):
    obj: tuple

    def __post_init__(self):
        object.__setattr__(self, "obj", _check_object(self.obj))

    @property
    def source(self):
        return self.obj

    @property
    def target(self):
        return self.obj


@dataclass(frozen=True, eq=True)
class Compose(Term):
    """parts[0] o parts[1] o ... ; the last part is applied first."""

    parts: tuple

    @property
    def source(self):
        return self.parts[-1].source

    @property
    def target(self):
        return self.parts[0].target


@dataclass(frozen=True, eq=True)
class Tensor(Term):
    parts: tuple

    @cached_property
    def source(self):
        return tuple(s for p in self.parts for s in p.source)

    @cached_property
    def target(self):
        return tuple(s for p in self.parts for s in p.target)


# generator constructors ----------------------------------------------------


def Merge(a: int, b: int) -> Gen:
    return Gen("merge", a, b)


def Split(a: int, b: int) -> Gen:
    return Gen("split", a, b)


def CrossPos(a: int, b: int) -> Gen:
    return Gen("crosspos", a, b)


def CrossNeg(a: int, b: int) -> Gen:
    return Gen("crossneg", a, b)


def SolidDot(a: int) -> Gen:
    return Gen("dot", a)


def OpenDot(a: int) -> Gen:
    return Gen("opendot", a)


def TraverseUp(a: int, u) -> Gen:
    return Gen("tup", a, 0, u)


def TraverseDown(a: int, u) -> Gen:
    return Gen("tdown", a, 0, u)


def ident(*strands) -> Identity:
    return Identity(tuple(strands))


# smart gluing ----------------------------------------------------------------


def compose(*terms: Term) -> Term:
    """terms[0] o terms[1] o ...; identities are dropped, nesting flattened.

    No boundary check here; `validate` reports mismatches with a path.
    """
    if not terms:
        raise DiagramError("compose needs at least one term")
    parts: list = []
    for t in terms:
        if isinstance(t, Compose):
            parts.extend(t.parts)
        else:
            parts.append(t)
    kept = [p for p in parts if not isinstance(p, Identity)]
    if not kept:
        return parts[-1]
    if len(kept) == 1 and all(isinstance(p, Identity) and p.obj == kept[0].source for p in parts[parts.index(kept[0]) + 1 :]) and all(
        isinstance(p, Identity) and p.obj == kept[0].target for p in parts[: parts.index(kept[0])]
    ):
        return kept[0]
    # keep identities only if they would hide a mismatch
    if any(isinstance(p, Identity) for p in parts) and not _chain_ok(parts):
        return Compose(tuple(parts))
    return kept[0] if len(kept) == 1 else Compose(tuple(kept))


def _chain_ok(parts) -> bool:
    return all(parts[i].source == parts[i + 1].target for i in range(len(parts) - 1))


def tensor(*terms: Term) -> Term:
    parts: list = []
    for t in terms:
        if isinstance(t, Tensor):
            parts.extend(t.parts)
        elif isinstance(t, Identity) and not t.obj:
            continue
        else:
            parts.append(t)
    if not parts:
        return Identity(())
    # merge neighbouring identities
    merged: list = []
    for p in parts:
        if isinstance(p, Identity) and merged and isinstance(merged[-1], Identity):
            merged[-1] = Identity(merged[-1].obj + p.obj)
        else:
            merged.append(p)
    if len(merged) == 1:
        return merged[0]
    return Tensor(tuple(merged))


def pad(term: Term, left: Sequence = (), right: Sequence = ()) -> Term:
    return tensor(Identity(tuple(left)), term, Identity(tuple(right)))


# ---------------------------------------------------------------------------
# linear combinations


@dataclass(frozen=True)
class LinearCombination:
    """Formal sum of terms with common boundaries; scalars from `ring`."""

    terms: tuple  # of (scalar, Term)

    @staticmethod
    def of(term) -> "LinearCombination":
        if isinstance(term, LinearCombination):
            return term
        return LinearCombination(((ONE, term),))

    @property
    def source(self):
        return self.terms[0][1].source if self.terms else ()

    @property
    def target(self):
        return self.terms[0][1].target if self.terms else ()

    def __add__(self, other):
        other = LinearCombination.of(other)
        return LinearCombination(self.terms + other.terms)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-LinearCombination.of(other))

    def scale(self, c) -> "LinearCombination":
        c = scalar(c)
        return LinearCombination(tuple((c * x, t) for x, t in self.terms))

    def compose(self, other) -> "LinearCombination":
        """self o other, distributed."""
        other = LinearCombination.of(other)
        return LinearCombination(tuple((x * y, compose(s, t)) for x, s in self.terms for y, t in other.terms))

    def tensor(self, other) -> "LinearCombination":
        other = LinearCombination.of(other)
        return LinearCombination(tuple((x * y, tensor(s, t)) for x, s in self.terms for y, t in other.terms))

    def pad(self, left=(), right=()) -> "LinearCombination":
        return LinearCombination(tuple((x, pad(t, left, right)) for x, t in self.terms))

    def transpose(self) -> "LinearCombination":
        return LinearCombination(tuple((x, transpose(t)) for x, t in self.terms))

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        return to_sexpr(self)


def lincomb(*pairs) -> LinearCombination:
    return LinearCombination(tuple((scalar(c), t) for c, t in pairs))


# ---------------------------------------------------------------------------
# validation and slicing


def validate(term) -> tuple:
    """Return (source, target) or raise DiagramError naming the bad node."""
    if isinstance(term, LinearCombination):
        if not term.terms:
            raise DiagramError("empty linear combination has no boundary")
        st = None
        for i, (_, t) in enumerate(term.terms):
            b = _validate(t, f"sum[{i}]")
            if st is not None and b != st:
                raise DiagramError(f"boundary mismatch at sum[{i}]: {object_str(b[0])}->{object_str(b[1])} vs {object_str(st[0])}->{object_str(st[1])}")
            st = b
        return st
    return _validate(term, "root")


def _validate(t: Term, path: str) -> tuple:
    if isinstance(t, (Gen, Identity)):
        return t.source, t.target
    if isinstance(t, Compose):
        bounds = [_validate(p, f"{path}/compose[{i}]") for i, p in enumerate(t.parts)]
        for i in range(len(bounds) - 1):
            upper_src, lower_tgt = bounds[i][0], bounds[i + 1][1]
            if upper_src != lower_tgt:
                raise DiagramError(
                    f"boundary mismatch at {path}/compose[{i}]: source {object_str(upper_src)} "
                    f"!= target {object_str(lower_tgt)} of compose[{i + 1}]"
                )
        return bounds[-1][0], bounds[0][1]
    if isinstance(t, Tensor):
        bounds = [_validate(p, f"{path}/tensor[{i}]") for i, p in enumerate(t.parts)]
        return tuple(s for b in bounds for s in b[0]), tuple(s for b in bounds for s in b[1])
    raise DiagramError(f"not a diagram term at {path}: {t!r}")


@dataclass(frozen=True)
class Slice:
    """One generator with identity strands on both sides."""

    left: tuple
    gen: Gen
    right: tuple

    @property
    def offset(self) -> int:
        """Number of black variables left of the generator."""
        return black_weight(self.left)

    @property
    def source(self) -> tuple:
        return self.left + self.gen.source + self.right

    @property
    def target(self) -> tuple:
        return self.left + self.gen.target + self.right


def slices(term: Term) -> list:
    """Bottom-to-top list of slices; identities contribute nothing."""
    validate(term)
    out: list = []
    _slices(term, (), (), out)
    return out


def _slices(t: Term, left: tuple, right: tuple, out: list):
    if isinstance(t, Identity):
        return
    if isinstance(t, Gen):
        out.append(Slice(left, t, right))
        return
    if isinstance(t, Compose):
        for p in reversed(t.parts):
            _slices(p, left, right, out)
        return
    # (P0 x P1 x ... x Pn): apply right-most first, leaving the others at
    # their sources on the left and at their targets on the right.
    parts = t.parts
    for k in range(len(parts) - 1, -1, -1):
        lctx = left + tuple(s for p in parts[:k] for s in p.source)
        rctx = tuple(s for p in parts[k + 1 :] for s in p.target) + right
        _slices(parts[k], lctx, rctx, out)


# ---------------------------------------------------------------------------
# derived constructors


def omega(a: int, r: int) -> Term:
    """omega_{a,r}: split off |r| strands, put a solid (r>0) or open (r<0) dot, merge back."""
    if abs(r) > a:
        raise DiagramError(f"dot out of range: omega_{{{a},{r}}} needs |r| <= {a}")
    if r == 0:
        return Identity((a,))
    if r == a:
        return SolidDot(a)
    if r == -a:
        return OpenDot(a)
    if r > 0:
        return compose(Merge(r, a - r), tensor(SolidDot(r), Identity((a - r,))), Split(r, a - r))
    s = -r
    return compose(Merge(a - s, s), tensor(Identity((a - s,)), OpenDot(s)), Split(a - s, s))


def omega_packet(a: int, nu: Sequence[int]) -> Term:
    """omega_{a,nu} = stacked omega_{a,nu_k}, nu_1 at the bottom."""
    nu = tuple(nu)
    for r in nu:
        if abs(r) > a:
            raise DiagramError(f"dot out of range: entry {r} on a strand of thickness {a}")
    if not nu:
        return Identity((a,))
    return compose(*[omega(a, r) for r in reversed(nu)])


def g_polynomial(r: int, u) -> LinearCombination:
    """g_r(u) = sum_t (-u)^t q^{-t(r-t)} omega_{r,r-t}."""
    u = scalar(u)
    terms = []
    for t in range(r + 1):
        c = (-u) ** t * q_pow(-t * (r - t)) if t else ONE
        terms.append((c, omega(r, r - t)))
    return LinearCombination(tuple(terms))


def g_diagram(r: int, us: Sequence) -> LinearCombination:
    """Product of g_r(u) over u in us, stacked in order (first u lowest)."""
    if r < 1:
        raise DiagramError("g_diagram needs r >= 1")
    out = LinearCombination.of(Identity((r,)))
    for u in us:
        out = g_polynomial(r, u).compose(out)
    return out


def split_chain(parts: Sequence[int]) -> Term:
    """One strand of thickness sum(parts) split into `parts` (left to right)."""
    parts = tuple(parts)
    if len(parts) <= 1:
        return Identity(parts)
    head = sum(parts[:-1])
    return compose(tensor(split_chain(parts[:-1]), Identity((parts[-1],))), Split(head, parts[-1]))


def merge_chain(parts: Sequence[int]) -> Term:
    parts = tuple(parts)
    if len(parts) <= 1:
        return Identity(parts)
    head = sum(parts[:-1])
    return compose(Merge(head, parts[-1]), tensor(merge_chain(parts[:-1]), Identity((parts[-1],))))


# ---------------------------------------------------------------------------
# elementary ribbons


@dataclass(frozen=True)
class ElementaryRibbon:
    """Basis element of Hom(source, target) labelled by `label`.

    Objects are compositions (black only) or multicompositions; `us` gives
    the red parameters of a multicomposition, one per component after the
    zeroth.
    """

    source: object
    target: object
    label: BasisLabel
    us: tuple = field(default=())

    def source_strands(self) -> tuple:
        return strands_of(self.source, self.us if isinstance(self.source, MultiComposition) else None)

    def target_strands(self) -> tuple:
        return strands_of(self.target, self.us if isinstance(self.target, MultiComposition) else None)


def _parts_with_blocks(obj) -> list:
    """(component, thickness) of each black part, left to right."""
    if isinstance(obj, MultiComposition):
        return [(k, a) for k, comp in enumerate(obj.components) for a in comp]
    return [(0, a) for a in obj]


def _sequence(obj, us) -> list:
    """Items ('red', k, u) and ('part', j, thickness) in strand order."""
    items, j = [], 0
    if isinstance(obj, MultiComposition):
        for k, comp in enumerate(obj.components):
            if k:
                items.append(("red", k, us[k - 1]))
            for a in comp:
                items.append(("part", j, a))
                j += 1
    else:
        for a in obj:
            items.append(("part", j, a))
            j += 1
    return items


def elaborate(ribbon: ElementaryRibbon) -> Term:
    """Canonical chicken-foot term of an elementary ribbon.

    Splits at the bottom (legs in row order), dot packets just above them,
    then an insertion sort of legs and red strands realizing the leg
    permutation, then merges.
    """
    A, P = ribbon.label.A, ribbon.label.P
    src_parts = _parts_with_blocks(ribbon.source)
    tgt_parts = _parts_with_blocks(ribbon.target)
    if len(A) != len(tgt_parts) or any(len(r) != len(src_parts) for r in A):
        raise DiagramError("label shape does not match the ribbon's objects")
    for j, (_, a) in enumerate(src_parts):
        if sum(A[i][j] for i in range(len(A))) != a:
            raise DiagramError(f"column {j} of the label does not sum to {a}")
    for i, (_, a) in enumerate(tgt_parts):
        if sum(A[i]) != a:
            raise DiagramError(f"row {i} of the label does not sum to {a}")
    us = tuple(ribbon.us)
    bottom = _sequence(ribbon.source, us)
    top = _sequence(ribbon.target, us)
    if [x for x in bottom if x[0] == "red"] != [x for x in top if x[0] == "red"]:
        raise DiagramError("source and target carry different red strands")

    def strand(item):
        if item[0] == "red":
            return Red(item[2])
        return item[2]

    # bottom layer: splits then packets
    split_layer, packet_layer, seq = [], [], []
    for item in bottom:
        if item[0] == "red":
            split_layer.append(Identity((Red(item[2]),)))
            packet_layer.append(Identity((Red(item[2]),)))
            seq.append(item)
            continue
        j = item[1]
        legs = [(i, j) for i in range(len(A)) if A[i][j]]
        split_layer.append(split_chain([A[i][j] for i, j in legs]))
        for i, jj in legs:
            a = A[i][jj]
            if P[i][jj] and not is_rational_partition(P[i][jj], a):
                raise DiagramError(f"packet {P[i][jj]} is not a rational partition of thickness {a}")
            packet_layer.append(omega_packet(a, P[i][jj]))
            seq.append(("leg", (i, jj), a))

    # target ranks
    rank, pos = {}, 0
    for item in top:
        if item[0] == "red":
            rank[("red", item[1])] = pos
            pos += 1
            continue
        i = item[1]
        for j in range(len(src_parts)):
            if A[i][j]:
                rank[("leg", (i, j))] = pos
                pos += 1

    def key(item):
        return (item[0], item[1]) if item[0] == "leg" else ("red", item[1])

    def th(item):
        return Red(item[2]) if item[0] == "red" else item[2]

    middle = []
    seq = list(seq)
    for idx in range(1, len(seq)):
        k = idx
        while k > 0 and rank[key(seq[k - 1])] > rank[key(seq[k])]:
            x, y = seq[k - 1], seq[k]
            if x[0] == "red" and y[0] == "red":
                raise DiagramError("red strands cannot cross")
            if x[0] == "leg" and y[0] == "leg":
                g = CrossPos(x[2], y[2])
            elif x[0] == "red":
                g = TraverseDown(y[2], x[2])  # leg moves left
            else:
                g = TraverseUp(x[2], y[2])  # leg moves right
            left = tuple(th(z) for z in seq[: k - 1])
            right = tuple(th(z) for z in seq[k + 1 :])
            middle.append(pad(g, left, right))
            seq[k - 1], seq[k] = y, x
            k -= 1

    merge_layer = []
    for item in top:
        if item[0] == "red":
            merge_layer.append(Identity((Red(item[2]),)))
            continue
        i = item[1]
        merge_layer.append(merge_chain([A[i][j] for j in range(len(src_parts)) if A[i][j]]))

    layers = [tensor(*merge_layer)] + list(reversed(middle)) + [tensor(*packet_layer), tensor(*split_layer)]
    out = compose(*layers)
    src, tgt = validate(out)
    assert src == ribbon.source_strands() and tgt == ribbon.target_strands(), (src, tgt)
    return out


def sst_to_ribbon(T: MultiTableau, lam: MultiComposition, nu: MultiComposition, us: Sequence = ()) -> ElementaryRibbon:
    """[T]: lam -> nu for a semistandard T of shape lam and type nu."""
    if T.shape != lam:
        raise DiagramError("tableau shape differs from lambda")
    if T not in enumerate_sst(lam, nu):
        raise DiagramError(f"{T} is not a semistandard tableau of type {nu}")
    A = sst_matrix(T, nu)
    P = tuple(tuple(() for _ in row) for row in A)
    return ElementaryRibbon(lam, nu, BasisLabel(A, P, PARMAT_FLAT), tuple(us))


# ---------------------------------------------------------------------------
# flip and degrees


def transpose(term):
    """The flip anti-involution: rotate the picture about a horizontal axis."""
    if isinstance(term, LinearCombination):
        return term.transpose()
    if isinstance(term, Identity):
        return term
    if isinstance(term, Gen):
        k = term.kind
        if k == "merge":
            return Split(term.a, term.b)
        if k == "split":
            return Merge(term.a, term.b)
        if k == "crosspos":
            return CrossPos(term.b, term.a)
        if k == "crossneg":
            return CrossNeg(term.b, term.a)
        if k == "tup":
            return TraverseDown(term.a, term.u)
        if k == "tdown":
            return TraverseUp(term.a, term.u)
        return term
    if isinstance(term, Compose):
        return Compose(tuple(transpose(p) for p in reversed(term.parts)))
    if isinstance(term, Tensor):
        return Tensor(tuple(transpose(p) for p in term.parts))
    raise DiagramError(f"cannot transpose {term!r}")


@dataclass(frozen=True)
class DegreeReport:
    crossing_degree: int
    dot_degree: int

    def to_json(self):
        return {"crossing_degree": self.crossing_degree, "dot_degree": self.dot_degree}


def degrees(term: Term) -> DegreeReport:
    cross = dots = 0
    stack = [term]
    while stack:
        t = stack.pop()
        if isinstance(t, Gen):
            if t.kind in ("crosspos", "crossneg"):
                cross += t.a + t.b
            elif t.kind in ("dot", "opendot", "tdown"):
                dots += t.a
        elif isinstance(t, (Compose, Tensor)):
            stack.extend(t.parts)
    return DegreeReport(cross, dots)


# ---------------------------------------------------------------------------
# s-expressions and JSON


def _strand_sexpr(s) -> str:
    return f'(red "{s.u}")' if isinstance(s, Red) else str(s)


def to_sexpr(term) -> str:
    if isinstance(term, LinearCombination):
        inner = " ".join(f'("{c}" {to_sexpr(t)})' for c, t in term.terms)
        return f"(sum {inner})" if inner else "(sum)"
    if isinstance(term, Identity):
        return "(id" + "".join(" " + _strand_sexpr(s) for s in term.obj) + ")"
    if isinstance(term, Gen):
        if term.kind in ("dot", "opendot"):
            return f"({term.kind} {term.a})"
        if term.kind in ("tup", "tdown"):
            return f'({term.kind} {term.a} "{term.u}")'
        return f"({term.kind} {term.a} {term.b})"
    if isinstance(term, Compose):
        return "(compose " + " ".join(to_sexpr(p) for p in term.parts) + ")"
    if isinstance(term, Tensor):
        return "(tensor " + " ".join(to_sexpr(p) for p in term.parts) + ")"
    raise DiagramError(f"not a term: {term!r}")


_TOKEN = re.compile(r'\s*(?:(\()|(\))|"([^"]*)"|([^\s()"]+))')


def _tokenize(text: str) -> list:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise DiagramError(f"cannot tokenize at {text[pos:pos + 20]!r}")
        pos = m.end()
        if m.group(1):
            out.append("(")
        elif m.group(2):
            out.append(")")
        elif m.group(3) is not None:
            out.append(("str", m.group(3)))
        elif m.group(4):
            out.append(m.group(4))
    return out


def _read(tokens: list, i: int):
    tok = tokens[i]
    if tok == "(":
        lst, i = [], i + 1
        while i < len(tokens) and tokens[i] != ")":
            x, i = _read(tokens, i)
            lst.append(x)
        if i >= len(tokens):
            raise DiagramError("unbalanced parentheses")
        return lst, i + 1
    if tok == ")":
        raise DiagramError("unexpected ')'")
    return tok, i + 1


def _build(x):
    if not isinstance(x, list) or not x or not isinstance(x[0], str):
        raise DiagramError(f"bad s-expression node {x!r}")
    head, args = x[0], x[1:]

    def num(v):
        try:
            return int(v)
        except (TypeError, ValueError):
            raise DiagramError(f"expected an integer, got {v!r}") from None

    def text(v):
        if isinstance(v, tuple) and v[0] == "str":
            return v[1]
        if isinstance(v, str):
            return v
        raise DiagramError(f"expected a scalar, got {v!r}")

    if head == "id":
        obj = []
        for a in args:
            if isinstance(a, list):
                if len(a) != 2 or a[0] != "red":
                    raise DiagramError(f"bad strand {a!r}")
                obj.append(Red(scalar(text(a[1]))))
            else:
                obj.append(num(a))
        return Identity(tuple(obj))
    if head in ("merge", "split", "crosspos", "crossneg"):
        return Gen(head, num(args[0]), num(args[1]))
    if head in ("dot", "opendot"):
        return Gen(head, num(args[0]))
    if head in ("tup", "tdown"):
        return Gen(head, num(args[0]), 0, scalar(text(args[1])))
    if head == "compose":
        return Compose(tuple(_build(a) for a in args)) if len(args) > 1 else _build(args[0])
    if head == "tensor":
        return Tensor(tuple(_build(a) for a in args)) if len(args) > 1 else _build(args[0])
    if head == "sum":
        return LinearCombination(tuple((scalar(text(c)), _build(t)) for c, t in args))
    raise DiagramError(f"unknown head {head!r}")


def parse_sexpr(text: str):
    tokens = _tokenize(text)
    if not tokens:
        raise DiagramError("empty s-expression")
    x, i = _read(tokens, 0)
    if i != len(tokens):
        raise DiagramError("trailing input after s-expression")
    return _build(x)


def to_json(term):
    if isinstance(term, LinearCombination):
        return {"sum": [{"coeff": str(c), "term": to_json(t)} for c, t in term.terms]}
    if isinstance(term, Identity):
        return {"id": [{"red": str(s.u)} if isinstance(s, Red) else s for s in term.obj]}
    if isinstance(term, Gen):
        d = {"gen": term.kind, "a": term.a}
        if term.kind in ("merge", "split", "crosspos", "crossneg"):
            d["b"] = term.b
        if term.kind in ("tup", "tdown"):
            d["u"] = str(term.u)
        return d
    if isinstance(term, Compose):
        return {"compose": [to_json(p) for p in term.parts]}
    if isinstance(term, Tensor):
        return {"tensor": [to_json(p) for p in term.parts]}
    raise DiagramError(f"not a term: {term!r}")


def from_json(data):
    if "sum" in data:
        return LinearCombination(tuple((scalar(d["coeff"]), from_json(d["term"])) for d in data["sum"]))
    if "id" in data:
        return Identity(tuple(Red(scalar(s["red"])) if isinstance(s, dict) else int(s) for s in data["id"]))
    if "gen" in data:
        return Gen(data["gen"], int(data["a"]), int(data.get("b", 0)), scalar(data["u"]) if "u" in data else None)
    if "compose" in data:
        return Compose(tuple(from_json(p) for p in data["compose"]))
    if "tensor" in data:
        return Tensor(tuple(from_json(p) for p in data["tensor"]))
    raise DiagramError(f"bad JSON term {data!r}")


def terms_equal_structurally(a, b) -> bool:
    return to_sexpr(a) == to_sexpr(b)


__all__ = [
    "Red",
    "Term",
    "Gen",
    "Identity",
    "Compose",
    "Tensor",
    "LinearCombination",
    "Merge",
    "Split",
    "CrossPos",
    "CrossNeg",
    "SolidDot",
    "OpenDot",
    "TraverseUp",
    "TraverseDown",
    "compose",
    "tensor",
    "pad",
    "lincomb",
    "validate",
    "slices",
    "omega",
    "omega_packet",
    "g_polynomial",
    "g_diagram",
    "ElementaryRibbon",
    "elaborate",
    "sst_to_ribbon",
    "transpose",
    "degrees",
    "DegreeReport",
    "to_sexpr",
    "parse_sexpr",
    "to_json",
    "from_json",
    "strands_of",
    "DiagramError",
]
