"""Normal forms of iterated localizations and classification from thread sets.

For the proved spectrum shapes (dimension 0, dimension 1 with a unique
maximal prime, dimension 2 with unique maximal and minimal primes) the
collection of thread sets pins down a unique normal form, and the
classifiers reconstruct the form from the family alone.  Outside these
shapes the engine never guesses: ``normal_form`` returns ``Unresolved``
carrying the canonical reduction of the tuple.

Equal thread sets is a *sufficient* condition for two tuples to name
isomorphic localizations; distinct thread sets are not claimed to separate
them.  See the README caveat.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Inconsistent, ShapeMismatch
from .families import ChainFamily, thread_sets
from .poset import Poset, bits
from .tuples import SubsetTuple, ZERO_TUPLE, canonical

DIM0 = "Dim0"
DIM1_IRREDUCIBLE = "Dim1Irreducible"
DIM2_UNIQUE_EXTREMES = "Dim2UniqueExtremes"
FINITE = "Finite"
OTHER = "Other"

SHAPES = (DIM0, DIM1_IRREDUCIBLE, DIM2_UNIQUE_EXTREMES, FINITE, OTHER)

#: Payload field names per form tag, in payload order.
PAYLOAD_KEYS = {
    "Identity": (),
    "Zero": (),
    "D0Smash": ("A",),
    "D1_Lambda": ("C",),
    "D1_TopSmash": ("C",),
    "D1_Mixed": ("C", "D"),
    "D2_Form1": ("A1",),
    "D2_Form2": ("A1",),
    "D2_Form3": ("A1",),
    "D2_Form4": ("A1",),
    "D2_Form5": ("A1", "B1"),
    "D2_Form6": ("A1", "B1"),
    "D2_Form7": ("A1", "B1"),
    "D2_Form8": ("A1", "B1"),
    "D2_Form9": ("A1", "B1"),
    "D2_Form10": ("A1", "B1", "C1"),
    "D2_Form11": ("A1", "B1", "C1"),
}


@dataclass(frozen=True)
class NormalForm:
    """Tagged canonical shape of an iterated localization.

    ``payload`` holds the defining subsets as bitmasks, one per entry of
    ``PAYLOAD_KEYS[tag]``; for ``Unresolved`` it holds the canonical tuple
    instead.
    """

    tag: str
    payload: tuple[int, ...] = ()

    def as_tuple(self, P: Poset) -> SubsetTuple:
        """The defining subset tuple of this form over ``P``."""
        if self.tag == "Identity":
            raise ValueError("the identity localization has no subset tuple")
        if self.tag == "Zero":
            return ZERO_TUPLE
        if self.tag == "Unresolved":
            return self.payload
        if self.tag == "D0Smash":
            return (self.payload[0],)
        if self.tag.startswith("D1_"):
            t = _unique(P.maximal_elements(), P, "maximal")
            if self.tag == "D1_Lambda":
                return (self.payload[0],)
            if self.tag == "D1_TopSmash":
                return (t | self.payload[0],)
            c, d = self.payload
            return (t | c, d)
        t = _unique(P.maximal_elements(), P, "maximal")
        m = _unique(P.minimal_elements(), P, "minimal")
        p = self.payload
        shapes = {
            "D2_Form1": lambda: (p[0],),
            "D2_Form2": lambda: (t | p[0],),
            "D2_Form3": lambda: (p[0] | m,),
            "D2_Form4": lambda: (t | p[0] | m,),
            "D2_Form5": lambda: (t | p[0], p[1]),
            "D2_Form6": lambda: (p[0], p[1] | m),
            "D2_Form7": lambda: (t | p[0], p[1] | m),
            "D2_Form8": lambda: (t | p[0], t | p[1] | m),
            "D2_Form9": lambda: (t | p[0] | m, p[1] | m),
            "D2_Form10": lambda: (t | p[0], p[1], p[2] | m),
            "D2_Form11": lambda: (t | p[0], t | p[1] | m, p[2] | m),
        }
        return shapes[self.tag]()

    def describe(self, P: Poset) -> str:
        if not self.payload or self.tag == "Identity":
            return self.tag
        if self.tag == "Unresolved":
            inner = ", ".join("{%s}" % ", ".join(P.labels(m))
                              for m in self.payload)
            return f"Unresolved({inner})"
        fields = ", ".join(
            "%s={%s}" % (k, ", ".join(P.labels(m)))
            for k, m in zip(PAYLOAD_KEYS[self.tag], self.payload))
        return f"{self.tag}({fields})"


IDENTITY = NormalForm("Identity")
ZERO = NormalForm("Zero")


def _unique(mask: int, P: Poset, kind: str) -> int:
    if mask.bit_count() != 1:
        raise ShapeMismatch(f"poset does not have a unique {kind} element")
    return mask


def shape_of(P: Poset) -> str:
    """Which proved classification applies; ``Finite`` is the fallback."""
    dim = P.dimension()
    if dim == 0:
        return DIM0
    if dim == 1 and P.maximal_elements().bit_count() == 1:
        return DIM1_IRREDUCIBLE
    if (dim == 2 and P.maximal_elements().bit_count() == 1
            and P.minimal_elements().bit_count() == 1):
        return DIM2_UNIQUE_EXTREMES
    return FINITE


def _require_shape(P: Poset, shape: str) -> None:
    if shape_of(P) != shape:
        raise ShapeMismatch(f"poset has shape {shape_of(P)}, expected {shape}")


def normal_form_dim0(P: Poset, parts: SubsetTuple) -> NormalForm:
    """Dimension 0: the composite smashes down to the intersection."""
    _require_shape(P, DIM0)
    meet = P.full
    for part in parts:
        meet &= P.check_subset(part)
    return NormalForm("D0Smash", (meet,)) if meet else ZERO


def classify_dim0(P: Poset, F: ChainFamily) -> NormalForm:
    """Dimension 0 from the family: all thread sets are singletons."""
    _require_shape(P, DIM0)
    if F.is_empty():
        return ZERO
    meet = 0
    for g in F.generators:
        if g.bit_count() != 1:
            raise Inconsistent("non-singleton thread set on a discrete poset")
        meet |= g
    return NormalForm("D0Smash", (meet,))


def classify_dim1(P: Poset, F: ChainFamily) -> NormalForm:
    """Dimension 1, unique maximal prime: one of three forms.

    Writing t for the top and reading off C = {q != t : {q} in F} and
    D = {q != t : {q, t} in F}: membership of {t} forces the smashing form
    on {t} | C; otherwise C == D is the colocal form on C and C < D the
    mixed composite ({t} | C, D).
    """
    _require_shape(P, DIM1_IRREDUCIBLE)
    if F.is_empty():
        return ZERO
    t = P.maximal_elements()
    rest = P.full & ~t
    c = _stratum(F, rest, 0)
    if F.member(t):
        form = NormalForm("D1_TopSmash", (c,))
    else:
        d = _stratum(F, rest, t)
        if c == d:
            form = NormalForm("D1_Lambda", (c,))
        elif c | d == d:
            form = NormalForm("D1_Mixed", (c, d))
        else:
            raise Inconsistent("singleton thread sets escape the {q, t} ones")
    return _verified(P, F, form)


def classify_dim2(P: Poset, F: ChainFamily) -> NormalForm:
    """Dimension 2, unique extremes t > ... > m: one of eleven forms.

    The decision tree follows the characterizations by membership of {t},
    {m}, {t, m} and the strata D = {p : {m, p} in F}, E = {p : {t, p} in F},
    F0 = {p : {p} in F}, G = {p : {t, m, p} in F} over the length-1 primes.
    The reconstructed form is re-expanded through its defining tuple and
    checked against F; a mismatch means no form realizes the family.
    """
    _require_shape(P, DIM2_UNIQUE_EXTREMES)
    if F.is_empty():
        return ZERO
    t = P.maximal_elements()
    m = P.minimal_elements()
    mids = P.full & ~t & ~m
    f0 = _stratum(F, mids, 0)
    d = _stratum(F, mids, m)
    e = _stratum(F, mids, t)
    g = _stratum(F, mids, t | m)
    has_t, has_m, has_tm = F.member(t), F.member(m), F.member(t | m)

    if has_t and has_m:
        form = NormalForm("D2_Form4", (f0,))
    elif has_t:
        if f0 == d:
            form = NormalForm("D2_Form2", (f0,))
        elif f0 | d == d:
            form = NormalForm("D2_Form8", (d, f0))
        else:
            raise Inconsistent("strata of the family fit no form")
    elif has_m:
        if f0 == e:
            form = NormalForm("D2_Form3", (f0,))
        elif f0 | e == e:
            form = NormalForm("D2_Form9", (f0, e))
        else:
            raise Inconsistent("strata of the family fit no form")
    elif has_tm:
        if d & e == f0:
            form = NormalForm("D2_Form7", (d, e))
        elif f0 | (d & e) == d & e:
            form = NormalForm("D2_Form11", (d, f0, e))
        else:
            raise Inconsistent("strata of the family fit no form")
    elif f0 == d == e == g:
        form = NormalForm("D2_Form1", (f0,))
    elif f0 == d and e == g and e | d == e and e != d:
        form = NormalForm("D2_Form5", (f0, e))
    elif f0 == e and d == g and d | e == d and d != e:
        form = NormalForm("D2_Form6", (d, f0))
    elif d | g == g and d != g and e | g == g and e != g and d & e == f0:
        form = NormalForm("D2_Form10", (d, g, e))
    else:
        raise Inconsistent("strata of the family fit no form")
    return _verified(P, F, form)


def _stratum(F: ChainFamily, candidates: int, companions: int) -> int:
    out = 0
    for p in bits(candidates):
        if F.member((1 << p) | companions):
            out |= 1 << p
    return out


def _verified(P: Poset, F: ChainFamily, form: NormalForm) -> NormalForm:
    if thread_sets(P, form.as_tuple(P)) != F:
        raise Inconsistent(
            f"family is not realized by any normal form (closest: {form.tag})")
    return form


def normal_form(P: Poset, parts: SubsetTuple) -> NormalForm:
    """Dispatch on the poset shape; never guesses beyond the proved cases."""
    reduced = canonical(P, parts)
    if reduced == ZERO_TUPLE:
        return ZERO
    shape = shape_of(P)
    if shape == DIM0:
        return classify_dim0(P, thread_sets(P, parts))
    if shape == DIM1_IRREDUCIBLE:
        return classify_dim1(P, thread_sets(P, parts))
    if shape == DIM2_UNIQUE_EXTREMES:
        return classify_dim2(P, thread_sets(P, parts))
    return NormalForm("Unresolved", reduced)


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def form_instances(P: Poset) -> list[NormalForm]:
    """Every syntactic normal-form instance valid over ``P``.

    Enumerates payload subsets over the appropriate stratum with the side
    conditions enforced (proper inclusions where required, non-empty
    payloads where emptiness would degenerate to Zero).
    """
    shape = shape_of(P)
    out: list[NormalForm] = []
    if shape == DIM0:
        for a in _submasks(P.full):
            if a:
                out.append(NormalForm("D0Smash", (a,)))
    elif shape == DIM1_IRREDUCIBLE:
        rest = P.full & ~P.maximal_elements()
        for c in _submasks(rest):
            if c:
                out.append(NormalForm("D1_Lambda", (c,)))
            out.append(NormalForm("D1_TopSmash", (c,)))
            for d in _submasks(rest):
                if c | d == d and c != d:
                    out.append(NormalForm("D1_Mixed", (c, d)))
    elif shape == DIM2_UNIQUE_EXTREMES:
        mids = P.full & ~P.maximal_elements() & ~P.minimal_elements()
        subs = list(_submasks(mids))
        for a in subs:
            if a:
                out.append(NormalForm("D2_Form1", (a,)))
            out.append(NormalForm("D2_Form2", (a,)))
            out.append(NormalForm("D2_Form3", (a,)))
            out.append(NormalForm("D2_Form4", (a,)))
        for a in subs:
            for b in subs:
                proper = a | b == b and a != b
                if proper:
                    out.append(NormalForm("D2_Form5", (a, b)))
                    out.append(NormalForm("D2_Form6", (b, a)))
                    out.append(NormalForm("D2_Form8", (b, a)))
                    out.append(NormalForm("D2_Form9", (a, b)))
                out.append(NormalForm("D2_Form7", (a, b)))
        for b in subs:
            for a in subs:
                if not (a | b == b and a != b):
                    continue
                for c in subs:
                    if c | b == b and c != b:
                        out.append(NormalForm("D2_Form10", (a, b, c)))
        for a in subs:
            for c in subs:
                meet = a & c
                for b in subs:
                    if b | meet == meet and b != meet:
                        out.append(NormalForm("D2_Form11", (a, b, c)))
    else:
        raise ShapeMismatch(f"no classified forms for shape {shape}")
    return out
