"""Inclusion functions over a space and the axiom families that grade them.

An inclusion function assigns every ordered element pair a rational degree
in [0,1].  The axioms U1, R0, R1, R2, R3, R4, R5, R6, IR0, IR4 and RB are
checked by exhaustive enumeration; axioms that mention the partial join or
meet skip (and count) instances where the operation is undefined.

Class names: RIF requires R1 and R2, qRIF requires R0 and R2, wqRIF
requires R0 and R3.  classify returns the most specific one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Mapping, Optional

from .errors import (
    CarrierError,
    DegenerateSpaceError,
    InputError,
    ParameterError,
)
from .space import GranularSpace, classify_flavor

ONE = Fraction(1)
ZERO = Fraction(0)

RIF_AXIOM_ORDER = ("U1", "R0", "R1", "R2", "R3", "R4", "R5", "R6", "IR0", "IR4", "RB")

CLASS_ORDER = ("none", "wqRIF", "qRIF", "RIF")


@dataclass(frozen=True)
class RifAxiomReport:
    axiom: str
    holds: bool
    witnesses: tuple[tuple[str, ...], ...]
    skipped: int = 0

    def __post_init__(self):
        if self.holds != (len(self.witnesses) == 0):
            raise ValueError("holds must mirror witness emptiness")


class InclusionFunction:
    """Total rational-valued map on ordered element pairs, range [0,1]."""

    def __init__(self, space: GranularSpace, values: Mapping[tuple[str, str], Fraction], label: str):
        self.space = space
        self.label = label
        vals: dict[tuple[str, str], Fraction] = {}
        for a in space.elements:
            for b in space.elements:
                try:
                    v = values[(a, b)]
                except KeyError:
                    raise InputError(f"value missing for pair ({a!r},{b!r})") from None
                v = Fraction(v)
                if v < 0 or v > 1:
                    raise InputError(f"value {v} at ({a!r},{b!r}) is outside [0,1]")
                vals[(a, b)] = v
        self.values = vals

    def __call__(self, a: str, b: str) -> Fraction:
        try:
            return self.values[(a, b)]
        except KeyError:
            raise InputError(f"unknown pair ({a!r},{b!r})") from None

    def image(self) -> tuple[Fraction, ...]:
        return tuple(sorted(set(self.values.values())))

    def image_gap(self) -> Optional[Fraction]:
        """Largest value strictly below 1, None when the image is {1} or empty."""
        below = [v for v in self.values.values() if v < 1]
        return max(below) if below else None

    def pointwise_equal(self, other: "InclusionFunction") -> bool:
        return self.values == other.values

    def __repr__(self):
        return f"InclusionFunction({self.label!r}, {len(self.values)} pairs)"


# -- concrete constructions ------------------------------------------------


def k0(s: GranularSpace) -> InclusionFunction:
    """Classical overlap degree #(A and B)/#A, and 1 when A is empty."""
    carriers = _carriers_of(s)
    values = {}
    for a in s.elements:
        ca = carriers[a]
        for b in s.elements:
            cb = carriers[b]
            values[(a, b)] = Fraction(len(ca & cb), len(ca)) if ca else ONE
    return InclusionFunction(s, values, "k0")


def k1(s: GranularSpace) -> InclusionFunction:
    """#B/#(A or B), and 1 when both are empty."""
    carriers = _carriers_of(s)
    values = {}
    for a in s.elements:
        ca = carriers[a]
        for b in s.elements:
            cb = carriers[b]
            union = ca | cb
            values[(a, b)] = Fraction(len(cb), len(union)) if union else ONE
    return InclusionFunction(s, values, "k1")


def k2(s: GranularSpace) -> InclusionFunction:
    """#(complement(A) or B)/#top, complements taken inside the top carrier."""
    carriers = _carriers_of(s)
    universe = carriers[s.top]
    if not universe:
        raise DegenerateSpaceError("k2 needs a nonempty top carrier")
    values = {}
    for a in s.elements:
        rest = universe - carriers[a]
        for b in s.elements:
            values[(a, b)] = Fraction(len(rest | carriers[b]), len(universe))
    return InclusionFunction(s, values, "k2")


def kst(f: InclusionFunction, s: Fraction, t: Fraction) -> InclusionFunction:
    """Threshold transform: 0 up to s, affine ramp on (s,t), 1 from t on."""
    s = Fraction(s)
    t = Fraction(t)
    if s < 0 or t > 1:
        raise ParameterError(f"thresholds must satisfy 0 <= s < t <= 1, got s={s}, t={t}")
    if s >= t:
        raise ParameterError(f"thresholds must satisfy s < t, got s={s}, t={t}")
    values = {}
    for pair, v in f.values.items():
        if v <= s:
            values[pair] = ZERO
        elif v >= t:
            values[pair] = ONE
        else:
            values[pair] = (v - s) / (t - s)
    return InclusionFunction(f.space, values, f"kst({f.label},{s},{t})")


def _carriers_of(s: GranularSpace) -> dict[str, frozenset[str]]:
    missing = [e for e in s.elements if e not in s.carriers]
    if missing:
        raise CarrierError(f"elements without carriers: {missing}")
    return dict(s.carriers)


# -- axiom checking ----------------------------------------------------------


def check_rif_axiom(f: InclusionFunction, axiom: str, relation: str = "parthood") -> RifAxiomReport:
    """Exhaustively check one axiom of f against the chosen relation.

    relation selects which binary relation plays the parthood role:
    "parthood" (default) or "order".
    """
    s = f.space
    if relation == "parthood":
        rel = s.part
    elif relation == "order":
        rel = s.leq
    else:
        raise InputError(f"relation must be 'parthood' or 'order', got {relation!r}")

    bottom = s.bottom

    def proper_bottom(a: str) -> bool:
        return rel(bottom, a) and not rel(a, bottom)

    els = s.elements
    witnesses: list[tuple[str, ...]] = []
    skipped = 0

    if axiom == "U1":
        witnesses = [(a,) for a in els if f(a, a) != ONE]

    elif axiom == "R0":
        witnesses = [(a, b) for a in els for b in els if rel(a, b) and f(a, b) != ONE]

    elif axiom == "R1":
        witnesses = [(a, b) for a in els for b in els if (f(a, b) == ONE) != rel(a, b)]

    elif axiom == "R2":
        for a in els:
            for b in els:
                for c in els:
                    if f(b, c) == ONE and f(a, b) > f(a, c):
                        witnesses.append((a, b, c))

    elif axiom == "R3":
        for a in els:
            for b in els:
                for c in els:
                    if rel(b, c) and f(a, b) > f(a, c):
                        witnesses.append((a, b, c))

    elif axiom == "R4":
        for a in els:
            for b in els:
                if f(a, b) != ZERO:
                    continue
                m = s.meet_of(a, b)
                if m is None:
                    skipped += 1
                elif m != bottom:
                    witnesses.append((a, b))

    elif axiom == "IR4":
        for a in els:
            if not proper_bottom(a):
                continue
            for b in els:
                m = s.meet_of(a, b)
                if m is None:
                    skipped += 1
                elif m == bottom and f(a, b) != ZERO:
                    witnesses.append((a, b))

    elif axiom == "RB":
        witnesses = [(a,) for a in els if proper_bottom(a) and f(a, bottom) != ZERO]

    elif axiom == "R5":
        # the proper-bottom condition guards the whole biconditional;
        # read as a conjunct on the left it is unsatisfiable wherever
        # bottom meets are defined, which would break prif6 everywhere
        for a in els:
            if not proper_bottom(a):
                continue
            for b in els:
                m = s.meet_of(a, b)
                if m is None:
                    skipped += 1
                elif (f(a, b) == ZERO) != (m == bottom):
                    witnesses.append((a, b))

    elif axiom == "R6":
        for a in els:
            if not proper_bottom(a):
                continue
            for b in els:
                for c in els:
                    j = s.join_of(b, c)
                    if j is None:
                        skipped += 1
                    elif j == s.top and f(a, b) + f(a, c) != ONE:
                        witnesses.append((a, b, c))

    elif axiom == "IR0":
        witnesses = [(a, b) for a in els for b in els if f(a, b) == ONE and not rel(a, b)]

    else:
        raise InputError(f"unknown axiom {axiom!r}")

    wit = tuple(witnesses)
    return RifAxiomReport(axiom=axiom, holds=not wit, witnesses=wit, skipped=skipped)


def classify(f: InclusionFunction, relation: str = "parthood") -> str:
    """Most specific of RIF, qRIF, wqRIF, or 'none'."""
    holds = {
        ax: check_rif_axiom(f, ax, relation).holds for ax in ("R0", "R1", "R2", "R3")
    }
    if holds["R1"] and holds["R2"]:
        return "RIF"
    if holds["R0"] and holds["R2"]:
        return "qRIF"
    if holds["R0"] and holds["R3"]:
        return "wqRIF"
    return "none"


def class_rank(name: str) -> int:
    return CLASS_ORDER.index(name)


def satisfies_class(f: InclusionFunction, name: str, relation: str = "parthood") -> bool:
    """Membership in a class (RIF implies qRIF implies wqRIF), as opposed
    to classify which names the most specific one."""
    if name not in ("RIF", "qRIF", "wqRIF"):
        raise InputError(f"unknown class {name!r}")
    return class_rank(classify(f, relation)) >= class_rank(name)


# -- implication battery -----------------------------------------------------


@dataclass(frozen=True)
class PrifVerdict:
    """One checked implication between axiom sets for a fixed function."""

    name: str
    applicable: bool
    violated: bool
    axioms: Mapping[str, bool]


def complement_closed_set_hgos(s: GranularSpace) -> bool:
    """Set-HGOS whose carrier family is closed under complement in top."""
    if classify_flavor(s) != "setHGOS":
        return False
    universe = s.carriers[s.top]
    return all(s.element_with_carrier(universe - s.carriers[x]) is not None for x in s.elements)


def verify_prif(f: InclusionFunction, relation: str = "parthood") -> list[PrifVerdict]:
    """Check the implication battery prif1..prif9 plus the U1 consequence.

    prif7, prif8 and prif9 are only meaningful on complement-closed
    set-HGOS; elsewhere they are reported as not applicable.
    """
    ax = {name: check_rif_axiom(f, name, relation).holds for name in RIF_AXIOM_ORDER}
    on_sets = complement_closed_set_hgos(f.space)

    def pick(*names: str) -> dict[str, bool]:
        return {n: ax[n] for n in names}

    verdicts = [
        PrifVerdict("prif1", True, ax["R1"] and (ax["R2"] != ax["R3"]), pick("R1", "R2", "R3")),
        PrifVerdict("prif2", True, ax["R1"] != (ax["R0"] and ax["IR0"]), pick("R1", "R0", "IR0")),
        PrifVerdict("prif3", True, ax["R0"] and ax["R2"] and not ax["R3"], pick("R0", "R2", "R3")),
        PrifVerdict("prif4", True, ax["IR0"] and ax["R3"] and not ax["R2"], pick("IR0", "R3", "R2")),
        PrifVerdict("prif5", True, ax["IR4"] and not ax["RB"], pick("IR4", "RB")),
        PrifVerdict("prif6", True, (ax["IR4"] and ax["R4"]) != ax["R5"], pick("IR4", "R4", "R5")),
        PrifVerdict("prif7", on_sets, on_sets and ax["R0"] and ax["R6"] and not ax["IR4"],
                    pick("R0", "R6", "IR4")),
        PrifVerdict("prif8", on_sets, on_sets and ax["IR0"] and ax["R6"] and not ax["R4"],
                    pick("IR0", "R6", "R4")),
        PrifVerdict("prif9", on_sets, on_sets and ax["R1"] and ax["R6"] and not ax["R5"],
                    pick("R1", "R6", "R5")),
        PrifVerdict("prif-u1", True, (ax["R1"] or ax["R0"]) and not ax["U1"], pick("R0", "R1", "U1")),
    ]
    return verdicts


def random_kappa(s: GranularSpace, rng: Random, max_denominator: int = 12) -> InclusionFunction:
    """Random rational-valued function; denominators stay small so axiom
    coincidences (exact 0, exact 1) actually happen.  With probability one
    half the diagonal is forced to 1 so U1-sensitive implications get
    exercised on both sides."""
    values = {}
    for a in s.elements:
        for b in s.elements:
            den = rng.randint(1, max_denominator)
            values[(a, b)] = Fraction(rng.randint(0, den), den)
    if rng.random() < 0.5:
        for a in s.elements:
            values[(a, a)] = ONE
    return InclusionFunction(s, values, "kappa")
