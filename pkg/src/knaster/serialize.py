"""JSON wire formats. Every number crosses the boundary as an exact string.

Rationals are serialized as "p/q" in lowest terms ("p" alone when q = 1)
and parsing is strict: non-reduced fractions, zero or negative
denominators, leading zeros and any other junk are rejected, as are
out-of-range values wherever the carrying structure constrains them.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import gcd

from .distinguish import Certificate
from .natmap import NaturalMapSpec
from .plmap import PLMap
from .seqs import GroupedSeq, SeqSpec
from .threads import Thread
from .tower import Tower, build_tower

_RAT_RE = re.compile(r"^(-?(?:0|[1-9][0-9]*))(?:/([1-9][0-9]*))?$")


def rat_to_str(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rat_from_str(text: str) -> Fraction:
    if not isinstance(text, str):
        raise ValueError(f"expected a rational string, got {type(text).__name__}")
    match = _RAT_RE.match(text)
    if match is None:
        raise ValueError(f"malformed rational {text!r}")
    num = int(match.group(1))
    den = int(match.group(2) or 1)
    if gcd(abs(num), den) != 1:
        raise ValueError(f"rational {text!r} is not in lowest terms")
    return Fraction(num, den)


def _unit_rat_from_str(text: str) -> Fraction:
    value = rat_from_str(text)
    if not 0 <= value <= 1:
        raise ValueError(f"value {text!r} outside [0, 1]")
    return value


def _require_int(obj, key: str) -> int:
    value = obj[key]
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"field {key!r} must be an integer")
    return value


# ---------------------------------------------------------------- PLMap

def plmap_to_obj(f: PLMap) -> dict:
    return {"breakpoints": [[rat_to_str(x), rat_to_str(y)] for x, y in f.points]}


def plmap_from_obj(obj: dict) -> PLMap:
    pts = obj["breakpoints"]
    if not isinstance(pts, list):
        raise ValueError("breakpoints must be a list")
    return PLMap([(_unit_rat_from_str(x), _unit_rat_from_str(y)) for x, y in pts])


# --------------------------------------------------------------- SeqSpec

def seqspec_to_obj(seq: SeqSpec) -> dict:
    if seq.kind == "constant":
        return {"kind": "constant", "n": seq.n}
    if seq.kind == "list":
        return {"kind": "list", "items": list(seq.items)}
    return {"kind": "periodic", "prefix": list(seq.prefix), "period": list(seq.period)}


def seqspec_from_obj(obj: dict) -> SeqSpec:
    kind = obj.get("kind")
    if kind == "constant":
        return SeqSpec.constant(_require_int(obj, "n"))
    if kind == "list":
        return SeqSpec.from_list([int(v) for v in obj["items"]])
    if kind == "periodic":
        return SeqSpec.periodic([int(v) for v in obj["prefix"]],
                                [int(v) for v in obj["period"]])
    raise ValueError(f"unknown sequence kind {kind!r}")


# --------------------------------------------------------- NaturalMapSpec

def natmap_to_obj(spec: NaturalMapSpec) -> dict:
    return {
        "i0": spec.i0,
        "jseq": list(spec.jseq),
        "N": seqspec_to_obj(spec.source),
        "M": seqspec_to_obj(spec.target),
    }


def natmap_from_obj(obj: dict) -> NaturalMapSpec:
    return NaturalMapSpec(
        i0=_require_int(obj, "i0"),
        jseq=tuple(int(v) for v in obj["jseq"]),
        source=seqspec_from_obj(obj["N"]),
        target=seqspec_from_obj(obj["M"]),
    )


# ---------------------------------------------------------------- Thread

def thread_to_obj(thread: Thread) -> dict:
    seq = thread.seq
    if isinstance(seq, GroupedSeq):
        # the wire format carries a plain sequence: emit the grouped terms
        seq = SeqSpec.from_list([seq.nth(i) for i in range(1, len(thread.coords))])
    return {
        "seq": seqspec_to_obj(seq),
        "coords": [rat_to_str(x) for x in thread.coords],
    }


def thread_from_obj(obj: dict) -> Thread:
    return Thread(
        seq=seqspec_from_obj(obj["seq"]),
        coords=tuple(_unit_rat_from_str(x) for x in obj["coords"]),
    )


# ----------------------------------------------------------------- Tower

def tower_to_obj(tower: Tower) -> dict:
    return {
        "rawN": seqspec_to_obj(tower.raw_source),
        "M": seqspec_to_obj(tower.target),
        "t": rat_to_str(tower.t),
        "depth": tower.depth,
        "levels": [
            {
                "n": lvl.n,
                "m": lvl.m,
                "slot": lvl.slot,
                "k": lvl.k,
                "a": rat_to_str(lvl.a),
                "b": rat_to_str(lvl.b),
                "folds": [rat_to_str(x) for x in lvl.folds],
            }
            for lvl in tower.levels
        ],
    }


def tower_from_obj(obj: dict) -> Tower:
    """Rebuild the tower and re-verify the stored level data against it."""
    raw_source = seqspec_from_obj(obj["rawN"])
    target = seqspec_from_obj(obj["M"])
    t = _unit_rat_from_str(obj["t"])
    depth = _require_int(obj, "depth")
    stored = obj["levels"]
    if len(stored) != depth:
        raise ValueError(f"tower claims depth {depth} but stores {len(stored)} levels")
    tower = build_tower(raw_source, target, t, depth)
    for lvl, rec in zip(tower.levels, stored):
        same = (
            rec["n"] == lvl.n
            and rec["m"] == lvl.m
            and rec["slot"] == lvl.slot
            and rec["k"] == lvl.k
            and rat_from_str(rec["a"]) == lvl.a
            and rat_from_str(rec["b"]) == lvl.b
            and tuple(rat_from_str(x) for x in rec["folds"]) == lvl.folds
        )
        if not same:
            raise ValueError(f"stored level {lvl.j} disagrees with the rebuilt tower")
    return tower


# ------------------------------------------------------------ Certificate

def certificate_to_obj(cert: Certificate) -> dict:
    return {
        "t": rat_to_str(cert.t),
        "s": rat_to_str(cert.s),
        "ell": cert.ell,
        "j": cert.j,
        "q": cert.q,
        "witness": rat_to_str(cert.witness),
        "vt": rat_to_str(cert.vt),
        "vs": rat_to_str(cert.vs),
        "p": cert.p,
        "r": cert.r,
    }


def certificate_from_obj(obj: dict) -> Certificate:
    return Certificate(
        t=_unit_rat_from_str(obj["t"]),
        s=_unit_rat_from_str(obj["s"]),
        ell=_require_int(obj, "ell"),
        j=_require_int(obj, "j"),
        q=_require_int(obj, "q"),
        witness=_unit_rat_from_str(obj["witness"]),
        vt=_unit_rat_from_str(obj["vt"]),
        vs=_unit_rat_from_str(obj["vs"]),
        p=_require_int(obj, "p"),
        r=_require_int(obj, "r"),
    )


def dumps(obj: dict | list) -> str:
    """Deterministic JSON text (fixed key order, two-space indent)."""
    return json.dumps(obj, indent=2) + "\n"
