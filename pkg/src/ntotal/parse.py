"""Text syntax for ring specs.

Grammar (whitespace ignored)::

    ring    := factor ("x" factor)*          # product, "x" at bracket depth 0
    factor  := "(" ring ")"
             | "Z" INT                        # Z_m
             | "Z" INT "[" VAR "]/(" poly ")"   # Z_p[x]/(f), p prime
             | "GF(" INT ")" ["[" VAR "]/(" poly ")"]

``GF(q)`` alone is the Galois field of order ``q`` built with the least monic
irreducible polynomial of the right degree.
"""

from __future__ import annotations

import re

from .rings import (
    InvalidSpec,
    Modular,
    PolyQuotient,
    Product,
    RingSpec,
    galois_field,
)


class SpecSyntaxError(InvalidSpec):
    pass


_ZMOD = re.compile(r"Z(\d+)")
_QUOT = re.compile(r"(?:Z(\d+)|GF\((\d+)\))\[([a-zA-Z])\]/\((.+)\)")
_GF = re.compile(r"GF\((\d+)\)")
_TERM = re.compile(r"(\d*)\*?(?:([a-zA-Z])(?:(?:\^|\*\*)(\d+))?)?")


def parse_ring(text: str) -> RingSpec:
    """Parse ring spec text into a spec (structure is validated by make_ring)."""
    src = "".join(text.split()).replace("×", "x")
    if not src:
        raise SpecSyntaxError("empty ring spec")
    parts = _split_product(src)
    if len(parts) == 1:
        return _parse_factor(parts[0])
    return Product(tuple(_parse_factor(p) for p in parts))


def _split_product(src: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(src):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise SpecSyntaxError(f"unbalanced brackets in {src!r}")
        elif ch == "x" and depth == 0:
            parts.append(src[start:i])
            start = i + 1
    if depth:
        raise SpecSyntaxError(f"unbalanced brackets in {src!r}")
    parts.append(src[start:])
    if any(not p for p in parts):
        raise SpecSyntaxError(f"empty product factor in {src!r}")
    return parts


def _parse_factor(src: str) -> RingSpec:
    if src.startswith("(") and _matching_paren(src, 0) == len(src) - 1:
        return parse_ring(src[1:-1])
    if m := _ZMOD.fullmatch(src):
        return Modular(int(m.group(1)))
    if m := _QUOT.fullmatch(src):
        p = int(m.group(1) or m.group(2))
        return PolyQuotient(p, parse_poly(m.group(4), m.group(3), p))
    if m := _GF.fullmatch(src):
        return galois_field(int(m.group(1)))
    raise SpecSyntaxError(f"cannot parse ring factor {src!r}")


def _matching_paren(src: str, i: int) -> int:
    depth = 0
    for j in range(i, len(src)):
        if src[j] in "([":
            depth += 1
        elif src[j] in ")]":
            depth -= 1
            if depth == 0:
                return j
    return -1


def parse_poly(text: str, var: str, p: int) -> tuple[int, ...]:
    """Coefficients of a polynomial over Z_p, highest degree first."""
    text = text.replace("-", "+-")
    coeffs: dict[int, int] = {}
    for raw in filter(None, text.split("+")):
        sign = -1 if raw.startswith("-") else 1
        term = raw.lstrip("-")
        m = _TERM.fullmatch(term)
        if not term or m is None or (m.group(2) and m.group(2) != var):
            raise SpecSyntaxError(f"bad polynomial term {raw!r}")
        digits, sym, exp = m.groups()
        if not digits and not sym:
            raise SpecSyntaxError(f"bad polynomial term {raw!r}")
        c = int(digits) if digits else 1
        deg = (int(exp) if exp else 1) if sym else 0
        coeffs[deg] = coeffs.get(deg, 0) + sign * c
    if p >= 2:
        coeffs = {d: c % p for d, c in coeffs.items()}
    nonzero = [d for d, c in coeffs.items() if c]
    if not nonzero:
        raise SpecSyntaxError("modulus polynomial is zero")
    top = max(nonzero)
    return tuple(coeffs.get(d, 0) for d in range(top, -1, -1))
