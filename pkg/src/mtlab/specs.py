"""JSON ring and algebra specifications.

Ring specs::

    {"zn": n} | {"product": [spec, ...]} | {"null_ext": {"p": p, "k": k}}
    {"table": {"order": n, "add": [[...]], "mul": [[...]], "zero": i, "one": i | null}}
    {"quotient": {"ring": spec, "ideal_gens": [elem, ...]}}

Algebra specs::

    {"nm_chain": k} | {"ideal_lattice_of": ring spec}
    {"table": {"size": n, "meet": ..., "join": ..., "otimes": ..., "imp": ..., "bot": i, "top": i}}

Errors carry a JSON path such as ``$.product[1].null_ext.p``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Union

from .ideals import build_quotient, generated_ideal
from .ring import (FiniteRing, RingAxiomError, build_from_tables, build_null_extension,
                   build_product, build_zn, is_prime)


class SpecError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class RingSpec:
    tag: str
    payload: Any

    def to_json(self) -> Any:
        if self.tag == "product":
            return {"product": [s.to_json() for s in self.payload]}
        if self.tag == "quotient":
            ring, gens = self.payload
            return {"quotient": {"ring": ring.to_json(), "ideal_gens": list(gens)}}
        return {self.tag: self.payload}

    def __str__(self):
        return json.dumps(self.to_json(), separators=(",", ":"))


@dataclass(frozen=True)
class AlgebraSpec:
    tag: str
    payload: Any


def _load(source: Union[str, bytes, dict, list]) -> Any:
    if isinstance(source, (str, bytes)):
        try:
            return json.loads(source)
        except json.JSONDecodeError as e:
            raise SpecError("$", f"invalid JSON: {e.msg}") from None
    return source


def _int(v, path, lo=None) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise SpecError(path, f"expected integer, got {v!r}")
    if lo is not None and v < lo:
        raise SpecError(path, f"must be >= {lo}")
    return v


def _single_key(obj, path, allowed) -> tuple:
    if not isinstance(obj, dict):
        raise SpecError(path, "expected an object")
    if len(obj) != 1:
        raise SpecError(path, f"expected exactly one of {sorted(allowed)}, got {sorted(obj)}")
    (key, val), = obj.items()
    if key not in allowed:
        raise SpecError(f"{path}.{key}", "unknown key")
    return key, val


def _keys(obj, path, required, optional=()) -> None:
    if not isinstance(obj, dict):
        raise SpecError(path, "expected an object")
    for k in obj:
        if k not in required and k not in optional:
            raise SpecError(f"{path}.{k}", "unknown key")
    for k in required:
        if k not in obj:
            raise SpecError(f"{path}.{k}", "missing key")


def _square(t, n, path) -> list:
    if not isinstance(t, list) or len(t) != n:
        raise SpecError(path, f"table shape mismatch: expected {n} rows")
    for r, row in enumerate(t):
        if not isinstance(row, list) or len(row) != n:
            raise SpecError(f"{path}[{r}]", f"table shape mismatch: expected {n} entries")
        for c, v in enumerate(row):
            _int(v, f"{path}[{r}][{c}]", 0)
            if v >= n:
                raise SpecError(f"{path}[{r}][{c}]", f"entry {v} out of range")
    return t


RING_TAGS = ("zn", "product", "null_ext", "table", "quotient")


def parse_ring_spec(source, path: str = "$") -> RingSpec:
    key, val = _single_key(_load(source), path, RING_TAGS)
    p = f"{path}.{key}"
    if key == "zn":
        return RingSpec("zn", _int(val, p, 1))
    if key == "product":
        if not isinstance(val, list) or not val:
            raise SpecError(p, "expected a nonempty list")
        return RingSpec("product", tuple(parse_ring_spec(s, f"{p}[{i}]") for i, s in enumerate(val)))
    if key == "null_ext":
        _keys(val, p, ("p", "k"))
        prime = _int(val["p"], f"{p}.p")
        if not is_prime(prime):
            raise SpecError(f"{p}.p", f"p not prime: {prime}")
        return RingSpec("null_ext", {"p": prime, "k": _int(val["k"], f"{p}.k", 0)})
    if key == "table":
        _keys(val, p, ("order", "add", "mul", "zero"), ("one",))
        n = _int(val["order"], f"{p}.order", 1)
        _square(val["add"], n, f"{p}.add")
        _square(val["mul"], n, f"{p}.mul")
        zero = _int(val["zero"], f"{p}.zero", 0)
        one = val.get("one")
        if one is not None:
            one = _int(one, f"{p}.one", 0)
        for name, e in (("zero", zero), ("one", one)):
            if e is not None and e >= n:
                raise SpecError(f"{p}.{name}", "element out of range")
        return RingSpec("table", {"order": n, "add": val["add"], "mul": val["mul"],
                                  "zero": zero, "one": one})
    _keys(val, p, ("ring", "ideal_gens"))
    ring = parse_ring_spec(val["ring"], f"{p}.ring")
    gens = val["ideal_gens"]
    if not isinstance(gens, list):
        raise SpecError(f"{p}.ideal_gens", "expected a list")
    return RingSpec("quotient", (ring, tuple(_int(g, f"{p}.ideal_gens[{i}]", 0)
                                             for i, g in enumerate(gens))))


def build_ring(spec: RingSpec, path: str = "$") -> FiniteRing:
    tag, val = spec.tag, spec.payload
    if tag == "zn":
        return build_zn(val)
    if tag == "product":
        return build_product([build_ring(s, f"{path}.product[{i}]") for i, s in enumerate(val)])
    if tag == "null_ext":
        return build_null_extension(val["p"], val["k"])
    if tag == "table":
        try:
            return build_from_tables(val["order"], val["add"], val["mul"], val["zero"],
                                     val["one"], name=f"T{val['order']}")
        except RingAxiomError as e:
            raise SpecError(f"{path}.table", str(e)) from None
    ring_spec, gens = val
    R = build_ring(ring_spec, f"{path}.quotient.ring")
    for i, g in enumerate(gens):
        if g >= R.order:
            raise SpecError(f"{path}.quotient.ideal_gens[{i}]", f"element {g} out of range")
    Q, _ = build_quotient(R, generated_ideal(R, gens))
    return Q


def load_ring(source) -> FiniteRing:
    return build_ring(parse_ring_spec(source))


ALGEBRA_TAGS = ("nm_chain", "ideal_lattice_of", "table")


def parse_algebra_spec(source, path: str = "$") -> AlgebraSpec:
    key, val = _single_key(_load(source), path, ALGEBRA_TAGS)
    p = f"{path}.{key}"
    if key == "nm_chain":
        return AlgebraSpec("nm_chain", _int(val, p, 2))
    if key == "ideal_lattice_of":
        return AlgebraSpec("ideal_lattice_of", parse_ring_spec(val, p))
    _keys(val, p, ("size", "meet", "join", "otimes", "imp", "bot", "top"))
    n = _int(val["size"], f"{p}.size", 1)
    for name in ("meet", "join", "otimes", "imp"):
        _square(val[name], n, f"{p}.{name}")
    for name in ("bot", "top"):
        if _int(val[name], f"{p}.{name}", 0) >= n:
            raise SpecError(f"{p}.{name}", "element out of range")
    return AlgebraSpec("table", val)


def build_algebra(spec: AlgebraSpec):
    from .algebra import ResLattice, from_ideal_lattice, nm_chain
    if spec.tag == "nm_chain":
        return nm_chain(spec.payload)
    if spec.tag == "ideal_lattice_of":
        return from_ideal_lattice(build_ring(spec.payload))
    v = spec.payload
    return ResLattice.from_tables(v["size"], v["meet"], v["join"], v["otimes"], v["imp"],
                                  v["bot"], v["top"])
