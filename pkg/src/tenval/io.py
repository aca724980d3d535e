"""JSON readers and writers. All numbers travel as exact rational strings."""

from __future__ import annotations

from decimal import Context, Decimal
from fractions import Fraction

from .linalg import as_rational
from .polytope import Polytope, interval, make_family
from .symtensor import SymTensor, product_basis
from .valuations import ValuationDescriptor
from .verify import ValuationSample


def rational_str(x: Fraction) -> str:
    return str(Fraction(x))


def decimal_str(x: Fraction, digits: int = 20) -> str:
    x = Fraction(x)
    ctx = Context(prec=digits)
    return str(ctx.divide(Decimal(x.numerator), Decimal(x.denominator)))


def _num(x) -> Fraction:
    if isinstance(x, float):
        raise ValueError(f"floats are not accepted, got {x!r}; use \"num/den\" strings")
    return as_rational(x)


def tensor_to_json(K: SymTensor, fmt=rational_str) -> dict:
    return {"dim": K.dim, "rank": K.rank,
            "coords": [{"exp": list(beta), "value": fmt(v)} for beta, v in K.items()]}


def tensor_from_json(obj: dict) -> SymTensor:
    return SymTensor(int(obj["dim"]), int(obj["rank"]),
                     {tuple(c["exp"]): _num(c["value"]) for c in obj.get("coords", [])})


def polytope_to_json(P: Polytope) -> dict:
    return {"dim": P.dim, "vertices": [[rational_str(x) for x in v] for v in P.vertices]}


def _family_params(obj: dict) -> dict:
    params = {}
    for key, val in obj.items():
        if key == "family":
            continue
        if key == "n":
            params["n"] = int(val)
        elif key == "base":
            params["base"] = polytope_from_json(val)
        elif isinstance(val, list):
            params[key] = [_num(v) for v in val]
        else:
            params[key] = _num(val)
    return params


def polytope_from_json(obj: dict) -> Polytope:
    if "family" in obj:
        params = _family_params(obj)
        if obj["family"] == "interval":
            return interval(params.get("a", 1), params.get("b", 1))
        return make_family(obj["family"], **params)
    dim = int(obj["dim"])
    return Polytope.from_vertices(dim, [[_num(x) for x in v] for v in obj["vertices"]])


def descriptor_from_json(obj: dict) -> ValuationDescriptor:
    kind = obj["kind"]
    r, s = int(obj.get("r", 0)), int(obj.get("s", 0))
    if "p" in obj:
        p = int(obj["p"])
        if kind == "moment":
            r = p
        elif kind == "lp_normal":
            s = p
        elif kind not in ("euler", "vol") or p:
            raise ValueError(f"'p' is ambiguous for kind {kind!r}; give r and s")
    return ValuationDescriptor(kind, r=r, s=s, polar_input=bool(obj.get("polar_input", False)),
                               rho_output=bool(obj.get("rho_output", False)))


def descriptor_to_json(d: ValuationDescriptor) -> dict:
    return {"kind": d.kind, "r": d.r, "s": d.s, "polar_input": d.polar_input, "rho_output": d.rho_output}


def samples_from_json(obj: dict) -> tuple[int, int, list[ValuationSample]]:
    n, p = int(obj["n"]), int(obj["p"])
    samples = [ValuationSample(polytope_from_json(s["polytope"]), tensor_from_json(s["value"]))
               for s in obj["samples"]]
    return n, p, samples


def samples_to_json(n: int, p: int, samples) -> dict:
    return {"n": n, "p": p, "samples": [{"polytope": polytope_to_json(s.polytope),
                                          "value": tensor_to_json(s.value)} for s in samples]}


def eval_output(K: SymTensor, fmt=rational_str) -> dict:
    out = tensor_to_json(K, fmt)
    if K.dim == 2:
        out["basis_coords"] = [fmt(c) for c in product_basis(K)]
    return out
