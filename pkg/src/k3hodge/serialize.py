"""JSON and CSV exchange formats.

Integers are written as decimal strings and rationals as ``"p/q"`` in
lowest terms with positive denominator (plain ``"p"`` when integral), so
nothing is lost to 64-bit tooling.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import re
from fractions import Fraction
from typing import Any, Mapping, Sequence

from . import hilb2, k3
from .hilb2 import H4Class
from .hodge import Hodge22Report
from .k3 import K3Config


_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?")


def num_str(x) -> str:
    return str(Fraction(x))


def parse_int(x) -> int:
    if isinstance(x, bool):
        raise ValueError(f"expected an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return int(x.strip())
    raise ValueError(f"expected an integer or decimal string, got {x!r}")


def parse_rational(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise ValueError(f"expected an exact rational, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str) and _RATIONAL.fullmatch(x.strip()):
        try:
            return Fraction(x.strip())
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {x!r}") from None
    raise ValueError(f"expected a rational string, got {x!r}")


def matrix_to_strings(m: Sequence[Sequence]) -> list[list[str]]:
    return [[num_str(x) for x in row] for row in m]


def matrix_from_strings(m: Sequence[Sequence]) -> list[list[int]]:
    if not isinstance(m, list) or not all(isinstance(row, list) for row in m):
        raise ValueError("matrix must be a list of rows")
    return [[parse_int(x) for x in row] for row in m]


def gram_to_json(gram: Sequence[Sequence[int]]) -> dict:
    return {"rank": len(gram), "gram": matrix_to_strings(gram)}


def gram_from_json(obj: Mapping[str, Any]) -> list[list[int]]:
    gram = matrix_from_strings(obj["gram"])
    n = parse_int(obj["rank"])
    if len(gram) != n or any(len(row) != n for row in gram):
        raise ValueError(f"gram is not {n}x{n}")
    return gram


def h4_to_json(c: H4Class) -> dict:
    n = hilb2.RANK
    sparse_c = []
    for i in range(n):
        for j in range(i + 1, n):
            v = c.C(i, j)
            if v:
                sparse_c.append([i + 1, j + 1, num_str(v)])
    return {
        "A": num_str(c.A),
        "B": [num_str(c.B(i)) for i in range(n)],
        "C": sparse_c,
        "D": [num_str(c.D(i)) for i in range(n)],
    }


def h4_from_json(obj: Mapping[str, Any]) -> H4Class:
    n = hilb2.RANK
    coords = [Fraction(0)] * hilb2.DIM
    coords[hilb2.A_INDEX] = parse_rational(obj["A"])
    for key, index in (("B", hilb2.b_index), ("D", hilb2.d_index)):
        values = obj[key]
        if len(values) != n:
            raise ValueError(f"{key} must have {n} entries")
        for i, v in enumerate(values):
            coords[index(i)] = parse_rational(v)
    for entry in obj.get("C", []):
        i, j, v = entry
        i, j = parse_int(i), parse_int(j)
        if not 1 <= i < j <= n:
            raise ValueError(f"C index ({i}, {j}) must satisfy 1 <= i < j <= {n}")
        coords[hilb2.c_index(i - 1, j - 1)] = parse_rational(v)
    return H4Class(coords)


def config_from_json(obj: Mapping[str, Any]) -> K3Config:
    """Either ``{"t": n}`` or ``{"pic_gram": ..., "embedding": ..., "assume_general": bool}``."""
    if not isinstance(obj, Mapping):
        raise ValueError("config must be a JSON object")
    general = obj.get("assume_general", True)
    if not isinstance(general, bool):
        raise ValueError("assume_general must be true or false")
    if "t" in obj:
        return dataclasses.replace(k3.generic_surface(parse_int(obj["t"])), assume_general=general)
    return k3.surface_from_embedding(matrix_from_strings(obj["pic_gram"]),
                                     matrix_from_strings(obj["embedding"]),
                                     assume_general=general)


def config_to_json(cfg: K3Config) -> dict:
    return {
        "pic_gram": matrix_to_strings(cfg.pic_gram),
        "embedding": matrix_to_strings(cfg.embedding),
        "assume_general": cfg.assume_general,
    }


def report_to_json(report: Hodge22Report, cfg: K3Config | None = None) -> dict:
    out: dict[str, Any] = {}
    if cfg is not None:
        out["config"] = config_to_json(cfg)
    out.update({
        "rank": report.rank,
        "gram": gram_to_json(report.gram),
        "determinant": num_str(report.determinant),
        "discriminant": num_str(report.discriminant),
        "is_odd": report.is_odd,
        "indivisibility_of_q": report.indivisibility_of_q,
        "saturation_divisors": [num_str(d) for d in report.saturation_divisors],
        "nakajima_change_det": num_str(report.nakajima_change_det),
        "rational_span_match": report.rational_span_match,
        "closed_form_match": report.closed_form_match,
        "assumption": report.assumption,
        "basis": [h4_to_json(c) for c in report.basis],
    })
    return out


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def matrix_to_csv(m: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in m:
        writer.writerow([num_str(x) for x in row])
    return buf.getvalue()


def matrix_from_csv(text: str) -> list[list[int]]:
    return [[int(x) for x in row] for row in csv.reader(io.StringIO(text)) if row]
