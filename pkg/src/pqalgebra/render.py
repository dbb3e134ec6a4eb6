"""Text formatting for CLI output: complex literals, elements, unit tables."""

from __future__ import annotations

import cmath
import json
import re

_SNAP = 1e-12
_LONE_I = re.compile(r"(?<![\d.])j")


def parse_complex(text: str) -> complex:
    """Parse a complex literal that uses i for the imaginary unit."""
    t = str(text).strip().replace(" ", "")
    if not t:
        raise ValueError("empty complex literal")
    t = _LONE_I.sub("1j", t.replace("i", "j").replace("I", "j"))
    try:
        z = complex(t)
    except ValueError:
        raise ValueError(f"bad complex literal {text!r}") from None
    if not cmath.isfinite(z):
        raise ValueError(f"complex literal {text!r} is not finite")
    return z


def _fmt_float(x: float) -> str:
    out = f"{x:.10g}"
    return "0" if out == "-0" else out


def format_complex(z: complex) -> str:
    z = complex(z)
    re_, im = z.real, z.imag
    if abs(re_) < _SNAP:
        re_ = 0.0
    if abs(im) < _SNAP:
        im = 0.0
    if im == 0.0:
        return _fmt_float(re_)
    if im == 1.0:
        istr = "i"
    elif im == -1.0:
        istr = "-i"
    else:
        istr = f"{_fmt_float(im)}i"
    if re_ == 0.0:
        return istr
    sign = "+" if not istr.startswith("-") else ""
    return f"{_fmt_float(re_)}{sign}{istr}"


def unit_names(dim: int, style: str = "e") -> list[str]:
    """Basis names: e0..e(d-1), or coefficient-style 1, i, j, k, l, m, n, o."""
    if style == "e":
        return [f"e{m}" for m in range(dim)]
    letters = ["1", "i", "j", "k", "l", "m", "n", "o"]
    if dim > len(letters):
        raise ValueError(f"no coefficient names for dim {dim}")
    return letters[:dim]


def element_to_text(coeffs, names) -> str:
    coeffs = [complex(z) for z in coeffs]
    terms = []
    for z, name in zip(coeffs, names):
        if abs(z) < _SNAP:
            continue
        lit = format_complex(z)
        if name == "1":
            terms.append(lit if "+" not in lit[1:] and "-" not in lit[1:]
                         else f"({lit})")
        elif lit == "1":
            terms.append(name)
        elif lit == "-1":
            terms.append(f"-{name}")
        elif "+" in lit[1:] or "-" in lit[1:]:
            terms.append(f"({lit})·{name}")
        else:
            terms.append(f"{lit}·{name}")
    if not terms:
        return "0"
    return "+".join(terms).replace("+-", "-")


def table_text(family: str, p: complex, q: complex, cells: list[list[str]]) -> str:
    dim = len(cells)
    names = unit_names(dim)
    w = max(max(len(c) for row in cells for c in row),
            max(len(n) for n in names))
    lines = [f"{family}(p={format_complex(p)}, q={format_complex(q)})"]
    lines.append(" " * w + " | " + "  ".join(n.rjust(w) for n in names))
    lines.append("-" * w + "-+-" + "-" * (dim * w + 2 * (dim - 1)))
    for name, row in zip(names, cells):
        lines.append(name.rjust(w) + " | " + "  ".join(c.rjust(w) for c in row))
    return "\n".join(lines) + "\n"


def dump_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
