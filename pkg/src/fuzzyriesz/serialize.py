"""JSON encodings. Rationals travel as ``"p/q"`` strings; ideal coordinates are 1-based."""

import json
from pathlib import Path

from .convergence import GeomSequence
from .errors import InputError
from .foset import FuzzyOrderMatrix
from .ideals import CoordinateIdeal
from .operators import RationalOperator
from .quotient import QuotientSpace
from .rational import as_rational, fmt
from .seqmodel import SeqTerm
from .space import DEFAULT_ALPHA, GradedSpace, Vec


def _need(d, *keys):
    if not isinstance(d, dict):
        raise InputError(f"expected an object, got {type(d).__name__}")
    missing = [k for k in keys if k not in d]
    if missing:
        raise InputError(f"missing field(s): {', '.join(missing)}")


def _int(v, what):
    if isinstance(v, bool) or not isinstance(v, int):
        raise InputError(f"{what} must be an integer, got {v!r}")
    return v


def dump_vec(v):
    return [fmt(a) for a in v]


def load_vec(data):
    if not isinstance(data, list):
        raise InputError("a vector is a list of rationals")
    return Vec(as_rational(a) for a in data)


def dump_foset(m: FuzzyOrderMatrix):
    out = {"size": m.size, "grades": [[fmt(g) for g in row] for row in m.grades]}
    if m.labels is not None:
        out["labels"] = list(m.labels)
    return out


def load_foset(d) -> FuzzyOrderMatrix:
    _need(d, "size", "grades")
    return FuzzyOrderMatrix(_int(d["size"], "size"), d["grades"], d.get("labels"))


def dump_space(sp: GradedSpace):
    return {"dim": sp.dim, "alpha": fmt(sp.alpha)}


def load_space(d) -> GradedSpace:
    _need(d, "dim")
    return GradedSpace(_int(d["dim"], "dim"), as_rational(d.get("alpha", fmt(DEFAULT_ALPHA))))


def dump_ideal(B: CoordinateIdeal):
    return {"coords": B.labels()}


def load_ideal(d, sp: GradedSpace) -> CoordinateIdeal:
    _need(d, "coords")
    coords = [_int(i, "coordinate") for i in d["coords"]]
    if any(i < 1 for i in coords):
        raise InputError("ideal coordinates are 1-based")
    return CoordinateIdeal(sp, frozenset(i - 1 for i in coords))


def dump_operator(T: RationalOperator):
    out = {"rows": T.rows, "cols": T.cols, "entries": [[fmt(a) for a in r] for r in T.entries]}
    if T.domain.alpha != DEFAULT_ALPHA:
        out["alpha"] = fmt(T.domain.alpha)
    return out


def load_operator(d) -> RationalOperator:
    _need(d, "rows", "cols", "entries")
    m, n = _int(d["rows"], "rows"), _int(d["cols"], "cols")
    alpha = as_rational(d.get("alpha", fmt(DEFAULT_ALPHA)))
    return RationalOperator(d["entries"], GradedSpace(n, alpha), GradedSpace(m, alpha))


def dump_sequence(s: GeomSequence):
    return {"base": dump_vec(s.base), "drift": dump_vec(s.drift), "ratio": fmt(s.ratio)}


def load_sequence(d) -> GeomSequence:
    _need(d, "base", "drift", "ratio")
    return GeomSequence(load_vec(d["base"]), load_vec(d["drift"]), as_rational(d["ratio"]))


def dump_quotient(q: QuotientSpace):
    return {"space": dump_space(q.ambient), "ideal": dump_ideal(q.ideal)}


def load_quotient(d) -> QuotientSpace:
    _need(d, "space", "ideal")
    sp = load_space(d["space"])
    return QuotientSpace(sp, load_ideal(d["ideal"], sp))


def dump_seqterm(f: SeqTerm):
    return f.to_json()


def load_seqterm(d) -> SeqTerm:
    if not isinstance(d, dict):
        raise InputError("a sequence term is an object")
    return SeqTerm.from_json(d)


def load_factorization(d):
    _need(d, "Q", "S", "T")
    return load_operator(d["Q"]), load_operator(d["S"]), load_operator(d["T"])


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def read_json(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
