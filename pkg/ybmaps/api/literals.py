# api/literals.py
"""
Command-line state literals.

    dressing  "(1,3;2,1)"                         sites (f, beta)
    kdv       "([1,0],[1,1],2);([0,1],[1,1],1)"   sites ([xi], [eta], lambda)
    scalar    "(1,1,1)" or "(1;1;1)"              one rational per site

Sites are separated by ';', fields by ','; brackets hold vectors.
"""
from typing import List

from ybmaps.api.algebra import as_rational
from ybmaps.api.errors import ConfigError, YBError
from ybmaps.api.maps import DressingSite, KdvSite
from ybmaps.api.ybcore import ScalarSite, Site, TupleState

_OPEN = {"(": ")", "[": "]"}


def _split_top(text: str, sep: str) -> List[str]:
    parts, depth, buf = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise ConfigError(f"Unbalanced brackets in {text!r}")
        if ch == sep and depth == 0:
            parts.append("".join(buf))
            buf = []
        else:
            buf.append(ch)
    if depth != 0:
        raise ConfigError(f"Unbalanced brackets in {text!r}")
    parts.append("".join(buf))
    return [p.strip() for p in parts]


def _encloses(text: str, open_ch: str) -> bool:
    """True when text[0] is open_ch and its partner is the last character."""
    if not text or text[0] != open_ch or text[-1] != _OPEN[open_ch]:
        return False
    depth = 0
    for k, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth == 0:
                return k == len(text) - 1
    return False


def _unwrap(text: str, open_ch: str = "(") -> str:
    text = text.strip()
    return text[1:-1].strip() if _encloses(text, open_ch) else text


def _scalar(text: str):
    if not text or text[0] in "([":
        raise ConfigError(f"Expected a rational, got {text!r}")
    try:
        return as_rational(text)
    except ValueError as e:
        raise ConfigError(str(e)) from e


def _vector(text: str):
    if not _encloses(text, "["):
        raise ConfigError(f"Expected a [..] vector, got {text!r}")
    return tuple(_scalar(c) for c in _split_top(text[1:-1], ","))


def _site(fields: List[str], kind: str) -> Site:
    if kind == "dressing":
        if len(fields) != 2:
            raise ConfigError(f"A dressing site is (f, beta), got {len(fields)} fields")
        return DressingSite(_scalar(fields[0]), _scalar(fields[1]))
    if kind == "kdv":
        if len(fields) != 3:
            raise ConfigError(f"A kdv site is ([xi], [eta], lambda), got {len(fields)} fields")
        return KdvSite(_vector(fields[0]), _vector(fields[1]), _scalar(fields[2]))
    if kind == "scalar":
        if len(fields) != 1:
            raise ConfigError(f"A scalar site is one rational, got {len(fields)} fields")
        return ScalarSite(_scalar(fields[0]))
    raise ConfigError(f"No literal syntax for site kind '{kind}'")


def parse_state(text: str, kind: str) -> TupleState:
    body = _unwrap(text)
    if not body:
        raise ConfigError("Empty state literal")
    chunks = _split_top(body, ";")
    try:
        if kind == "scalar":
            fields = [f for chunk in chunks for f in _split_top(_unwrap(chunk), ",")]
            sites = [_site([f], kind) for f in fields]
        else:
            sites = [_site(_split_top(_unwrap(chunk), ","), kind) for chunk in chunks]
        return TupleState(tuple(sites))
    except ConfigError:
        raise
    except YBError as e:
        raise ConfigError(f"Invalid state {text!r}: {e}") from e


def format_site(s: Site) -> str:
    if isinstance(s, KdvSite):
        xi = ",".join(str(c) for c in s.xi)
        eta = ",".join(str(c) for c in s.eta)
        return f"[{xi}],[{eta}],{s.lam}"
    return ",".join(s.fields().values())


def format_state(s: TupleState) -> str:
    if s.kind == "kdv":
        return ";".join(f"({format_site(x)})" for x in s.sites)
    return "(" + ";".join(format_site(x) for x in s.sites) + ")"
