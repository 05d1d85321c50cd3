"""Exact local constants W(chi) of characters of unramified p-adic fields."""

import json

from ._localconst import (
    CyclotomicNumber,
    Character,
    DomainError,
    ParseError,
    PrecisionError,
    RootOfUnity,
    character,
    hilbert_qp,
    iota,
    run_cli,
    sqrt_p,
    sqrt_pstar,
    w,
    w_p,
    w_star,
)

__all__ = [
    "CyclotomicNumber",
    "Character",
    "DomainError",
    "ParseError",
    "PrecisionError",
    "RootOfUnity",
    "character",
    "hilbert_qp",
    "iota",
    "record",
    "run_cli",
    "sqrt_p",
    "sqrt_pstar",
    "verify",
    "w",
    "w_p",
    "w_star",
]


def record(spec, p, f=1):
    """The JSON record printed by `localconst w`, as a dict."""
    code, out, err = run_cli(["w", "--p", str(p), "--f", str(f), "--char", spec, "--format", "json"])
    if code != 0:
        raise ValueError(err.strip())
    return json.loads(out)


def verify(suite, primes=(3,), max_n=None):
    """Run a verification suite; returns (exit code, list of report dicts)."""
    args = ["verify", "--suite", suite, "--p", ",".join(str(p) for p in primes), "--format", "json"]
    if max_n is not None:
        args += ["--max-n", str(max_n)]
    code, out, err = run_cli(args)
    if code == 2:
        raise ValueError(err.strip())
    reports = [json.loads(line) for line in out.splitlines() if line.strip()]
    return code, [r for r in reports if "summary" not in r]
