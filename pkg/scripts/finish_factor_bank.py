#!/usr/bin/env python3
"""Finish the factor bank: crack the remaining values with escalating ECM."""

import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from gen_factor_bank import budgeted_rho, prime_powers, TRIAL
from coprimax.arith import _cyclotomic_value, is_prime

CHECKPOINT = Path("/tmp/factor_bank_checkpoint.json")
OUT = Path(__file__).resolve().parent.parent / "src" / "coprimax" / "data" / "cyclotomic_factors.json"


def split_hard(v):
    """Return a nontrivial factor of composite v, escalating effort."""
    d = budgeted_rho(v, max_iter=4_000_000)
    if d:
        return d
    from sympy.ntheory.ecm import ecm
    for B1, curves in ((11_000, 120), (50_000, 200), (250_000, 300), (1_000_000, 500), (4_000_000, 800)):
        t0 = time.time()
        try:
            fs = ecm(v, B1=B1, B2=100 * B1, max_curve=curves)
        except Exception as exc:
            print(f"    ecm B1={B1} raised {exc!r}", flush=True)
            continue
        for f in sorted(int(x) for x in fs):
            if 1 < f < v:
                print(f"    ecm B1={B1} cracked it in {time.time()-t0:.0f}s", flush=True)
                return f
        print(f"    ecm B1={B1} no factor ({time.time()-t0:.0f}s)", flush=True)
    raise RuntimeError(f"could not factor {v}")


def full_factor(n):
    out = {}
    stack = [n]
    while stack:
        v = stack.pop()
        if v == 1:
            continue
        for p in TRIAL:
            if p * p > v:
                break
            while v % p == 0:
                out[p] = out.get(p, 0) + 1
                v //= p
        if v == 1:
            continue
        if is_prime(v):
            out[v] = out.get(v, 0) + 1
            continue
        done = False
        for e in range(2, v.bit_length()):
            r = round(v ** (1.0 / e))
            for cand in (r - 1, r, r + 1):
                if cand > 1 and cand**e == v:
                    stack.extend([cand] * e)
                    done = True
                    break
            if done:
                break
        if done:
            continue
        d = split_hard(v)
        stack.append(d)
        stack.append(v // d)
    return out


def main():
    bank = json.loads(CHECKPOINT.read_text())
    qs = prime_powers(200)
    ds = list(range(1, 24)) + list(range(24, 47, 2))
    todo = [(q, d) for q in qs for d in ds if f"{q},{d}" not in bank]
    print(f"{len(todo)} remaining", flush=True)
    for i, (q, d) in enumerate(todo):
        v = _cyclotomic_value(d, q)
        t0 = time.time()
        factors = full_factor(v)
        check = 1
        for p, e in factors.items():
            assert is_prime(p), (q, d, p)
            check *= p**e
        assert check == v
        bank[f"{q},{d}"] = sorted(factors.items())
        CHECKPOINT.write_text(json.dumps(bank))
        print(f"[{i+1}/{len(todo)}] q={q} d={d} {time.time()-t0:.1f}s", flush=True)
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(bank, sort_keys=True))
    print(f"wrote {len(bank)} entries to {OUT}", flush=True)


if __name__ == "__main__":
    main()
