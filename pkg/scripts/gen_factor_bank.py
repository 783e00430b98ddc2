#!/usr/bin/env python3
"""Generate src/coprimax/data/cyclotomic_factors.json.

Factors Phi_d(q) for every prime power q <= 200 and every d in
{1..23} union {24, 26, ..., 46} -- the cyclotomic parts of all q^k +- 1
values (k <= 23) that the standard scan range can touch.  Easy values are
factored with the package's own routine under a budget; stubborn cofactors
go to sympy's ECM.  Results are checkpointed so the run can be resumed.

Every entry is re-verified (product and per-factor primality) by the test
suite; nothing here is trusted at runtime.
"""

import json
import math
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from coprimax.arith import _cyclotomic_value, _small_prime_sieve, is_prime

OUT = Path(__file__).resolve().parent.parent / "src" / "coprimax" / "data" / "cyclotomic_factors.json"
CHECKPOINT = Path("/tmp/factor_bank_checkpoint.json")

TRIAL = _small_prime_sieve(100000)


def budgeted_rho(n, max_iter=2_000_000):
    """Brent rho, bounded; returns a factor or None."""
    if n % 2 == 0:
        return 2
    for c in (1, 3, 5, 7, 11):
        y, m, g, r, q = 2, 256, 1, 1, 1
        x = ys = y
        it = 0
        while g == 1 and it < max_iter:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            it += r
            r <<= 1
        if g not in (1, n):
            return g
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
            if g != n:
                return g
    return None


def ecm_factor(n):
    from sympy.ntheory.ecm import ecm

    try:
        fs = ecm(n)
        # returns a set of (not necessarily prime) factors
        for f in fs:
            f = int(f)
            if 1 < f < n:
                return f
    except Exception:
        pass
    return None


def full_factor(n, hard_log):
    """Return {prime: exp} for n, using rho then ECM for stubborn parts."""
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
        # perfect power?
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
        d = budgeted_rho(v)
        if d is None:
            t0 = time.time()
            d = ecm_factor(v)
            hard_log.append((v, time.time() - t0, d is not None))
        if d is None:
            raise RuntimeError(f"could not factor {v}")
        stack.append(d)
        stack.append(v // d)
    return out


def prime_powers(limit):
    out = []
    for p in _small_prime_sieve(limit):
        v = p
        while v <= limit:
            out.append(v)
            v *= p
    return sorted(out)


def main():
    qs = prime_powers(200)
    ds = list(range(1, 24)) + list(range(24, 47, 2))
    bank = {}
    if CHECKPOINT.exists():
        bank = json.loads(CHECKPOINT.read_text())
        print(f"resuming with {len(bank)} entries", flush=True)

    todo = [(q, d) for q in qs for d in ds if f"{q},{d}" not in bank]
    # small d first: cheap, and their factors help nothing but morale
    todo.sort(key=lambda t: (t[1], t[0]))
    hard_log = []
    t_start = time.time()
    for i, (q, d) in enumerate(todo):
        v = _cyclotomic_value(d, q)
        t0 = time.time()
        factors = full_factor(v, hard_log)
        dt = time.time() - t0
        check = 1
        for p, e in factors.items():
            assert is_prime(p), (q, d, p)
            check *= p**e
        assert check == v, (q, d)
        bank[f"{q},{d}"] = sorted(factors.items())
        if dt > 5 or i % 200 == 0:
            print(f"[{i}/{len(todo)}] q={q} d={d} digits={len(str(v))} {dt:.1f}s "
                  f"elapsed={time.time()-t_start:.0f}s", flush=True)
        if i % 50 == 0:
            CHECKPOINT.write_text(json.dumps(bank))
    CHECKPOINT.write_text(json.dumps(bank))

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(bank, sort_keys=True))
    print(f"wrote {len(bank)} entries to {OUT}")
    print(f"hard cofactors via ECM: {len(hard_log)}")
    for v, dt, ok in hard_log:
        print(f"  {len(str(v))}-digit {'ok' if ok else 'FAIL'} {dt:.0f}s")


if __name__ == "__main__":
    main()
