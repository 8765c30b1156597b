#!/usr/bin/env python3
# Copyright 2026 The mwex Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Brute-force reference values for the TOY-1 corpus.

Counts every n-gram by scanning windows, evaluates the three association
measures straight from those counts, and fuses them. Nothing here shares
code with the C++ engine; the printed numbers are frozen into
tests/toy1_expected.hpp.
"""
import math
from fractions import Fraction

TOY1 = [["a", "b", "c"], ["a", "b", "d"], ["a", "c", "b"]]


def count(corpus, gram):
    n = len(gram)
    hits = 0
    for sent in corpus:
        for i in range(len(sent) - n + 1):
            if tuple(sent[i:i + n]) == tuple(gram):
                hits += 1
    return hits


def all_grams(corpus, n):
    seen = []
    for sent in corpus:
        for i in range(len(sent) - n + 1):
            g = tuple(sent[i:i + n])
            if g not in seen:
                seen.append(g)
    return sorted(seen)


def npmi(corpus, gram):
    N = sum(len(s) for s in corpus)
    p = Fraction(count(corpus, gram), N)
    pl = Fraction(count(corpus, gram[:-1]), N)
    pr = Fraction(count(corpus, gram[1:]), N)
    return math.log2(p * p / (pl * pr))


def loglik(k, n, p):
    # sum of per-trial log probabilities, 0*log(0) = 0
    total = 0.0
    if k:
        total += k * math.log2(p)
    if n - k:
        total += (n - k) * math.log2(1 - p)
    return total


def direction(corpus, cond, target_index, gram):
    """Cells for p(target | cond) vs p(target | not cond).

    k1: positions where cond is followed/preceded by target (the gram)
    k2: target occurrences not adjacent to cond, counted by scanning
    """
    N = sum(len(s) for s in corpus)
    n = len(gram)
    target = gram[target_index]
    k1 = 0
    k2 = 0
    for sent in corpus:
        for i, tok in enumerate(sent):
            if tok != target:
                continue
            if target_index == n - 1:
                ctx = tuple(sent[i - (n - 1):i]) if i - (n - 1) >= 0 else None
            else:
                ctx = tuple(sent[i + 1:i + n]) if i + n <= len(sent) else None
            if ctx == tuple(cond):
                k1 += 1
            else:
                k2 += 1
    n1 = count(corpus, cond)
    n2 = N - n1
    return k1, n1, k2, n2


def llr(k1, n1, k2, n2):
    p = Fraction(k1 + k2, n1 + n2)
    p1 = Fraction(k1, n1)
    p2 = Fraction(k2, n2)
    return (loglik(k1, n1, p) + loglik(k2, n2, p)
            - loglik(k1, n1, p1) - loglik(k2, n2, p2))


def bllr(corpus, gram):
    fwd = direction(corpus, gram[:-1], len(gram) - 1, gram)
    bwd = direction(corpus, gram[1:], 0, gram)
    return (llr(*fwd) + llr(*bwd)) / 2, fwd, bwd


def dice(corpus, gram):
    return Fraction(count(corpus, gram),
                    count(corpus, gram[:-1]) + count(corpus, gram[1:]))


def fuse(rows):
    nps = [r["npmi"] for r in rows]
    lo, hi = min(nps), max(nps)
    neg = [-r["bllr"] for r in rows]
    dmax = max(float(r["dice"]) for r in rows)
    for r in rows:
        n1 = 1.0 if hi == lo else (r["npmi"] - lo) / (hi - lo)
        n2 = 1.0 if max(neg) == 0 else (-r["bllr"]) / max(neg)
        n3 = 1.0 if dmax == 0 else float(r["dice"]) / dmax
        r["combined"] = n1 + n2 + n3
    return sorted(rows, key=lambda r: (-r["combined"], -r["count"], r["gram"]))


def main():
    N = sum(len(s) for s in TOY1)
    print("N", N)
    for n in range(1, 6):
        for g in all_grams(TOY1, n):
            print("count", " ".join(g), count(TOY1, g))
    rows = []
    for n in range(2, 6):
        for g in all_grams(TOY1, n):
            b, fwd, bwd = bllr(TOY1, g)
            row = dict(gram=g, count=count(TOY1, g), npmi=npmi(TOY1, g),
                       bllr=b, dice=dice(TOY1, g), fwd=fwd, bwd=bwd)
            rows.append(row)
            print("score", " ".join(g), repr(row["npmi"]), repr(b),
                  repr(float(row["dice"])), "fwd", fwd, "bwd", bwd)
    print("ranking bigrams")
    for r in fuse([dict(r) for r in rows if len(r["gram"]) == 2]):
        print(" ".join(r["gram"]), repr(r["combined"]))
    print("ranking all")
    for r in fuse([dict(r) for r in rows]):
        print(" ".join(r["gram"]), repr(r["combined"]))


if __name__ == "__main__":
    main()
