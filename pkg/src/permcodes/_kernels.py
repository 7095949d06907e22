"""Hot loops shared by the exhaustive scans and the samplers.

Kernels work on preallocated int64 numpy arrays holding 1-based values
(word letters, one-line images).  Word iteration is done with mixed-radix
odometers rather than repeated unranking; permutations are ranked
lexicographically by their one-line form, which is also the iteration
order of the scans.

Every function below is compiled with numba unless the pure backend is
selected; see _backend.
"""

from __future__ import annotations

import numpy as np

from ._backend import jit

ENC_F1 = 0
ENC_F2 = 1
ENC_F3 = 2
ENC_F4 = 3
ENC_G1 = 4
ENC_G2 = 5
ENC_H1 = 6
ENC_H2 = 7

PROC_CRP = 0
PROC_FELLER = 1


def _unrank_lex_fill_impl(k0, n, out):
    weight = 1
    for i in range(1, n + 1):
        weight *= i
    for i in range(1, n + 1):
        weight //= i
        d = k0 // weight
        out[i - 1] = d + 1
        k0 -= d * weight


def _unrank_revlex_fill_impl(k0, n, out):
    weight = 1
    for i in range(1, n):
        weight *= i
    for i in range(n, 1, -1):
        d = k0 // weight
        out[i - 1] = d + 1
        k0 -= d * weight
        weight //= i - 1
    out[0] = 1


def _advance_lex_impl(w, n):
    i = n - 1
    while i > 0:
        if w[i] < i + 1:
            w[i] += 1
            return
        w[i] = 1
        i -= 1


def _advance_revlex_impl(w, n):
    i = 1
    while i < n:
        if w[i] < i + 1:
            w[i] += 1
            return
        w[i] = 1
        i += 1


def _encode_fill_impl(enc, w, n, out, used):
    if enc == ENC_F1 or enc == ENC_G1:
        out[0] = 1
        length = 1
        for i in range(2, n + 1):
            if enc == ENC_F1:
                pos = length + 1 - w[i - 1]
            else:
                pos = w[i - 1] - 1
            for t in range(length, pos, -1):
                out[t] = out[t - 1]
            out[pos] = i
            length += 1
    elif enc == ENC_F2 or enc == ENC_G2:
        for v in range(1, n + 1):
            used[v] = 0
        for t in range(n):
            i = n - t
            r = w[i - 1]
            c = 0
            v = 0
            for cand in range(1, n + 1):
                if used[cand] == 0:
                    c += 1
                    if c == r:
                        v = cand
                        break
            used[v] = 1
            if enc == ENC_F2:
                out[t] = v
            else:
                out[i - 1] = v
    elif enc == ENC_F3:
        # out doubles as the successor table, which is the one-line form
        for v in range(1, n + 1):
            used[v] = 0
        used[1] = 1
        first = 1
        last = 1
        for i in range(n, 1, -1):
            r = w[i - 1]
            if r == 1:
                out[last - 1] = first
                v = 0
                for cand in range(2, n + 1):
                    if used[cand] == 0:
                        v = cand
                        break
                used[v] = 1
                first = v
                last = v
            else:
                c = 0
                v = 0
                for cand in range(2, n + 1):
                    if used[cand] == 0:
                        c += 1
                        if c == r - 1:
                            v = cand
                            break
                used[v] = 1
                out[last - 1] = v
                last = v
        out[last - 1] = first
    else:  # ENC_F4
        out[0] = 1
        for i in range(2, n + 1):
            r = w[i - 1]
            if r == 1:
                out[i - 1] = i
            else:
                out[i - 1] = out[r - 2]
                out[r - 2] = i


def _perm_rank_impl(p, n):
    r = 0
    for q in range(n):
        c = 0
        for t in range(q + 1, n):
            if p[t] < p[q]:
                c += 1
        r = r * (n - q) + c
    return r


unrank_lex_fill = jit(_unrank_lex_fill_impl)
unrank_revlex_fill = jit(_unrank_revlex_fill_impl)
advance_lex = jit(_advance_lex_impl)
advance_revlex = jit(_advance_revlex_impl)
encode_fill = jit(_encode_fill_impl)
perm_rank = jit(_perm_rank_impl)


def _eval_encoding_impl(enc, wl, wr, n, out, used):
    # h1/h2 consume the shared input index through their own word order;
    # everything else reads the lex-order word
    if enc == ENC_H1:
        encode_fill(ENC_G1, wl, n, out, used)
    elif enc == ENC_H2:
        encode_fill(ENC_G2, wr, n, out, used)
    else:
        encode_fill(enc, wl, n, out, used)


eval_encoding = jit(_eval_encoding_impl)


def _fill_composition_table_impl(outer, inner, n, lo, hi, table):
    wl = np.empty(n, np.int64)
    wr = np.empty(n, np.int64)
    pin = np.empty(n, np.int64)
    pout = np.empty(n, np.int64)
    used = np.zeros(n + 1, np.int64)
    unrank_lex_fill(lo, n, wl)
    unrank_revlex_fill(lo, n, wr)
    for _ in range(lo, hi):
        eval_encoding(inner, wl, wr, n, pin, used)
        eval_encoding(outer, wl, wr, n, pout, used)
        table[perm_rank(pin, n)] = perm_rank(pout, n)
        advance_lex(wl, n)
        advance_revlex(wr, n)


fill_composition_table = jit(_fill_composition_table_impl)


def _spectrum_from_table_impl(table, visited, counts):
    m = table.shape[0]
    for s in range(m):
        if visited[s] == 1:
            continue
        length = 0
        x = s
        while visited[x] == 0:
            visited[x] = 1
            x = table[x]
            length += 1
        counts[length] += length


spectrum_from_table = jit(_spectrum_from_table_impl)


def _h_fixed_count_range_impl(n, lo, hi):
    wl = np.empty(n, np.int64)
    wr = np.empty(n, np.int64)
    p1 = np.empty(n, np.int64)
    p2 = np.empty(n, np.int64)
    used = np.zeros(n + 1, np.int64)
    unrank_lex_fill(lo, n, wl)
    unrank_revlex_fill(lo, n, wr)
    count = 0
    for _ in range(lo, hi):
        encode_fill(ENC_G1, wl, n, p1, used)
        encode_fill(ENC_G2, wr, n, p2, used)
        same = True
        for t in range(n):
            if p1[t] != p2[t]:
                same = False
                break
        if same:
            count += 1
        advance_lex(wl, n)
        advance_revlex(wr, n)
    return count


h_fixed_count_range = jit(_h_fixed_count_range_impl)


def _sample_cycle_types_impl(proc, theta, n, uniforms, out):
    trials = uniforms.shape[0]
    letters = np.empty(n + 1, np.int64)
    cycle_of = np.empty(n + 1, np.int64)
    sizes = np.empty(n + 1, np.int64)
    for t in range(trials):
        for j in range(n):
            out[t, j] = 0
        if proc == PROC_CRP:
            ncyc = 1
            cycle_of[1] = 0
            sizes[0] = 1
            for i in range(2, n + 1):
                u = uniforms[t, i - 2]
                denom = theta + i - 1
                acc = theta / denom
                letter = i  # final bucket absorbs the rounding remainder
                if u < acc:
                    letter = 1
                else:
                    for j in range(1, i - 1):
                        acc += 1.0 / denom
                        if u < acc:
                            letter = j + 1
                            break
                if letter == 1:
                    cycle_of[i] = ncyc
                    sizes[ncyc] = 1
                    ncyc += 1
                else:
                    c = cycle_of[letter - 1]
                    sizes[c] += 1
                    cycle_of[i] = c
            total = 0
            for c in range(ncyc):
                out[t, sizes[c] - 1] += 1
                total += sizes[c]
            assert total == n
        else:
            letters[1] = 1
            ones = 1
            for i in range(2, n + 1):
                u = uniforms[t, i - 2]
                denom = theta + i - 1
                acc = theta / denom
                letter = i  # final bucket absorbs the rounding remainder
                if u < acc:
                    letter = 1
                else:
                    for v in range(2, i):
                        acc += 1.0 / denom
                        if u < acc:
                            letter = v
                            break
                letters[i] = letter
                if letter == 1:
                    ones += 1
            ncyc = 0
            size = 1
            total = 0
            for i in range(n, 1, -1):
                if letters[i] == 1:
                    out[t, size - 1] += 1
                    total += size
                    ncyc += 1
                    size = 1
                else:
                    size += 1
            out[t, size - 1] += 1
            total += size
            ncyc += 1
            assert total == n and ncyc == ones


sample_cycle_types = jit(_sample_cycle_types_impl)
