"""Compiled batch kernels for the hot loops.

Each kernel reimplements, on uint64 counters and flat arrays, exactly the
same algorithms as the pure Python reference paths (``streams.CounterRng``,
``tableaux.sample_tableau``, ``tableaux.tableau_to_word``, ``restriction``):
same random stream function, same draw order, same rejection rule.  The test
suite checks trial-for-trial agreement between the two implementations, so
the statistical acceptance runs exercise both.

Values inside kernels are 0-based; the Python wrappers translate.
"""

import numpy as np
from numba import njit

MASK64 = np.uint64(0xFFFFFFFFFFFFFFFF)
GOLDEN = np.uint64(0x9E3779B97F4A7C15)
TRIAL_STRIDE = np.uint64(0xC2B2AE3D27D4EB4F)
KEY_OFFSET = np.uint64(0xD1B54A32D192ED03)
MIX_A = np.uint64(0xBF58476D1CE4E5B9)
MIX_B = np.uint64(0x94D049BB133111EB)
ONE = np.uint64(1)


@njit(cache=True, inline="always")
def _mix64(z):
    z = (z ^ (z >> np.uint64(30))) * MIX_A
    z = (z ^ (z >> np.uint64(27))) * MIX_B
    return z ^ (z >> np.uint64(31))


@njit(cache=True, inline="always")
def _stream_key(seed, trial):
    return _mix64(seed * GOLDEN + trial * TRIAL_STRIDE + KEY_OFFSET)


@njit(cache=True, inline="always")
def _draw_u64(key, index):
    return _mix64(key + (index + ONE) * GOLDEN)


@njit(cache=True, inline="always")
def _randbelow(key, index, m):
    """Exact uniform int64 in [0, m); returns (value, next index)."""
    um = np.uint64(m)
    rem = (MASK64 % um + ONE) % um
    limit = MASK64 - rem
    while True:
        u = _draw_u64(key, index)
        index += ONE
        if u <= limit:
            return np.int64(u % um), index


@njit(cache=True)
def _sample_word(n, key, index, rowlen, posr, posc, ins, out):
    """Hook walk then reverse insertion; fills ``out`` with 1-based letters.

    ``rowlen`` (n-1), ``posr``/``posc`` (N+1), ``ins`` ((n-1) x (n-1)) are
    scratch arrays reused across trials.  Returns the next draw index.
    """
    depth = n - 1
    total = (n * (n - 1)) // 2
    for i in range(depth):
        rowlen[i] = depth - i
    # place values largest first by the greedy hook walk
    for value in range(total, 0, -1):
        r, index = _randbelow(key, index, value)
        i = 0
        while r >= rowlen[i]:
            r -= rowlen[i]
            i += 1
        j = r
        while True:
            arm = rowlen[i] - 1 - j
            leg = 0
            while i + 1 + leg < depth and rowlen[i + 1 + leg] > j:
                leg += 1
            if arm == 0 and leg == 0:
                break
            t, index = _randbelow(key, index, arm + leg)
            if t < arm:
                j += 1 + t
            else:
                i += 1 + (t - arm)
        posr[value] = i
        posc[value] = j
        rowlen[i] -= 1
    # reverse insertion out of the superstandard staircase
    for i in range(depth):
        rowlen[i] = depth - i
        for j in range(depth - i):
            ins[i, j] = i + j + 1
    for k in range(total, 0, -1):
        r = posr[k]
        c = posc[k]
        y = ins[r, c]
        rowlen[r] -= 1
        for q in range(r - 1, -1, -1):
            length = rowlen[q]
            idx = length - 1
            while ins[q, idx] >= y:
                idx -= 1
            if idx + 1 < length and ins[q, idx + 1] == y:
                y = ins[q, idx]
            else:
                tmp = ins[q, idx]
                ins[q, idx] = y
                y = tmp
        out[k - 1] = y
    return index


@njit(cache=True)
def word_codes_kernel(n, seed, t0, t1, out):
    """Sample one word per trial in [t0, t1); pack letters 3 bits each."""
    depth = n - 1
    total = (n * (n - 1)) // 2
    rowlen = np.zeros(depth, dtype=np.int64)
    posr = np.zeros(total + 1, dtype=np.int64)
    posc = np.zeros(total + 1, dtype=np.int64)
    ins = np.zeros((depth, depth), dtype=np.int64)
    word = np.zeros(total, dtype=np.int64)
    useed = np.uint64(seed)
    for t in range(t0, t1):
        key = _stream_key(useed, np.uint64(t))
        _sample_word(n, key, np.uint64(0), rowlen, posr, posc, ins, word)
        code = np.uint64(0)
        for p in range(total):
            code = (code << np.uint64(3)) | np.uint64(word[p])
        out[t - t0] = code


@njit(cache=True)
def mc_class_kernel(n, seed, t0, t1, subsets, class_table, out):
    """Per trial: uniform word, uniform 4-subset, classify the restriction.

    ``subsets`` is (C, 4) with 0-based sorted wire values; ``out`` has length
    5 and collects class counts, with index 4 for impossible codes.
    """
    depth = n - 1
    total = (n * (n - 1)) // 2
    nsub = subsets.shape[0]
    rowlen = np.zeros(depth, dtype=np.int64)
    posr = np.zeros(total + 1, dtype=np.int64)
    posc = np.zeros(total + 1, dtype=np.int64)
    ins = np.zeros((depth, depth), dtype=np.int64)
    word = np.zeros(total, dtype=np.int64)
    image = np.zeros(n, dtype=np.int64)
    pos = np.zeros(n, dtype=np.int64)
    useed = np.uint64(seed)
    for t in range(t0, t1):
        key = _stream_key(useed, np.uint64(t))
        index = _sample_word(n, key, np.uint64(0), rowlen, posr, posc, ins, word)
        s, index = _randbelow(key, index, nsub)
        v0 = subsets[s, 0]
        v1 = subsets[s, 1]
        v2 = subsets[s, 2]
        v3 = subsets[s, 3]
        mask = (ONE << np.uint64(v0)) | (ONE << np.uint64(v1)) | (ONE << np.uint64(v2)) | (ONE << np.uint64(v3))
        for v in range(n):
            image[v] = v
            pos[v] = v
        code = np.int64(0)
        for step in range(total):
            p = word[step] - 1
            a = image[p]
            b = image[p + 1]
            if (mask >> np.uint64(a)) & ONE and (mask >> np.uint64(b)) & ONE:
                j = 0
                if pos[v0] <= p:
                    j += 1
                if pos[v1] <= p:
                    j += 1
                if pos[v2] <= p:
                    j += 1
                if pos[v3] <= p:
                    j += 1
                code = (code << 2) | j
            image[p] = b
            image[p + 1] = a
            pos[a] = p + 1
            pos[b] = p
        cls = class_table[code]
        if cls < 0:
            out[4] += 1
        else:
            out[cls] += 1


@njit(cache=True)
def count_fragment_kernel(n, prefix, subsets, pair_start, pair_list, class_table, class_out, hist_out):
    """Exhaustive DFS over reduced word completions of ``prefix``.

    Letters in ``prefix`` are 0-based positions.  For every completed word
    the per-class 4-subset counts are accumulated into ``class_out`` (length
    4) and the word's reentrant subset count into ``hist_out``.  Returns the
    number of words visited.

    Subset membership codes are maintained incrementally: each 4-subset packs
    its six crossing letters into a base 4 integer, complete once >= 1024;
    ``pair_start``/``pair_list`` index, for each value pair a * n + b, the
    subsets containing both.
    """
    total = (n * (n - 1)) // 2
    nsub = subsets.shape[0]
    image = np.zeros(n, dtype=np.int64)
    pos = np.zeros(n, dtype=np.int64)
    codes = np.zeros(nsub, dtype=np.int64)
    cur = np.zeros(4, dtype=np.int64)
    applied = np.zeros(total + 1, dtype=np.int64)
    nexttry = np.zeros(total + 1, dtype=np.int64)
    for v in range(n):
        image[v] = v
        pos[v] = v
    d0 = prefix.shape[0]
    for step in range(d0):
        p = prefix[step]
        a = image[p]
        b = image[p + 1]
        pairid = a * n + b
        for ii in range(pair_start[pairid], pair_start[pairid + 1]):
            s = pair_list[ii]
            j = 0
            if pos[subsets[s, 0]] <= p:
                j += 1
            if pos[subsets[s, 1]] <= p:
                j += 1
            if pos[subsets[s, 2]] <= p:
                j += 1
            if pos[subsets[s, 3]] <= p:
                j += 1
            code = (codes[s] << 2) | j
            codes[s] = code
            if code >= 1024:
                cur[class_table[code]] += 1
        image[p] = b
        image[p + 1] = a
        pos[a] = p + 1
        pos[b] = p
    words = np.int64(0)
    depth = d0
    nexttry[d0] = 0
    while True:
        if depth == total:
            words += 1
            class_out[0] += cur[0]
            class_out[1] += cur[1]
            class_out[2] += cur[2]
            class_out[3] += cur[3]
            hist_out[cur[0]] += 1
            depth -= 1
            if depth < d0:
                break
        else:
            p = nexttry[depth]
            adv = np.int64(-1)
            while p < n - 1:
                if image[p] < image[p + 1]:
                    adv = p
                    break
                p += 1
            if adv >= 0:
                # apply letter adv and descend
                a = image[adv]
                b = image[adv + 1]
                pairid = a * n + b
                for ii in range(pair_start[pairid], pair_start[pairid + 1]):
                    s = pair_list[ii]
                    j = 0
                    if pos[subsets[s, 0]] <= adv:
                        j += 1
                    if pos[subsets[s, 1]] <= adv:
                        j += 1
                    if pos[subsets[s, 2]] <= adv:
                        j += 1
                    if pos[subsets[s, 3]] <= adv:
                        j += 1
                    code = (codes[s] << 2) | j
                    codes[s] = code
                    if code >= 1024:
                        cur[class_table[code]] += 1
                image[adv] = b
                image[adv + 1] = a
                pos[a] = adv + 1
                pos[b] = adv
                applied[depth] = adv
                nexttry[depth] = adv + 1
                depth += 1
                nexttry[depth] = 0
                continue
            depth -= 1
            if depth < d0:
                break
        # undo the letter applied at this depth, then resume its scan
        p = applied[depth]
        b = image[p]
        a = image[p + 1]
        image[p] = a
        image[p + 1] = b
        pos[a] = p
        pos[b] = p + 1
        pairid = a * n + b
        for ii in range(pair_start[pairid], pair_start[pairid + 1]):
            s = pair_list[ii]
            code = codes[s]
            if code >= 1024:
                cur[class_table[code]] -= 1
            codes[s] = code >> 2
    return words
