"""Pure-Python bitmask kernels.

Sets are ints (bit i = element i). A covering is a sequence of member masks.
``_kernels.pyx`` mirrors every function here with the same signature and
results; :mod:`covrough.kernels` picks one at import time.
"""

BACKEND = "python"


def neighborhoods(members, n):
    full = (1 << n) - 1
    out = [full] * n
    for c in members:
        rest = c
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            out[i] &= c
            rest ^= low
    return out


def lower(members, x):
    acc = 0
    for c in members:
        if c & ~x == 0:
            acc |= c
    return acc


def upper_neigh(nbhd, x):
    acc = 0
    while x:
        low = x & -x
        acc |= nbhd[low.bit_length() - 1]
        x ^= low
    return acc


def upper_def3(members, nbhd, x):
    low_x = lower(members, x)
    acc = low_x
    rest = x & ~low_x
    while rest:
        low = rest & -rest
        acc |= nbhd[low.bit_length() - 1]
        rest ^= low
    return acc


def family_unions(members):
    """Union of every sub-family, indexed by sub-family bitmask."""
    m = len(members)
    unions = [0] * (1 << m)
    for fam in range(1, 1 << m):
        low = fam & -fam
        unions[fam] = unions[fam ^ low] | members[low.bit_length() - 1]
    return unions


def upper_subcov(members, x, n):
    full = (1 << n) - 1
    acc = full
    for u in family_unions(members):
        if x & ~u == 0:
            acc &= u
    return acc


def lower_table(members, n):
    size = 1 << n
    acc = [0] * size
    for c in members:
        acc[c] |= c
    for i in range(n):
        bit = 1 << i
        for s in range(size):
            if s & bit:
                acc[s] |= acc[s ^ bit]
    return acc


def upper_neigh_table(nbhd, n):
    size = 1 << n
    acc = [0] * size
    for s in range(1, size):
        low = s & -s
        acc[s] = acc[s ^ low] | nbhd[low.bit_length() - 1]
    return acc


def upper_def3_table(members, nbhd, n):
    low_t = lower_table(members, n)
    out = [0] * (1 << n)
    for s in range(1 << n):
        acc = low_t[s]
        rest = s & ~acc
        while rest:
            low = rest & -rest
            acc |= nbhd[low.bit_length() - 1]
            rest ^= low
        out[s] = acc
    return out


def upper_subcov_table(members, n):
    size = 1 << n
    full = size - 1
    acc = [full] * size
    for u in set(family_unions(members)):
        acc[u] = u
    # superset-intersection transform: acc[s] = AND of reachable unions ⊇ s
    for i in range(n):
        bit = 1 << i
        for s in range(size):
            if not s & bit:
                acc[s] &= acc[s | bit]
    return acc


def covering_families(n):
    """Masks over the 2**n - 1 nonempty subsets whose chosen sets cover U.

    Bit j of a family mask selects the subset with bit pattern ``j + 1``.
    Returned in ascending mask order.
    """
    k = (1 << n) - 1
    full = k
    unions = [0] * (1 << k)
    out = []
    for fam in range(1, 1 << k):
        low = fam & -fam
        u = unions[fam ^ low] | low.bit_length()
        unions[fam] = u
        if u == full:
            out.append(fam)
    return out


def upper_subcov_proper_table(members, n):
    """Like ``upper_subcov_table`` over sub-families other than the whole one.

    Entries are None where only the whole covering covers the subset.
    """
    size = 1 << n
    full = size - 1
    acc = [full] * size
    hit = [False] * size
    for u in set(family_unions(members)[:-1]):
        acc[u] = u
        hit[u] = True
    for i in range(n):
        bit = 1 << i
        for s in range(size):
            if not s & bit:
                acc[s] &= acc[s | bit]
                hit[s] = hit[s] or hit[s | bit]
    return [a if h else None for a, h in zip(acc, hit)]
