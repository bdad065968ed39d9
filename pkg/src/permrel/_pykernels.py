"""Pure-Python kernels.  Same signatures and results as the compiled ``_kernels`` module.

Words are encoded as integers in base ``n`` with 0-based letters, most
significant letter first, so numeric order of codes of equal length is the
lexicographic order of the words.  ``act[a][x]`` is the 0-based image of
letter ``x`` under group element ``a``; element 0 is the identity.
"""

from __future__ import annotations

from array import array

from .errors import BudgetExceeded


def encode(word, n):
    code = 0
    for x in word:
        code = code * n + x
    return code


def decode(code, m, n):
    out = [0] * m
    for p in range(m - 1, -1, -1):
        code, out[p] = divmod(code, n)
    return tuple(out)


def _neighbours(code, m, n, l, act, pw):
    digits = decode(code, m, n)
    for pos in range(m - l + 1):
        window = digits[pos:pos + l]
        base = code
        for q in range(l):
            base -= window[q] * pw[pos + q]
        for img in act[1:]:
            new = base
            for q in range(l):
                new += img[window[q]] * pw[pos + q]
            yield new


def _powers(m, n):
    # pw[p] is the place value of position p
    return [n ** (m - 1 - p) for p in range(m)]


def closure_codes(code, m, n, l, act, cap):
    """Sorted codes of every word reachable from ``code`` by rewrites."""
    if m < l or len(act) == 1:
        return [code]
    pw = _powers(m, n)
    seen = {code}
    stack = [code]
    while stack:
        cur = stack.pop()
        for nb in _neighbours(cur, m, n, l, act, pw):
            if nb not in seen:
                seen.add(nb)
                if len(seen) > cap:
                    raise BudgetExceeded(f"equivalence class exceeds cap of {cap} members")
                stack.append(nb)
    return sorted(seen)


def label_words(m, n, l, act, budget):
    """Class labels for all ``n**m`` words of length ``m``.

    Labels are assigned in order of each class's least code, so label order
    agrees with canonical-form order.  Returns ``(labels, number_of_classes)``.
    """
    total = n ** m
    if total > budget:
        raise BudgetExceeded(f"{n}^{m} = {total} words exceeds enumeration budget {budget}")
    labels = array("q", [-1]) * total
    if m < l or len(act) == 1:
        for c in range(total):
            labels[c] = c
        return labels, total
    pw = _powers(m, n)
    nclasses = 0
    for start in range(total):
        if labels[start] >= 0:
            continue
        labels[start] = nclasses
        stack = [start]
        while stack:
            cur = stack.pop()
            for nb in _neighbours(cur, m, n, l, act, pw):
                if labels[nb] < 0:
                    labels[nb] = nclasses
                    stack.append(nb)
        nclasses += 1
    return labels, nclasses


def sweep_equal(u, v, l, act, mul):
    """Decide equality of two words for abelian ``H`` by the left-to-right window sweep.

    Window ``k`` carries a group element ``τ_k``; letter ``p`` of ``v`` must be the
    image of letter ``p`` of ``u`` under the product of the windows covering ``p``.
    The frontier holds the still-open windows; duplicates are merged, which
    keeps the search polynomial when ``H`` is not semiregular.
    """
    t = len(u)
    if t != len(v):
        return False
    if t < l:
        return tuple(u) == tuple(v)
    size = len(act)
    last = t - l
    frontier = {()}
    for p in range(t):
        x, y = u[p], v[p]
        nxt = set()
        for state in frontier:
            prod = 0
            for a in state:
                prod = mul[prod][a]
            z = act[prod][x]
            if p <= last:
                for tau in range(size):
                    if act[tau][z] == y:
                        new = state + (tau,)
                        nxt.add(new[1:] if p >= l - 1 else new)
            elif z == y:
                nxt.add(state[1:] if p >= l - 1 else state)
        if not nxt:
            return False
        frontier = nxt
    return True
